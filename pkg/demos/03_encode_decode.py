"""
Encoding and decoding constant-weight words
===========================================

A codeword is ``[u | g | y]``: a redundant vector ``u`` of length ``e``, the
Gray prefix ``g`` of the chosen index and the shifted payload ``y``. The
encoder takes the smallest index whose weight gap fits into ``u``.
"""

from qary_cw import decode, decode_steps, derive_params, encode, enumerate_encodings, seq

##############################################################################
# Target weight 8 for a ternary word of length 3 with one redundant digit.
params = derive_params(q=3, k=3, e=1, W=8)
print(params)
x = seq("212", 3)
trace = enumerate_encodings(x, params)
for r in trace.rows:
    mark = "*" if r.flagged else ""
    print(r.z, r.y, r.c, r.weight, mark)

c, z = encode(x, params)
print("encoded:", c, "at z =", z)
print("decoded:", decode(c, params))

##############################################################################
# A longer redundant vector reaches heavier weights.
params = derive_params(q=3, k=3, e=2, W=12)
print(encode(x, params))

##############################################################################
# Decoding drops ``u``, inverts the Gray prefix and subtracts the weighting
# sequence. The intermediate values for a quaternary codeword:
print(decode_steps(seq("2313113", 4), derive_params(q=4, k=4, e=1)))
