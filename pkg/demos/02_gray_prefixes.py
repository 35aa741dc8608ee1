"""
Gray prefixes for the weighting index
=====================================

The index ``z`` is written in base ``q`` (most significant digit first) and
then converted to a q-ary Gray word, so consecutive prefixes change in a
single position by exactly one unit of weight.
"""

from qary_cw import gray_decode, gray_table, index_to_sp, seq, weighting_sequence, word_to_index

##############################################################################
# The (2,3) table: index, (s, p), weighting sequence, base-3 word, Gray word.
for z, w in enumerate(gray_table(2, 3)):
    idx = index_to_sp(z, 3, 3)
    print(z, f"{idx.s},{idx.p}", weighting_sequence(idx), w.source, w.word)

##############################################################################
# Going back: a Gray word recovers the index.
g = seq("31", 4)
d = gray_decode(g)
print(g, "->", d, "-> z =", word_to_index(d))

##############################################################################
# Adjacent Gray words differ in one position and by one unit of weight.
words = [w.word for w in gray_table(3, 4)]
print("weight steps:", sorted({b.weight - a.weight for a, b in zip(words, words[1:])}))
