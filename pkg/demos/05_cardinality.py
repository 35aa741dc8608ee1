"""
Counting constant-weight words
==============================

Any code of weight-``W`` words of length ``n`` carrying ``k`` information
symbols needs at least ``q**k`` such words. The counts below come from an
exact dynamic program over bounded compositions.
"""

from qary_cw.codec import derive_params
from qary_cw.oracle import cardinality_report, min_redundancy_floor, policy_weight

for q, t in [(2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (4, 1)]:
    k = q**t
    n = derive_params(q, k).n
    for policy in ("low", "balanced", "high"):
        W = policy_weight(n, q, policy)
        rep = cardinality_report(n, W, q, k)
        print(f"q={q} n={n} k={k} W={W:3d} ({policy:8s}) N1={rep.n1:>8d} N2={rep.n2:>6d} feasible={rep.feasible}")

##############################################################################
# Smallest redundancy allowed by counting alone, against what the Gray-prefix
# construction spends (log_q k + e + 1 with e = 1).
for q, t in [(2, 2), (2, 4), (3, 2), (4, 2)]:
    k = q**t
    print(f"q={q} k={k}: counting floor r={min_redundancy_floor(k, q)}, construction r={derive_params(q, k).r}")
