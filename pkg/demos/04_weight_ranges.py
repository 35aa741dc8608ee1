"""
Which weights can every input reach?
====================================

The closed-form weight intervals are compared with exhaustive sweeps over
all ``q**k`` inputs. ``guaranteed`` holds the weights every input can be
encoded to; ``achievable_union`` those at least one input can reach.
"""

from qary_cw.oracle import audit_bounds, exhaustive_roundtrip, guaranteed_weight_range

for q, k, e in [(2, 4, 2), (3, 3, 1), (3, 3, 2), (4, 4, 1)]:
    rep = guaranteed_weight_range(q, k, e)
    print(f"q={q} k={k} e={e}: guaranteed {rep.interval}, union "
          f"[{min(rep.achievable_union)}, {max(rep.achievable_union)}]")
    for a in audit_bounds(rep):
        print(f"    {a.formula_tag:5s} [{a.lower}, {a.upper}]  covers max: {a.upper_covers_oracle}")

##############################################################################
# Every guaranteed weight survives a full encode/decode sweep.
rep = guaranteed_weight_range(4, 4, 1)
for W in sorted(rep.guaranteed):
    rt = exhaustive_roundtrip(4, 4, 1, W)
    print(W, rt.checked, "ok" if rt.ok else rt.violations[:3])
