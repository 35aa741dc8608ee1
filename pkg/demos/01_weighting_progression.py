"""
Weight progression under weighting sequences
============================================

Adding the ``kq`` weighting sequences ``b(z)`` to an information word walks
its weight along a path of +1 steps and -(q-1) drops. Every weight between
the minimum and maximum of that path gets visited.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from qary_cw import all_weighted_outputs, balancing_value, index_to_sp, seq, weighting_sequence

##############################################################################
# A ternary word of length four. ``k = 4`` is not a power of 3, which is fine
# here: the power-of-q restriction only matters once a Gray prefix is added.
x = seq("2102", 3)
rows = all_weighted_outputs(x)
for r in rows:
    b = weighting_sequence(index_to_sp(r.z, len(x), x.q))
    print(f"{r.z:2d}  {x} + {b} = {r.y}  w={r.weight}")

##############################################################################
# The balancing weight for this length.
beta = balancing_value(len(x), x.q)
print("balanced at", beta, "for z in", [r.z for r in rows if r.weight == beta])

##############################################################################
# Plot weight against z, with the balancing level drawn across.
fig, ax = plt.subplots(figsize=(5, 3))
ax.plot([r.z for r in rows], [r.weight for r in rows], marker="o")
ax.axhline(float(beta), color="red")
ax.set_xlabel("z")
ax.set_ylabel("w(y)")
fig.tight_layout()
fig.savefig("weight_progression.png")
