#!/usr/bin/env python3
"""Worked example: one object changes blocks, both matrices are patched in place of a rebuild."""

from covrough import CoveringSpace, UpdateEvent, apply_update, build_gamma, build_pi, char_vector, matrix_rep
from covrough.charmat import fifth_approx, second_approx, sixth_approx
from covrough.dynamic import delta_gamma, delta_pi, update_gamma, update_pi


def show(title, mat):
    print(f"{title}\n{mat.format()}\n")


def labels(v):
    return "{" + ",".join(f"x{i + 1}" for i in v.indices()) + "}"


space = CoveringSpace.build(4, {"C": [[0, 3], [0, 1, 3], [2, 3]]})
ev = UpdateEvent(2, {"C": {0, 1}})  # x3 leaves its block and joins the other two
revised = apply_update(space, ev)
print("blocks before:", space.blocks())
print("blocks after: ", revised.blocks(), "\n")

m_new = matrix_rep(revised)
gamma, pi = build_gamma(space), build_pi(space)
show("Gamma", gamma)
print("Gamma correction, row 3:", delta_gamma(gamma, m_new, 2)[2].tolist(), "\n")
show("Gamma after update", update_gamma(gamma, m_new, 2))
show("Pi", pi)
d = delta_pi(pi, m_new, 2)
print("Pi correction, row 3:", d[2].tolist(), " column 3:", d[:, 2].tolist(), "\n")
pi_new = update_pi(pi, m_new, 2)
show("Pi after update", pi_new)

x = char_vector([2, 3], 4)
for name, result in (
    ("second", second_approx(update_gamma(gamma, m_new, 2), x)),
    ("fifth", fifth_approx(pi_new, x)),
    ("sixth", sixth_approx(pi_new, x)),
):
    print(f"{name:>6}  X={labels(x)}  upper={labels(result.upper)}  lower={labels(result.lower)}")
