# Building the algebras: structure constants, bound quivers, block matrix
# rings, corners and quotients.
#
# Every constructor validates associativity, the unit axioms and the
# distinguished idempotent system eagerly, so a typo in structure constants
# fails loudly at construction time.

import numpy as np

from ladderkit.algebra import (
    Idempotent,
    QuiverPresentation,
    algebra_from_quiver,
    build_ideal_matrix_algebra,
    build_morita_square,
    build_triangular,
    corner,
    dual_numbers_algebra,
    enveloping,
    ground_field_algebra,
    opposite,
    quotient_by_idempotent_ideal,
)
from ladderkit.linalg import Field

F = Field(101)
k = ground_field_algebra(F)

# --- path algebras of bound quivers ------------------------------------------------
# two vertices, one arrow: the path algebra is the lower triangular 2x2 ring
a2 = algebra_from_quiver(QuiverPresentation(2, [(0, 1, "a")], path_length_bound=2), F)
print("path algebra of 1 -> 2:", a2.dim, "basis", a2.labels)

# arrows both ways with both two-step cycles killed: the 4-dimensional
# self-injective algebra whose modules are pairs (X, Y, f, g) with fg = gf = 0
pp = build_morita_square(k)
print("square-shaped algebra:", pp.dim, "basis", pp.labels)

# a loop with x^2 = 0 is the dual numbers
dn = dual_numbers_algebra(F)
x = dn.element_from_label("x")
print("dual numbers: x*x =", dn.multiply(x, x))

# --- triangular and block matrix rings -----------------------------------------------
t3 = build_triangular(k, 3)
print("\nT3(k): dim", t3.dim, "with", len(t3.prim_idempotents), "diagonal idempotents")

# the 2x2 ring with the radical of k[x]/(x^2) above the diagonal: the central
# worked example for exact ladder heights (l = 1, r = 3)
ideal = F.asarray(x).reshape(2, 1)
g = build_ideal_matrix_algebra(dn, ideal, 2)
print("block ring over the dual numbers: dim", g.dim, "=", "2 + 1 + 2 + 2")

# chain variant: a decreasing chain of ideals, one per column
t2 = build_triangular(k, 2)
i1 = np.stack([t2.element_from_label("E[2,1]:0"), t2.element_from_label("E[2,2]:0")], axis=1)
i2 = F.asarray(t2.element_from_label("E[2,1]:0")).reshape(3, 1)
chain = build_ideal_matrix_algebra(t2, [i1, i2], 3)
print("ideal-chain ring over T2: dim", chain.dim)

# --- corners and quotients -----------------------------------------------------------
# the (2,2)-corner of the block ring recovers the base, and the quotient by
# the ideal it generates is the ground field
f_idem = Idempotent(g, g.prim_idempotents[1])
gamma, emb = corner(g, f_idem)
sigma, proj = quotient_by_idempotent_ideal(g, f_idem)
print("\ncorner dim:", gamma.dim, "(the base)   quotient dim:", sigma.dim)
print("ideal dim inside the block ring:", proj.ideal_rows.shape[0])

# --- opposite and enveloping algebras ---------------------------------------------------
print("\nopposite of T3 has the transposed multiplication table:",
      np.array_equal(opposite(t3).mult[0, 1], t3.mult[1, 0]))
env = enveloping(t2, pp)
print("enveloping algebra T2 (x) (4-dim)^op: dim", env.dim, "=", t2.dim, "*", pp.dim)
