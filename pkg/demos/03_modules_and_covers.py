# The module engine: Hom spaces, radicals, projective covers, resolutions,
# duality and isomorphism testing.

import numpy as np

from ladderkit.algebra import build_triangular, dual_numbers_algebra, ground_field_algebra, opposite
from ladderkit.fixtures import load_fixture
from ladderkit.homological import projective_dimension
from ladderkit.linalg import Field
from ladderkit.modules import (
    dual,
    hom_space,
    is_injective,
    is_isomorphic,
    is_projective,
    minimal_resolution,
    projective_cover,
    projective_indecomposables,
    radical,
    random_module,
    regular_module,
    simples,
)

F = Field(101)
pp, _ = load_fixture("preproj-a2", F)
dn = dual_numbers_algebra(F)
t2 = build_triangular(ground_field_algebra(F), 2)

# --- projectives and simples -----------------------------------------------------
projs = projective_indecomposables(pp)
sims = simples(pp)
print("projective indecomposables of the square algebra:", [p.dim for p in projs])
print("simples:", [s.dim for s in sims])

# Hom spaces are solved exactly; the regular module corepresents the identity
reg = regular_module(pp)
m = random_module(pp, np.random.default_rng(0))
print("dim Hom(regular, M) =", len(hom_space(reg, m)), "= dim M =", m.dim)
print("dim Hom(P1, P2) =", len(hom_space(projs[0], projs[1])))

# --- radicals and covers -----------------------------------------------------------
s = simples(dn)[0]
cover, surj = projective_cover(s)
print("\ncover of the simple over k[x]/(x^2): dim", cover.dim, "(the regular module)")
print("radical of that cover: dim", radical(cover).source.dim)
print("is the simple projective?", is_projective(s))

# --- resolutions ---------------------------------------------------------------------
res = minimal_resolution(s, 6)
print("\nminimal resolution of the simple: term dims", [t.dim for t in res.terms])
print("projective dimension:", projective_dimension(s, 6).describe(), "(periodic syzygies)")
s1 = simples(t2)[0]
print("over T2 the first simple has pd", projective_dimension(s1, 6).describe())

# --- duality ---------------------------------------------------------------------------
d = dual(regular_module(dn))
print("\nD(regular) over the opposite of k[x]/(x^2) is injective:", is_injective(dual(d)))
print("double dual is the identity up to isomorphism:",
      is_isomorphic(m, dual(dual(m)), seed=0).is_yes)

# --- randomized isomorphism testing with honest verdicts --------------------------------
r = is_isomorphic(projs[0], projs[1], seed=0)
print("\nP1 vs P2:", r.kind, "--", r.certificate)
r2 = is_isomorphic(m, m, seed=0)
print("M vs itself:", r2.kind, "(invertible intertwiner found, an exact proof)")
