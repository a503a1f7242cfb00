"""Finite-dimensional modules, bimodules, Hom spaces, covers and resolutions.

A left module is one action matrix per algebra basis element.  A bimodule
stores its two one-sided actions; the left module over the enveloping algebra
A (x) B^op (fixed Kronecker order) is only materialized when two bimodules
must be compared, so large enveloping algebras never arise implicitly.
Everything reduces to exact linear algebra: Hom spaces are intertwiner
kernels, tensor products are quotients by balancing relations, projectivity
is decided by projective-cover dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .algebra import Algebra, AlgebraError, FieldRestrictionError, enveloping, ground_field_algebra, opposite
from .linalg import (
    Field,
    column_space_basis,
    intersect_kernels,
    kernel_basis,
    left_inverse,
    rref,
    solve,
)

__all__ = [
    "Module",
    "ModuleMap",
    "Bimodule",
    "Resolution",
    "regular_module",
    "regular_bimodule",
    "zero_module",
    "direct_sum",
    "submodule",
    "quotient_module",
    "module_span_rows",
    "hom_space",
    "HomBasis",
    "algebra_radical_rows",
    "radical",
    "projective_indecomposables",
    "simples",
    "simples_by_idempotent",
    "projective_cover",
    "is_projective",
    "minimal_resolution",
    "dual",
    "is_injective",
    "hom_into_regular",
    "tensor_over",
    "TensorData",
    "hom_module",
    "is_isomorphic",
    "bimodules_isomorphic",
    "IsoResult",
    "serialize_module",
    "serialize_map",
    "random_module",
    "random_short_exact_sequence",
]


class Module:
    """Left module over an algebra: one dim x dim action matrix per basis element."""

    def __init__(self, algebra: Algebra, action: np.ndarray, _validate=True):
        self.algebra = algebra
        f = algebra.field
        self.action = f.asarray(action)
        if self.action.ndim != 3 or self.action.shape[0] != algebra.dim or self.action.shape[1] != self.action.shape[2]:
            raise AlgebraError(f"action array has shape {self.action.shape}, need ({algebra.dim}, n, n)")
        self.dim = self.action.shape[1]
        self.action.setflags(write=False)
        if _validate:
            self._validate()

    def _validate(self):
        f = self.algebra.field
        if self.algebra.dim == 0:
            if self.dim != 0:
                raise AlgebraError("nonzero module over the zero algebra")
            return
        unit_act = self.act_vector(self.algebra.unit)
        if not f.equal(unit_act, f.eye(self.dim)):
            raise AlgebraError("unit does not act as the identity")
        lhs = f.normalize(np.einsum("iab,jbc->ijac", self.action, self.action))
        rhs = f.normalize(np.einsum("ijk,kac->ijac", self.algebra.mult, self.action))
        if not f.equal(lhs, rhs):
            bad = np.nonzero(f.normalize(lhs - rhs))
            raise AlgebraError(f"representation property fails at basis pair ({bad[0][0]}, {bad[1][0]})")

    def act_vector(self, x) -> np.ndarray:
        """Matrix by which the algebra element with coefficient vector x acts."""
        return self.algebra.field.normalize(np.einsum("i,iab->ab", x, self.action))

    @property
    def field(self) -> Field:
        return self.algebra.field

    def __repr__(self):
        return f"Module(dim={self.dim} over {self.algebra!r})"


class ModuleMap:
    """A linear map intertwining two modules over the same algebra."""

    def __init__(self, source: Module, target: Module, matrix: np.ndarray, _validate=True):
        if not source.algebra.same_as(target.algebra):
            raise AlgebraError("module map needs source and target over the same algebra")
        self.source = source
        self.target = target
        f = source.field
        self.matrix = f.asarray(matrix).reshape(target.dim, source.dim)
        self.matrix.setflags(write=False)
        if _validate:
            self._validate()

    def _validate(self):
        f = self.source.field
        for g in self.source.algebra.generators():
            lhs = f.matmul(self.matrix, self.source.act_vector(g))
            rhs = f.matmul(self.target.act_vector(g), self.matrix)
            if not f.equal(lhs, rhs):
                raise AlgebraError("matrix does not intertwine the actions")

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        if not other.target.algebra.same_as(self.source.algebra) or other.target.dim != self.source.dim:
            raise AlgebraError("maps not composable")
        return ModuleMap(other.source, self.target, self.source.field.matmul(self.matrix, other.matrix), _validate=False)

    @property
    def rank(self) -> int:
        return rref(self.matrix, self.source.field).rank

    def is_injective(self) -> bool:
        return self.rank == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.rank == self.source.dim

    def __repr__(self):
        return f"ModuleMap({self.source.dim} -> {self.target.dim})"


class Bimodule:
    """(A, B)-bimodule stored by its one-sided actions.

    left_action[i] is the matrix of the i-th basis element of A acting on the
    left; right_action[j] is the matrix of x -> x.b_j.  The validation checks
    both representation properties and that the actions commute (on generator
    pairs, which suffices by bilinearity).
    """

    def __init__(self, left: Algebra, right: Algebra, left_action, right_action, _validate=True):
        if left.field != right.field:
            raise AlgebraError("bimodule factors need a common field")
        f = left.field
        self.left = left
        self.right = right
        self.left_action = f.asarray(left_action)
        self.right_action = f.asarray(right_action)
        self.dim = self.left_action.shape[1] if left.dim else self.right_action.shape[1]
        self._env: Optional[Algebra] = None
        self._env_module: Optional[Module] = None
        if _validate:
            Module(left, self.left_action)
            Module(opposite(right), self.right_action)
            for g in left.generators():
                lg = self.left_action_matrix(g)
                for h in right.generators():
                    rh = self.right_action_matrix(h)
                    if not f.equal(f.matmul(lg, rh), f.matmul(rh, lg)):
                        raise AlgebraError("left and right actions do not commute")

    @property
    def field(self) -> Field:
        return self.left.field

    def left_action_matrix(self, x) -> np.ndarray:
        return self.field.normalize(np.einsum("i,iab->ab", x, self.left_action))

    def right_action_matrix(self, y) -> np.ndarray:
        return self.field.normalize(np.einsum("j,jab->ab", y, self.right_action))

    def left_restrict(self) -> Module:
        return Module(self.left, self.left_action, _validate=False)

    def right_restrict(self) -> Module:
        """The right B-module structure, as a left module over B^op."""
        return Module(opposite(self.right), self.right_action, _validate=False)

    def flip(self) -> "Bimodule":
        """The same space as a (B^op, A^op)-bimodule; pure data swap."""
        return Bimodule(opposite(self.right), opposite(self.left), self.right_action, self.left_action, _validate=False)

    def env_module(self, env: Optional[Algebra] = None) -> Module:
        """The left module over A (x) B^op; env may be supplied to share one
        algebra object across many bimodules."""
        if env is None:
            if self._env is None:
                self._env = enveloping(self.left, self.right)
            env = self._env
        if self._env_module is None or not self._env_module.algebra.same_as(env):
            f = self.field
            act = f.normalize(np.einsum("iab,jbc->ijac", self.left_action, self.right_action))
            act = act.reshape(self.left.dim * self.right.dim, self.dim, self.dim)
            self._env_module = Module(env, act, _validate=False)
        return self._env_module

    def __repr__(self):
        return f"Bimodule(dim={self.dim}, left {self.left!r}, right {self.right!r})"


def regular_module(a: Algebra) -> Module:
    return Module(a, a.left_mult, _validate=False)


def regular_bimodule(a: Algebra) -> Bimodule:
    return Bimodule(a, a, a.left_mult, a.right_mult, _validate=False)


def zero_module(a: Algebra) -> Module:
    return Module(a, a.field.zeros(a.dim, 0, 0), _validate=False)


def direct_sum(mods: Sequence[Module]) -> Module:
    if not mods:
        raise AlgebraError("direct sum needs at least one summand")
    a = mods[0].algebra
    f = a.field
    total = sum(m.dim for m in mods)
    act = f.zeros(a.dim, total, total)
    off = 0
    for m in mods:
        act[:, off : off + m.dim, off : off + m.dim] = m.action
        off += m.dim
    return Module(a, act, _validate=False)


def module_span_rows(m: Module, vectors: np.ndarray) -> np.ndarray:
    """Row basis of the submodule generated by the given row vectors."""
    f = m.field
    if vectors.size == 0:
        return f.zeros(0, m.dim)
    r = rref(vectors.reshape(-1, m.dim), f)
    rows = r.matrix[: r.rank]
    while rows.shape[0]:
        new = f.normalize(np.einsum("iab,rb->ira", m.action, rows)).reshape(-1, m.dim)
        r = rref(np.concatenate([rows, new], axis=0), f)
        if r.rank == rows.shape[0]:
            break
        rows = r.matrix[: r.rank]
    return rows


def submodule(m: Module, incl_cols: np.ndarray) -> tuple[Module, ModuleMap]:
    """Module structure on an invariant subspace given by full-column-rank columns."""
    f = m.field
    s = incl_cols.shape[1]
    if s == 0:
        sub = zero_module(m.algebra)
        return sub, ModuleMap(sub, m, f.zeros(m.dim, 0), _validate=False)
    x = left_inverse(incl_cols, f)
    act = f.zeros(m.algebra.dim, s, s)
    for i in range(m.algebra.dim):
        moved = f.matmul(m.action[i], incl_cols)
        act[i] = f.matmul(x, moved)
        if not f.equal(f.matmul(incl_cols, act[i]), moved):
            raise AlgebraError("subspace is not invariant under the action")
    sub = Module(m.algebra, act, _validate=False)
    return sub, ModuleMap(sub, m, incl_cols, _validate=False)


def _complement_projection(f: Field, sub_rows: np.ndarray, dim: int):
    """Projection/section onto the non-pivot complement of a row span."""
    if sub_rows.size:
        r = rref(sub_rows, f)
        rows, piv = r.matrix[: r.rank], r.pivots
    else:
        rows, piv = f.zeros(0, dim), ()
    free = [c for c in range(dim) if c not in piv]
    q = len(free)
    proj = f.zeros(q, dim)
    for t, fc in enumerate(free):
        proj[t, fc] = f.one
        for i, pc in enumerate(piv):
            proj[t, pc] = f.normalize(-rows[i, fc])
    sect = f.zeros(dim, q)
    for t, fc in enumerate(free):
        sect[fc, t] = f.one
    return proj, sect


def quotient_module(m: Module, sub_rows: np.ndarray) -> tuple[Module, ModuleMap]:
    """Quotient by an invariant subspace given as a row span; deterministic
    complement basis = non-pivot coordinates of the rref.  The returned
    projection map carries its coordinate section as .section."""
    f = m.field
    proj, sect = _complement_projection(f, sub_rows, m.dim)
    q = proj.shape[0]
    act = f.zeros(m.algebra.dim, q, q)
    for i in range(m.algebra.dim):
        act[i] = f.matmul(proj, f.matmul(m.action[i], sect))
    quot = Module(m.algebra, act, _validate=False)
    proj_map = ModuleMap(m, quot, proj, _validate=False)
    proj_map.section = sect
    return quot, proj_map


# -- Hom spaces ---------------------------------------------------------------


def hom_space(m: Module, n: Module) -> list[ModuleMap]:
    """Basis of Hom(m, n) solved from the intertwining conditions.

    Conditions are imposed for a generating set of the algebra only, which is
    equivalent to imposing them for every basis element.
    """
    if not m.algebra.same_as(n.algebra):
        raise AlgebraError("hom_space needs modules over the same algebra")
    f = m.field
    if m.dim == 0 or n.dim == 0:
        return []
    constraints = []
    eye_m, eye_n = f.eye(m.dim), f.eye(n.dim)
    for g in m.algebra.generators():
        am = m.act_vector(g)
        an = n.act_vector(g)
        constraints.append(f.normalize(np.kron(eye_n, am.T) - np.kron(an, eye_m)))
    basis = intersect_kernels(constraints, n.dim * m.dim, f)
    out = []
    for t in range(basis.shape[1]):
        out.append(ModuleMap(m, n, basis[:, t].reshape(n.dim, m.dim), _validate=False))
    return out


@dataclass
class HomBasis:
    """Hom-space basis with a coordinate extractor (left inverse of the vec stack)."""

    maps: list
    stack: np.ndarray  # (target_dim*source_dim, h)
    extract: np.ndarray  # (h, target_dim*source_dim)

    @classmethod
    def of(cls, m: Module, n: Module) -> "HomBasis":
        maps = hom_space(m, n)
        f = m.field
        h = len(maps)
        stack = f.zeros(n.dim * m.dim, h)
        for s, mp in enumerate(maps):
            stack[:, s] = mp.matrix.reshape(-1)
        extract = left_inverse(stack, f) if h else f.zeros(0, n.dim * m.dim)
        return cls(maps, stack, extract)

    def coords(self, mat: np.ndarray, f: Field) -> np.ndarray:
        return f.matmul(self.extract, mat.reshape(-1))


# -- radical, covers, projectivity --------------------------------------------


def algebra_radical_rows(a: Algebra) -> np.ndarray:
    """Row basis of the Jacobson radical via the trace form of the regular
    representation; exact for char 0 or p > dim."""
    f = a.field
    if f.is_prime_field and f.p <= a.dim:
        raise FieldRestrictionError(f"trace-form radical needs p > dim ({f.p} <= {a.dim})")
    if a.dim == 0:
        return f.zeros(0, 0)
    t = f.normalize(np.einsum("iab,jba->ij", a.left_mult, a.left_mult))
    return kernel_basis(t, f).T


def radical(m: Module) -> ModuleMap:
    """Inclusion of rad(M) = J(algebra) . M."""
    f = m.field
    jrows = algebra_radical_rows(m.algebra)
    if jrows.shape[0] == 0 or m.dim == 0:
        sub = zero_module(m.algebra)
        return ModuleMap(sub, m, f.zeros(m.dim, 0), _validate=False)
    mats = [m.act_vector(jrows[t]) for t in range(jrows.shape[0])]
    incl = column_space_basis(np.concatenate(mats, axis=1), f)
    _, inclusion = submodule(m, incl)
    return inclusion


def projective_indecomposables(a: Algebra) -> list[Module]:
    """The modules A.e_i for the distinguished primitive idempotents, with
    their embeddings into the regular module attached."""
    reg = regular_module(a)
    out = []
    for e in a.prim_idempotents:
        cols = column_space_basis(a.right_mult_matrix(e), a.field)
        sub, incl = submodule(reg, cols)
        sub.embedding_into_regular = incl
        out.append(sub)
    return out


def simples_by_idempotent(a: Algebra) -> list[Module]:
    """top(P_i) for each distinguished idempotent (iso repeats possible)."""
    out = []
    for p in projective_indecomposables(a):
        rad_incl = radical(p)
        top, _ = quotient_module(p, rad_incl.matrix.T)
        out.append(top)
    return out


def simples(a: Algebra) -> list[Module]:
    """Pairwise non-isomorphic simples, one per primitive idempotent class.

    S_i ~ S_j exactly when e_i acts nontrivially on S_j (both are tops of
    projective indecomposables), so the dedup is deterministic.
    """
    tops = simples_by_idempotent(a)
    f = a.field
    chosen: list[tuple[int, Module]] = []
    for i, s in enumerate(tops):
        dup = False
        for j, other in chosen:
            if other.dim == s.dim and rref(other.act_vector(a.prim_idempotents[i]), f).rank > 0:
                dup = True
                break
        if not dup:
            s.idempotent_index = i
            chosen.append((i, s))
    return [s for _, s in chosen]


def projective_cover(m: Module) -> tuple[Module, ModuleMap]:
    """Minimal projective cover: P -> M surjective with kernel inside rad(P).

    Generators are accepted greedily whenever their image in top(M) is new;
    each accepted generator contributes one indecomposable summand and one
    simple to the top, so the induced map on tops is an isomorphism.
    """
    a = m.algebra
    f = m.field
    if m.dim == 0:
        z = zero_module(a)
        return z, ModuleMap(z, m, f.zeros(0, 0), _validate=False)
    rad_incl = radical(m)
    top, proj = quotient_module(m, rad_incl.matrix.T)
    projectives = projective_indecomposables(a)
    covered = f.zeros(0, top.dim)
    gens: list[tuple[int, np.ndarray]] = []
    for i, e in enumerate(a.prim_idempotents):
        cols = m.act_vector(e)
        for t in range(m.dim):
            if covered.shape[0] == top.dim:
                break
            v = cols[:, t]
            w = f.matmul(proj.matrix, v)
            if f.is_zero(w):
                continue
            if covered.shape[0] and solve(covered.T, w, f) is not None:
                continue
            gens.append((i, v))
            covered = module_span_rows(top, np.concatenate([covered, w.reshape(1, -1)], axis=0))
    if covered.shape[0] != top.dim:
        raise AlgebraError("projective cover construction failed to cover the top")
    summands = [projectives[i] for i, _ in gens]
    cover = direct_sum(summands) if summands else zero_module(a)
    mat = f.zeros(m.dim, cover.dim)
    off = 0
    for (i, v), p in zip(gens, summands):
        emb = p.embedding_into_regular.matrix  # columns are elements of the algebra
        mat[:, off : off + p.dim] = f.normalize(np.einsum("ar,abc,c->br", emb, m.action, v))
        off += p.dim
    surj = ModuleMap(cover, m, mat, _validate=False)
    return cover, surj


def is_projective(m: Module) -> bool:
    cover, _ = projective_cover(m)
    return cover.dim == m.dim


@dataclass
class Resolution:
    """Minimal projective resolution up to a cutoff.

    differentials[0] maps terms[0] onto the target; differentials[i] maps
    terms[i] into terms[i-1].  finished means the last syzygy vanished, so the
    projective dimension is known exactly.
    """

    target: Module
    terms: list
    differentials: list
    cutoff: int
    minimal: bool = True
    finished: bool = False

    def pd_bound(self) -> tuple[str, int]:
        """('exact', n) or ('at_least', cutoff + 1)."""
        if self.finished:
            n = len(self.terms) - 1
            while n > 0 and self.terms[n].dim == 0:
                n -= 1
            if self.terms and self.terms[0].dim == 0:
                return ("exact", 0)
            return ("exact", n)
        return ("at_least", self.cutoff + 1)


def minimal_resolution(m: Module, cutoff: int) -> Resolution:
    f = m.field
    terms: list[Module] = []
    diffs: list[ModuleMap] = []
    current = m
    incl_prev: Optional[ModuleMap] = None
    finished = False
    for _ in range(cutoff + 1):
        cover, surj = projective_cover(current)
        terms.append(cover)
        if incl_prev is None:
            diffs.append(surj)
        else:
            diffs.append(ModuleMap(cover, terms[-2], f.matmul(incl_prev.matrix, surj.matrix), _validate=False))
        syz, incl_prev = submodule(cover, kernel_basis(surj.matrix, f))
        current = syz
        if syz.dim == 0:
            finished = True
            break
    return Resolution(m, terms, diffs, cutoff, finished=finished)


# -- duality -------------------------------------------------------------------


def dual(m: Module) -> Module:
    """k-linear dual, a module over the opposite algebra (actions transpose)."""
    return Module(opposite(m.algebra), m.action.transpose(0, 2, 1), _validate=False)


def is_injective(m: Module) -> bool:
    return is_projective(dual(m))


def hom_into_regular(m: Module) -> Module:
    """Hom_A(M, A) as a module over A^op: (f.a)(x) = f(x)a."""
    a = m.algebra
    f = m.field
    hb = HomBasis.of(m, regular_module(a))
    h = len(hb.maps)
    act = f.zeros(a.dim, h, h)
    for j in range(a.dim):
        r = a.right_mult[j]
        for s, mp in enumerate(hb.maps):
            act[j, :, s] = hb.coords(f.matmul(r, mp.matrix), f)
    return Module(opposite(a), act)


# -- tensor products -----------------------------------------------------------


@dataclass
class TensorData:
    """Projection/section presenting M (x)_B N as a quotient of the pure
    tensor space (row-major coordinates: index = s * n_dim + t)."""

    proj: np.ndarray  # (q, m*n)
    sect: np.ndarray  # (m*n, q)
    m_dim: int
    n_dim: int

    def induced(self, f: Field, op_left: Optional[np.ndarray], op_right: Optional[np.ndarray]) -> np.ndarray:
        big = np.kron(
            op_left if op_left is not None else f.eye(self.m_dim),
            op_right if op_right is not None else f.eye(self.n_dim),
        )
        return f.matmul(self.proj, f.matmul(f.normalize(big), self.sect))


def _balanced_tensor(f: Field, b: Algebra, right_action, left_action) -> TensorData:
    """Quotient of k^(m*n) by the span of (x.b (x) y) - (x (x) b.y); generator
    relations suffice by bilinearity."""
    m = right_action.shape[1]
    n = left_action.shape[1]
    rels = []
    eye_m, eye_n = f.eye(m), f.eye(n)
    for g in b.generators():
        rm = f.normalize(np.einsum("i,iab->ab", g, right_action))
        ln = f.normalize(np.einsum("i,iab->ab", g, left_action))
        # columns of the relation block are indexed by pure tensors (s, t)
        rels.append(f.normalize(np.kron(rm, eye_n) - np.kron(eye_m, ln)).T)
    relmat = np.concatenate(rels, axis=0) if rels else f.zeros(0, m * n)
    proj, sect = _complement_projection(f, relmat, m * n)
    return TensorData(proj, sect, m, n)


def _unit_vec(f: Field, dim: int, i: int) -> np.ndarray:
    v = f.zeros(dim)
    v[i] = f.one
    return v


def tensor_over(a_mod, b_mod) -> tuple:
    """Balanced tensor product over the shared middle algebra.

    a_mod: Bimodule (A, B) or a plain right B-module (a Module over B^op);
    b_mod: Bimodule (B, C) or a plain left B-module.  Returns a pair
    (result, TensorData) where the result keeps whatever outer structure the
    inputs carry: a (A, C)-bimodule, a one-sided module, or a plain vector
    space as a module over the ground field.
    """
    if isinstance(a_mod, Bimodule):
        b = a_mod.right
        f = a_mod.field
        ra = a_mod.right_action
    else:
        b = opposite(a_mod.algebra)  # a_mod is a module over B^op
        f = a_mod.field
        ra = a_mod.action
    if isinstance(b_mod, Bimodule):
        if not b_mod.left.same_as(b):
            raise AlgebraError("tensor factors do not share the middle algebra")
        la = b_mod.left_action
    else:
        if not b_mod.algebra.same_as(b):
            raise AlgebraError("tensor factors do not share the middle algebra")
        la = b_mod.action
    td = _balanced_tensor(f, b, ra, la)
    q = td.proj.shape[0]
    left_alg = a_mod.left if isinstance(a_mod, Bimodule) else None
    right_alg = b_mod.right if isinstance(b_mod, Bimodule) else None

    def left_act() -> np.ndarray:
        act = f.zeros(left_alg.dim, q, q)
        for i in range(left_alg.dim):
            act[i] = td.induced(f, a_mod.left_action[i], None)
        return act

    def right_act() -> np.ndarray:
        act = f.zeros(right_alg.dim, q, q)
        for j in range(right_alg.dim):
            act[j] = td.induced(f, None, b_mod.right_action[j])
        return act

    if left_alg is not None and right_alg is not None:
        return Bimodule(left_alg, right_alg, left_act(), right_act()), td
    if left_alg is not None:
        return Module(left_alg, left_act()), td
    if right_alg is not None:
        return Module(opposite(right_alg), right_act()), td
    k = ground_field_algebra(f)
    act = f.zeros(1, q, q)
    act[0] = f.eye(q)
    return Module(k, act, _validate=False), td


# -- hom modules ----------------------------------------------------------------


def hom_module(m_bimod: Bimodule, n) -> tuple:
    """Hom over the left algebra of an (A, B)-bimodule into an A-module.

    n may be a plain Module over A (result: left B-module) or a Bimodule
    (A, C) (result: (B, C)-bimodule).  Actions: (b.f)(x) = f(x.b) and
    (f.c)(x) = f(x).c.  Returns (module, HomBasis).
    """
    f = m_bimod.field
    a = m_bimod.left
    m_left = m_bimod.left_restrict()
    if isinstance(n, Bimodule):
        if not n.left.same_as(a):
            raise AlgebraError("hom_module needs matching left algebras")
        n_left = n.left_restrict()
    else:
        if not n.algebra.same_as(a):
            raise AlgebraError("hom_module needs matching left algebras")
        n_left = n
    hb = HomBasis.of(m_left, n_left)
    h = len(hb.maps)
    b = m_bimod.right

    def act_of(pre: Optional[np.ndarray], post: Optional[np.ndarray]) -> np.ndarray:
        out = f.zeros(h, h)
        for s, mp in enumerate(hb.maps):
            g = mp.matrix
            if pre is not None:
                g = f.matmul(g, pre)
            if post is not None:
                g = f.matmul(post, g)
            out[:, s] = hb.coords(g, f)
        return out

    b_act = f.zeros(b.dim, h, h)
    for j in range(b.dim):
        b_act[j] = act_of(m_bimod.right_action[j], None)
    if isinstance(n, Bimodule):
        c = n.right
        c_act = f.zeros(c.dim, h, h)
        for l in range(c.dim):
            c_act[l] = act_of(None, n.right_action[l])
        return Bimodule(b, c, b_act, c_act), hb
    return Module(b, b_act), hb


# -- isomorphism testing ---------------------------------------------------------


@dataclass
class IsoResult:
    kind: str  # "yes" | "no" | "probably_no"
    witness: Optional[ModuleMap] = None
    certificate: Optional[str] = None
    trials: int = 0

    @property
    def is_yes(self) -> bool:
        return self.kind == "yes"


def _hom_profile(m: Module) -> tuple:
    f = m.field
    idem_dims = tuple(rref(m.act_vector(e), f).rank for e in m.algebra.prim_idempotents)
    try:
        sims = simples(m.algebra)
        to_s = tuple(len(hom_space(m, s)) for s in sims)
        from_s = tuple(len(hom_space(s, m)) for s in sims)
    except FieldRestrictionError:
        to_s = from_s = ()
    return (m.dim, idem_dims, to_s, from_s)


def is_isomorphic(m: Module, n: Module, trials: int = 64, seed: int = 0) -> IsoResult:
    """Randomized isomorphism test with deterministic No certificates.

    No when dimensions or Hom profiles against the simples differ; Yes with an
    invertible intertwiner as proof; ProbablyNo after the sampling budget.
    """
    if not m.algebra.same_as(n.algebra):
        raise AlgebraError("modules live over different algebras")
    f = m.field
    if m.dim != n.dim:
        return IsoResult("no", certificate=f"dim {m.dim} != {n.dim}")
    if m.dim == 0:
        return IsoResult("yes", witness=ModuleMap(m, n, f.zeros(0, 0), _validate=False))
    pm, pn = _hom_profile(m), _hom_profile(n)
    if pm != pn:
        return IsoResult("no", certificate=f"hom profile {pm} != {pn}")
    basis = hom_space(m, n)
    if not basis:
        return IsoResult("no", certificate="Hom(m, n) = 0")
    for mp in basis:
        if mp.is_isomorphism():
            return IsoResult("yes", witness=mp)
    rng = np.random.default_rng(seed)
    stack = np.stack([mp.matrix for mp in basis])
    for t in range(trials):
        if f.is_prime_field:
            coeff = f.asarray(rng.integers(0, f.p, size=len(basis)))
        else:
            coeff = f.asarray(rng.integers(-5, 6, size=len(basis)))
        cand = f.normalize(np.einsum("s,sab->ab", coeff, stack))
        if rref(cand, f).rank == m.dim:
            return IsoResult("yes", witness=ModuleMap(m, n, cand, _validate=False), trials=t + 1)
    return IsoResult("probably_no", trials=trials)


def bimodules_isomorphic(m: Bimodule, n: Bimodule, env: Optional[Algebra] = None, trials: int = 64, seed: int = 0) -> IsoResult:
    """Isomorphism of bimodules = isomorphism over the enveloping algebra."""
    return is_isomorphic(m.env_module(env), n.env_module(env), trials=trials, seed=seed)


# -- serialization -----------------------------------------------------------------


def serialize_module(m: Module) -> dict:
    """Wire format for report witnesses: {"dim": n, "action": [matrices]}."""
    return {"dim": m.dim, "action": m.action.tolist()}


def serialize_map(mp: ModuleMap) -> dict:
    return {
        "source": serialize_module(mp.source),
        "target": serialize_module(mp.target),
        "matrix": mp.matrix.tolist(),
    }


# -- random generators ------------------------------------------------------------


def random_module(a: Algebra, rng: np.random.Generator, max_summands: int = 3) -> Module:
    """Cokernel of a random map between random sums of projective
    indecomposables; every finite-dimensional module arises this way."""
    projs = projective_indecomposables(a)
    f = a.field
    k0 = int(rng.integers(1, max_summands + 1))
    q0 = direct_sum([projs[int(rng.integers(0, len(projs)))] for _ in range(k0)])
    k1 = int(rng.integers(0, max_summands + 1))
    if k1 == 0:
        return q0
    q1 = direct_sum([projs[int(rng.integers(0, len(projs)))] for _ in range(k1)])
    homs = hom_space(q1, q0)
    if not homs:
        return q0
    coeff = rng.integers(0, f.p if f.is_prime_field else 7, size=len(homs))
    mat = f.normalize(np.einsum("s,sab->ab", f.asarray(coeff), np.stack([h.matrix for h in homs])))
    quot, _ = quotient_module(q0, column_space_basis(mat, f).T)
    return quot


def random_short_exact_sequence(a: Algebra, rng: np.random.Generator, max_summands: int = 3):
    """A random 0 -> A -> B -> C -> 0: random B, random generated submodule A.

    Generators are pushed into rad(B) half of the time (when the radical is
    computable); purely uniform vectors almost never generate proper radical
    submodules, which are where exactness of functors actually fails.
    Returns (inclusion, projection)."""
    b = random_module(a, rng, max_summands)
    f = a.field
    if b.dim == 0:
        z = zero_module(a)
        return ModuleMap(z, b, f.zeros(0, 0), _validate=False), ModuleMap(b, z, f.zeros(0, 0), _validate=False)
    try:
        jrows = algebra_radical_rows(a)
    except FieldRestrictionError:
        jrows = f.zeros(0, a.dim)
    k = int(rng.integers(1, 3))
    vecs = f.asarray(rng.integers(0, f.p if f.is_prime_field else 7, size=(k, b.dim)))
    for t in range(k):
        if jrows.shape[0] and rng.integers(0, 2):
            coeff = f.asarray(rng.integers(0, f.p if f.is_prime_field else 7, size=jrows.shape[0]))
            moved = f.matmul(b.act_vector(f.matmul(coeff, jrows)), vecs[t])
            if not f.is_zero(moved):
                vecs[t] = moved
    rows = module_span_rows(b, vecs)
    _, incl = submodule(b, rows.T)
    _, proj = quotient_module(b, rows)
    return incl, proj
