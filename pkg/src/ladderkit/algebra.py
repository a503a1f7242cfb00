"""Finite-dimensional associative unital algebras via structure constants.

An algebra of dimension d over a field is stored as a (d, d, d) array c with
b_i * b_j = sum_k c[i, j, k] b_k, together with the unit and a distinguished
complete system of primitive orthogonal idempotents.  All constructors verify
associativity, the unit axioms and the idempotent system eagerly (except for
constructions like enveloping products whose axioms follow from the inputs').
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import Field, column_space_basis, in_span, left_inverse, rref, solve, solve_matrix

__all__ = [
    "AlgebraError",
    "FieldRestrictionError",
    "Algebra",
    "Idempotent",
    "QuiverPresentation",
    "CornerEmbedding",
    "QuotientProjection",
    "algebra_from_structure_constants",
    "algebra_from_quiver",
    "opposite",
    "enveloping",
    "tensor_product_algebra",
    "corner",
    "quotient_by_idempotent_ideal",
    "build_ideal_matrix_algebra",
    "build_morita_square",
    "build_triangular",
    "ground_field_algebra",
    "dual_numbers_algebra",
]


class AlgebraError(ValueError):
    """A structural axiom failed; the message names the offending data."""


class FieldRestrictionError(RuntimeError):
    """Operation needs char 0 or p > dim(algebra) (trace-form radical)."""


class Algebra:
    """Immutable algebra given by structure constants.

    Attributes:
        field: the ground field
        dim: vector-space dimension
        mult: (dim, dim, dim) structure-constant array
        unit: coefficient vector of 1
        prim_idempotents: tuple of coefficient vectors, pairwise orthogonal
            primitive idempotents summing to the unit
        labels: optional basis-element names (printing only)
    """

    def __init__(self, field: Field, mult, unit, prim_idempotents, labels=None, _validate=True):
        self.field = field
        self.mult = field.asarray(mult)
        if self.mult.ndim != 3 or len(set(self.mult.shape)) > 1:
            raise AlgebraError(f"structure constants must be cubic, got {self.mult.shape}")
        self.dim = self.mult.shape[0]
        self.unit = field.asarray(unit).reshape(self.dim)
        self.prim_idempotents = tuple(field.asarray(e).reshape(self.dim) for e in prim_idempotents)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.dim:
            raise AlgebraError("label count does not match dimension")
        # left_mult[i] = matrix of x -> b_i x; right_mult[j] = matrix of x -> x b_j
        self.left_mult = np.ascontiguousarray(self.mult.transpose(0, 2, 1))
        self.right_mult = np.ascontiguousarray(self.mult.transpose(1, 2, 0))
        self.mult.setflags(write=False)
        self.unit.setflags(write=False)
        self._generators = None
        if _validate:
            self._validate()

    # -- basic arithmetic -------------------------------------------------

    def multiply(self, x, y) -> np.ndarray:
        return self.field.normalize(np.einsum("i,j,ijk->k", x, y, self.mult))

    def left_mult_matrix(self, x) -> np.ndarray:
        return self.field.normalize(np.einsum("i,iab->ab", x, self.left_mult))

    def right_mult_matrix(self, x) -> np.ndarray:
        return self.field.normalize(np.einsum("i,iab->ab", x, self.right_mult))

    def is_idempotent(self, x) -> bool:
        return self.field.equal(self.multiply(x, x), x)

    def element_from_label(self, label: str) -> np.ndarray:
        if self.labels is None:
            raise AlgebraError("algebra carries no labels")
        v = self.field.zeros(self.dim)
        v[self.labels.index(label)] = self.field.one
        return v

    def same_as(self, other: "Algebra") -> bool:
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.field.equal(self.mult, other.mult)
            and self.field.equal(self.unit, other.unit)
        )

    def __repr__(self):
        k = f"F_{self.field.p}" if self.field.is_prime_field else "Q"
        return f"Algebra(dim={self.dim}, field={k})"

    # -- validation --------------------------------------------------------

    def _validate(self):
        f = self.field
        d = self.dim
        if d == 0:
            if self.prim_idempotents:
                raise AlgebraError("zero algebra cannot carry idempotents")
            return
        # unit axioms
        ident = f.eye(d)
        lu = self.left_mult_matrix(self.unit)
        ru = self.right_mult_matrix(self.unit)
        if not f.equal(lu, ident):
            raise AlgebraError("unit fails unit*b_i = b_i")
        if not f.equal(ru, ident):
            raise AlgebraError("unit fails b_i*unit = b_i")
        # associativity via operator identity: L_i composed with R_j must commute,
        # which spells out (b_i x) b_j = b_i (x b_j) for every basis triple
        for i in range(d):
            li = self.left_mult[i]
            lhs = f.normalize(np.matmul(self.right_mult, li))
            rhs = f.normalize(np.matmul(li[None, :, :], self.right_mult))
            if not f.equal(lhs, rhs):
                j = next(j for j in range(d) if not f.equal(lhs[j], rhs[j]))
                bad = lhs[j] - rhs[j]
                x = int(np.nonzero(f.normalize(bad))[1][0])
                raise AlgebraError(f"associativity fails at basis triple (i={i}, x={x}, j={j})")
        # idempotent system
        if not self.prim_idempotents:
            raise AlgebraError("a complete system of primitive idempotents is required")
        total = f.zeros(d)
        for a, ea in enumerate(self.prim_idempotents):
            total = f.normalize(total + ea)
            for b, eb in enumerate(self.prim_idempotents):
                prod = self.multiply(ea, eb)
                want = ea if a == b else f.zeros(d)
                if not f.equal(prod, want):
                    raise AlgebraError(f"idempotent system fails at pair ({a}, {b})")
        if not f.equal(total, self.unit):
            raise AlgebraError("idempotents do not sum to the unit")

    # -- generators (used to shrink intertwiner systems) -------------------

    def generators(self) -> np.ndarray:
        """A small generating set (as rows), found greedily.

        Starts from the unit and the distinguished idempotents and adds basis
        vectors until the generated subalgebra is everything.  Generators are
        equivalent to the full basis for intertwining conditions.
        """
        if self._generators is not None:
            return self._generators
        f = self.field
        if self.dim == 0:
            self._generators = f.zeros(0, 0)
            return self._generators
        gens = [self.unit] + list(self.prim_idempotents)
        span = self._subalgebra_span(gens)
        for t in range(self.dim):
            if span.shape[0] == self.dim:
                break
            v = f.zeros(self.dim)
            v[t] = f.one
            if in_span(span, v, f):
                continue
            gens.append(v)
            span = self._subalgebra_span(gens)
        if span.shape[0] != self.dim:
            raise AlgebraError("generator search failed to exhaust the algebra")
        self._generators = f.asarray(np.stack(gens)) if gens else f.zeros(0, self.dim)
        return self._generators

    def _subalgebra_span(self, gens) -> np.ndarray:
        f = self.field
        if not gens:
            return f.zeros(0, self.dim)
        basis = rref(np.stack(gens), f)
        basis_rows = basis.matrix[: basis.rank]
        while True:
            prods = np.einsum("ai,bj,ijk->abk", basis_rows, basis_rows, self.mult)
            prods = f.normalize(prods.reshape(-1, self.dim))
            stacked = np.concatenate([basis_rows, prods], axis=0)
            r = rref(stacked, f)
            if r.rank == basis_rows.shape[0]:
                return basis_rows
            basis_rows = r.matrix[: r.rank]


@dataclass(frozen=True)
class Idempotent:
    """An idempotent element of a parent algebra."""

    parent: Algebra
    element: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "element", self.parent.field.asarray(self.element).reshape(self.parent.dim))
        if not self.parent.is_idempotent(self.element):
            raise AlgebraError("element is not idempotent")

    @property
    def is_zero(self) -> bool:
        return self.parent.field.is_zero(self.element)

    @property
    def is_unit(self) -> bool:
        return self.parent.field.equal(self.element, self.parent.unit)


def algebra_from_structure_constants(field: Field, mult, unit, prim_idempotents, labels=None) -> Algebra:
    """Construct and fully validate an algebra from raw structure constants."""
    return Algebra(field, mult, unit, prim_idempotents, labels)


def ground_field_algebra(field: Field) -> Algebra:
    return Algebra(field, [[[1]]], [1], [[1]], labels=("1",))


def dual_numbers_algebra(field: Field) -> Algebra:
    """k[x]/(x^2): basis (1, x)."""
    d = 2
    c = field.zeros(d, d, d)
    c[0, 0, 0] = 1
    c[0, 1, 1] = 1
    c[1, 0, 1] = 1
    return Algebra(field, c, [1, 0], [[1, 0]], labels=("1", "x"))


# -- quivers ---------------------------------------------------------------


@dataclass(frozen=True)
class QuiverPresentation:
    """Bound quiver with monomial relations.

    Arrows are (source, target, name) with 0-based vertices.  A relation is a
    tuple of arrow names in traversal order (first arrow applied first).  The
    presentation must be finite-dimensional: every path one longer than
    path_length_bound has to die in the relations.
    """

    vertices: int
    arrows: tuple
    monomial_relations: tuple
    path_length_bound: int

    def __init__(self, vertices, arrows, monomial_relations=(), path_length_bound=8):
        object.__setattr__(self, "vertices", int(vertices))
        object.__setattr__(self, "arrows", tuple((int(s), int(t), str(n)) for (s, t, n) in arrows))
        object.__setattr__(self, "monomial_relations", tuple(tuple(r) for r in monomial_relations))
        object.__setattr__(self, "path_length_bound", int(path_length_bound))
        names = [a[2] for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("arrow names must be distinct")
        for r in self.monomial_relations:
            if not r:
                raise AlgebraError("empty relation")
            idx = [names.index(n) for n in r]
            for u, v in zip(idx, idx[1:]):
                if self.arrows[u][1] != self.arrows[v][0]:
                    raise AlgebraError(f"relation {r} is not a composable path")


def algebra_from_quiver(q: QuiverPresentation, field: Field) -> Algebra:
    """Path algebra of a bound quiver; basis = nonzero paths, unit = sum of trivial paths.

    Paths are stored in traversal order; the product p*q concatenates q-then-p
    (apply q first), matching composition of left-module actions.
    """
    names = [a[2] for a in q.arrows]
    rels = [tuple(names.index(n) for n in r) for r in q.monomial_relations]

    def killed(path):
        for r in rels:
            L = len(r)
            for s in range(len(path) - L + 1):
                if tuple(path[s : s + L]) == r:
                    return True
        return False

    paths = [("v", i) for i in range(q.vertices)]
    frontier = [()]  # arrow-index tuples, grown by length
    layer = [(a,) for a in range(len(q.arrows)) if not killed((a,))]
    length = 1
    while layer:
        if length > q.path_length_bound:
            raise AlgebraError(
                f"quiver presentation is not finite-dimensional within bound {q.path_length_bound}:"
                f" nonzero path of length {length} exists"
            )
        paths.extend(("p", p) for p in layer)
        nxt = []
        for p in layer:
            tail_target = q.arrows[p[-1]][1]
            for a in range(len(q.arrows)):
                if q.arrows[a][0] == tail_target and not killed(p + (a,)):
                    nxt.append(p + (a,))
        layer = nxt
        length += 1

    index = {p: i for i, p in enumerate(paths)}
    d = len(paths)

    def src(p):
        return p[1] if p[0] == "v" else q.arrows[p[1][0]][0]

    def tgt(p):
        return p[1] if p[0] == "v" else q.arrows[p[1][-1]][1]

    c = field.zeros(d, d, d)
    for i, pi in enumerate(paths):
        for j, pj in enumerate(paths):
            # product b_i * b_j applies pj first, then pi
            if src(pi) != tgt(pj):
                continue
            if pi[0] == "v":
                c[i, j, j] = field.one
            elif pj[0] == "v":
                c[i, j, i] = field.one
            else:
                prod = pj[1] + pi[1]
                if ("p", prod) in index:
                    c[i, j, index[("p", prod)]] = field.one
                # otherwise the concatenation hits a relation and the product is 0

    unit = field.zeros(d)
    idems = []
    for v in range(q.vertices):
        unit[index[("v", v)]] = field.one
        e = field.zeros(d)
        e[index[("v", v)]] = field.one
        idems.append(e)

    def label(p):
        if p[0] == "v":
            return f"e{p[1] + 1}"
        return "*".join(q.arrows[a][2] for a in reversed(p[1]))

    return Algebra(field, c, unit, idems, labels=[label(p) for p in paths])


# -- functorial constructions ----------------------------------------------


def opposite(a: Algebra) -> Algebra:
    """Opposite algebra: c_op[i, j] = c[j, i]; unit and idempotents unchanged."""
    op = Algebra(a.field, a.mult.transpose(1, 0, 2), a.unit, a.prim_idempotents, a.labels, _validate=False)
    if getattr(a, "_generators", None) is not None:
        op._generators = a._generators
    return op


def _product_constants(a: Algebra, b: Algebra, op_right: bool) -> np.ndarray:
    cb = b.mult.transpose(1, 0, 2) if op_right else b.mult
    c = np.einsum("ikm,jln->ijklmn", a.mult, cb)
    d = a.dim * b.dim
    return a.field.normalize(c.reshape(d, d, d))


def _product_algebra(a: Algebra, b: Algebra, op_right: bool) -> Algebra:
    if a.field != b.field:
        raise AlgebraError("field mismatch")
    f = a.field
    unit = f.normalize(np.kron(a.unit, b.unit))
    idems = [f.normalize(np.kron(ea, eb)) for ea in a.prim_idempotents for eb in b.prim_idempotents]
    prod = Algebra(f, _product_constants(a, b, op_right), unit, idems, _validate=False)
    if a.dim and b.dim:
        # A (x) 1 and 1 (x) B generate the product, so generator sets combine
        gens = [f.normalize(np.kron(g, b.unit)) for g in a.generators()]
        gens += [f.normalize(np.kron(a.unit, g)) for g in b.generators()]
        prod._generators = f.asarray(np.stack(gens))
    return prod


def enveloping(a: Algebra, b: Algebra) -> Algebra:
    """A (x) B^op under the fixed Kronecker order: left modules over it are (A,B)-bimodules."""
    return _product_algebra(a, b, op_right=True)


def tensor_product_algebra(a: Algebra, b: Algebra) -> Algebra:
    """Plain tensor product A (x) B, Kronecker order (left factor index major)."""
    return _product_algebra(a, b, op_right=False)


# -- corner and quotient -----------------------------------------------------


@dataclass(frozen=True)
class CornerEmbedding:
    """Column basis of eAe inside A: embedding[:, t] is the t-th corner basis vector."""

    matrix: np.ndarray


def corner(a: Algebra, e: Idempotent) -> tuple[Algebra, CornerEmbedding]:
    """The corner algebra eAe with its embedding into A.

    The primitive idempotents of the corner are the distinguished primitive
    idempotents of A absorbed by e; e must be the sum of a subset of A's
    distinguished system (all constructions in scope satisfy this).
    """
    if not a.same_as(e.parent):
        raise AlgebraError("idempotent belongs to a different algebra")
    f = a.field
    ev = e.element
    exe = f.matmul(a.left_mult_matrix(ev), a.right_mult_matrix(ev))
    basis = column_space_basis(exe, f)  # (dim, c)
    cdim = basis.shape[1]
    if cdim == 0:
        return Algebra(f, f.zeros(0, 0, 0), f.zeros(0), [], _validate=False), CornerEmbedding(basis)
    extract = left_inverse(basis, f)
    prods = f.normalize(np.einsum("ia,jb,ijk->abk", basis, basis, a.mult))  # (c, c, dim)
    cc = f.normalize(np.einsum("ki,abi->abk", extract, prods))
    if not f.equal(f.normalize(np.einsum("ik,abk->abi", basis, cc)), prods):
        raise AlgebraError("corner basis is not multiplicatively closed")
    unit_c = solve(basis, ev, f)
    if unit_c is None:
        raise AlgebraError("idempotent does not lie in its own corner")
    sub = []
    total = f.zeros(a.dim)
    for ei in a.prim_idempotents:
        if f.equal(a.multiply(ev, ei), ei) and f.equal(a.multiply(ei, ev), ei):
            sub.append(ei)
            total = f.normalize(total + ei)
    if not f.equal(total, ev):
        raise AlgebraError("corner needs e to be a sum of distinguished primitive idempotents")
    idems_c = [solve(basis, ei, f) for ei in sub]
    alg = Algebra(f, cc, unit_c, idems_c)
    return alg, CornerEmbedding(basis)


@dataclass(frozen=True)
class QuotientProjection:
    """Projection A -> A/AeA on a fixed complement basis, with its section."""

    projection: np.ndarray  # (q, dim)
    section: np.ndarray  # (dim, q)
    ideal_rows: np.ndarray  # rref row basis of the ideal AeA


def _ideal_span_rows(a: Algebra, ev: np.ndarray) -> np.ndarray:
    f = a.field
    w = a.left_mult_matrix(ev)  # columns e*b_j
    vecs = f.normalize(np.einsum("iab,bj->ija", a.left_mult, w)).reshape(-1, a.dim)
    r = rref(vecs, f)
    return r.matrix[: r.rank]


def quotient_by_idempotent_ideal(a: Algebra, e: Idempotent) -> tuple[Algebra, QuotientProjection]:
    """A/AeA on the complement of the non-pivot coordinates of rref(AeA)."""
    if not a.same_as(e.parent):
        raise AlgebraError("idempotent belongs to a different algebra")
    f = a.field
    rows = _ideal_span_rows(a, e.element)
    piv = rref(rows, f).pivots if rows.shape[0] else ()
    free = [c for c in range(a.dim) if c not in piv]
    q = len(free)
    proj = f.zeros(q, a.dim)
    for t, fc in enumerate(free):
        proj[t, fc] = f.one
        for i, pc in enumerate(piv):
            proj[t, pc] = f.normalize(-rows[i, fc])
    sect = f.zeros(a.dim, q)
    for t, fc in enumerate(free):
        sect[fc, t] = f.one
    if q == 0:
        return Algebra(f, f.zeros(0, 0, 0), f.zeros(0), [], _validate=False), QuotientProjection(proj, sect, rows)
    prods = f.normalize(np.einsum("ia,jb,ijk->abk", sect, sect, a.mult))
    cq = f.normalize(np.einsum("abk,tk->abt", prods, proj))
    unit_q = f.matmul(proj, a.unit)
    idems_q = []
    for ei in a.prim_idempotents:
        v = f.matmul(proj, ei)
        if not f.is_zero(v):
            idems_q.append(v)
    labels = None
    if a.labels is not None:
        labels = [a.labels[fc] for fc in free]
    alg = Algebra(f, cq, unit_q, idems_q, labels=labels)
    return alg, QuotientProjection(proj, sect, rows)


# -- block matrix algebras ---------------------------------------------------


def _block_matrix_algebra(base: Algebra, entry_bases, labels_prefix="E") -> Algebra:
    """n x n matrix algebra whose (i, j) entry is a given subspace of base.

    entry_bases[i][j] is a (dim_base, k_ij) column-basis array (k_ij may be 0).
    Products must land in the target entry subspace, otherwise the data does
    not define an algebra and an error names the violating block product.
    """
    f = base.field
    n = len(entry_bases)
    blocks = []  # (i, j, basis, extract)
    offsets = {}
    dim = 0
    for i in range(n):
        for j in range(n):
            b = entry_bases[i][j]
            k = b.shape[1]
            if k:
                offsets[(i, j)] = dim
                blocks.append((i, j, b, left_inverse(b, f) if k else None))
                dim += k
    c = f.zeros(dim, dim, dim)
    for (i, j, bij, _) in blocks:
        o1 = offsets[(i, j)]
        for (k, l, bkl, _) in blocks:
            if j != k:
                continue
            o2 = offsets[(k, l)]
            if (i, l) not in offsets:
                # all products must die
                for s in range(bij.shape[1]):
                    for t in range(bkl.shape[1]):
                        if not f.is_zero(base.multiply(bij[:, s], bkl[:, t])):
                            raise AlgebraError(f"block product ({i},{j})*({k},{l}) leaves the entry pattern")
                continue
            o3 = offsets[(i, l)]
            bil, ext = next((b, x) for (p, q, b, x) in blocks if (p, q) == (i, l))
            for s in range(bij.shape[1]):
                for t in range(bkl.shape[1]):
                    prod = base.multiply(bij[:, s], bkl[:, t])
                    coords = solve(bil, prod, f)
                    if coords is None:
                        raise AlgebraError(f"block product ({i},{j})*({k},{l}) not contained in entry ({i},{l})")
                    c[o1 + s, o2 + t, o3 : o3 + bil.shape[1]] = coords
    unit = f.zeros(dim)
    idems = []
    base_id = f.eye(base.dim)
    for i in range(n):
        bii = entry_bases[i][i]
        coords = solve_matrix(bii, base.unit.reshape(-1, 1), f)
        if coords is None:
            raise AlgebraError("diagonal entries must contain the unit of the base")
        unit[offsets[(i, i)] : offsets[(i, i)] + bii.shape[1]] += coords[:, 0]
        for eb in base.prim_idempotents:
            ce = solve(bii, eb, f)
            v = f.zeros(dim)
            v[offsets[(i, i)] : offsets[(i, i)] + bii.shape[1]] = ce
            idems.append(v)
    unit = f.normalize(unit)
    labels = []
    for (i, j, b, _) in blocks:
        for t in range(b.shape[1]):
            labels.append(f"{labels_prefix}[{i + 1},{j + 1}]:{t}")
    return Algebra(f, c, unit, idems, labels=labels)


def _full_basis(base: Algebra) -> np.ndarray:
    return base.field.eye(base.dim)


def _check_two_sided_ideal(base: Algebra, ideal: np.ndarray):
    f = base.field
    rows = ideal.T  # ideal vectors as rows
    span = rref(rows, f).matrix[: rref(rows, f).rank]
    for t in range(ideal.shape[1]):
        v = ideal[:, t]
        for i in range(base.dim):
            b = f.zeros(base.dim)
            b[i] = f.one
            if not in_span(span, base.multiply(b, v), f):
                raise AlgebraError(f"not an ideal: b_{i} * v_{t} leaves the span")
            if not in_span(span, base.multiply(v, b), f):
                raise AlgebraError(f"not an ideal: v_{t} * b_{i} leaves the span")


def build_ideal_matrix_algebra(base: Algebra, ideal_basis, n: int) -> Algebra:
    """n x n matrix algebra with full base on and below the diagonal and a
    two-sided ideal above it; a decreasing chain I_1 >= ... >= I_{n-1} may be
    supplied (one ideal per column beyond the first) for the chain variant.
    """
    f = base.field
    if n < 1:
        raise AlgebraError("n must be at least 1")
    if isinstance(ideal_basis, (list, tuple)) and ideal_basis and isinstance(ideal_basis[0], np.ndarray):
        chain = [f.asarray(b) for b in ideal_basis]
    else:
        chain = [f.asarray(ideal_basis)] * (n - 1) if n > 1 else []
    if n > 1 and len(chain) != n - 1:
        raise AlgebraError(f"need {n - 1} ideals for the chain variant, got {len(chain)}")
    for b in chain:
        _check_two_sided_ideal(base, b)
    for a, b in zip(chain, chain[1:]):
        arows = rref(a.T, f)
        for t in range(b.shape[1]):
            if not in_span(arows.matrix[: arows.rank], b[:, t], f):
                raise AlgebraError("ideals must form a decreasing chain I_1 >= ... >= I_{n-1}")
    full = _full_basis(base)
    entries = [[full if i >= j else chain[j - 1] for j in range(n)] for i in range(n)]
    return _block_matrix_algebra(base, entries)


def build_triangular(base: Algebra, n: int) -> Algebra:
    """Lower triangular n x n matrices over base."""
    if n < 1:
        raise AlgebraError("n must be at least 1")
    f = base.field
    zero = f.zeros(base.dim, 0)
    full = _full_basis(base)
    entries = [[full if i >= j else zero for j in range(n)] for i in range(n)]
    return _block_matrix_algebra(base, entries)


def preprojective_a2(field: Field) -> Algebra:
    """Bound quiver algebra with two vertices, arrows both ways, and both
    length-two cycles equal to zero; its modules are pairs (X, Y, f, g) with
    f g = 0 = g f."""
    q = QuiverPresentation(
        vertices=2,
        arrows=[(0, 1, "a"), (1, 0, "b")],
        monomial_relations=[("a", "b"), ("b", "a")],
        path_length_bound=2,
    )
    return algebra_from_quiver(q, field)


def build_morita_square(base: Algebra) -> Algebra:
    """Algebra whose modules are tuples (X, Y, f, g) of base-modules with
    fg = gf = 0; the tensor of the 4-dimensional two-vertex bound quiver
    algebra with the base."""
    quiver_part = preprojective_a2(base.field)
    return tensor_product_algebra(quiver_part, base)
