"""The recollement of module categories induced by an idempotent.

For an algebra L with idempotent e, the three categories are modules over
S = L/LeL, L itself and G = eLe.  The six functors are materialized as module
constructions with companion constructions on maps:

    i: inflation along L ->> S          q: M |-> M/(LeL)M
    p: M |-> {x : (LeL)x = 0}           e: M |-> eM
    l: Le (x)_G -                       r: Hom_G(eL, -)

Axioms (adjunctions, q l = 0 = p r, the two canonical four-term exact
sequences) are verified at runtime on concrete modules.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    Algebra,
    AlgebraError,
    CornerEmbedding,
    Idempotent,
    QuotientProjection,
    corner,
    enveloping,
    quotient_by_idempotent_ideal,
)
from .linalg import Field, column_space_basis, intersect_kernels, kernel_basis, left_inverse, rref, solve
from .modules import (
    Bimodule,
    HomBasis,
    Module,
    ModuleMap,
    TensorData,
    hom_module,
    hom_space,
    random_short_exact_sequence,
    quotient_module,
    serialize_module,
    tensor_over,
)

__all__ = [
    "RecollementData",
    "build_recollement",
    "FunctorValue",
    "TensorFunctor",
    "HomFunctor",
    "CornerFunctor",
    "InflationFunctor",
    "TopQuotientFunctor",
    "SocleFunctor",
    "counit_mu",
    "unit_nu",
    "unit_lambda",
    "counit_kappa",
    "unit_e_l",
    "counit_e_r",
    "verify_canonical_sequences",
    "probe_exactness",
    "torsion_class_membership",
    "torsion_audit",
]


@dataclass
class RecollementData:
    """The idempotent, corner and quotient algebras, and the two carriers."""

    lam: Algebra
    e: Idempotent
    gamma: Algebra
    corner_embedding: CornerEmbedding
    sigma: Algebra
    quotient_projection: QuotientProjection
    e_lambda: Bimodule  # eL as a (G, L)-bimodule
    lambda_e: Bimodule  # Le as an (L, G)-bimodule
    env_gl: Algebra  # G (x) L^op, shared by all (G, L) rungs
    env_lg: Algebra  # L (x) G^op

    @property
    def field(self) -> Field:
        return self.lam.field

    @property
    def ideal_rows(self) -> np.ndarray:
        """Row basis of the two-sided ideal LeL."""
        return self.quotient_projection.ideal_rows

    # functor shortcuts
    def functor_e(self) -> "CornerFunctor":
        return CornerFunctor(self)

    def functor_l(self) -> "TensorFunctor":
        return TensorFunctor(self.lambda_e)

    def functor_r(self) -> "HomFunctor":
        return HomFunctor(self.e_lambda)

    def functor_i(self) -> "InflationFunctor":
        return InflationFunctor(self)

    def functor_q(self) -> "TopQuotientFunctor":
        return TopQuotientFunctor(self)

    def functor_p(self) -> "SocleFunctor":
        return SocleFunctor(self)


def build_recollement(lam: Algebra, e: Idempotent) -> RecollementData:
    """Construct corner, quotient and both carrier bimodules; e must be
    nontrivial (neither 0 nor the unit)."""
    if e.is_zero or e.is_unit:
        raise AlgebraError("recollement needs a nontrivial idempotent")
    f = lam.field
    gamma, emb = corner(lam, e)
    sigma, qproj = quotient_by_idempotent_ideal(lam, e)

    be = column_space_basis(lam.left_mult_matrix(e.element), f)  # basis of eL
    xe = left_inverse(be, f)
    g_dim = gamma.dim
    left_g = f.zeros(g_dim, be.shape[1], be.shape[1])
    for t in range(g_dim):
        left_g[t] = f.matmul(xe, f.matmul(lam.left_mult_matrix(emb.matrix[:, t]), be))
    right_l = f.zeros(lam.dim, be.shape[1], be.shape[1])
    for j in range(lam.dim):
        right_l[j] = f.matmul(xe, f.matmul(lam.right_mult[j], be))
    e_lambda = Bimodule(gamma, lam, left_g, right_l)

    bl = column_space_basis(lam.right_mult_matrix(e.element), f)  # basis of Le
    xl = left_inverse(bl, f)
    left_l = f.zeros(lam.dim, bl.shape[1], bl.shape[1])
    for i in range(lam.dim):
        left_l[i] = f.matmul(xl, f.matmul(lam.left_mult[i], bl))
    right_g = f.zeros(g_dim, bl.shape[1], bl.shape[1])
    for t in range(g_dim):
        right_g[t] = f.matmul(xl, f.matmul(lam.right_mult_matrix(emb.matrix[:, t]), bl))
    lambda_e = Bimodule(lam, gamma, left_l, right_g)

    return RecollementData(
        lam=lam,
        e=e,
        gamma=gamma,
        corner_embedding=emb,
        sigma=sigma,
        quotient_projection=qproj,
        e_lambda=e_lambda,
        lambda_e=lambda_e,
        env_gl=enveloping(gamma, lam),
        env_lg=enveloping(lam, gamma),
    )


# -- functors with companion map-level constructions ---------------------------


@dataclass
class FunctorValue:
    """Result of applying a functor to one module, with coordinate data."""

    module: Module
    data: object = None


class TensorFunctor:
    """B (x)_Y - for a (X, Y)-bimodule B: Mod Y -> Mod X."""

    def __init__(self, bimod: Bimodule):
        self.bimod = bimod
        self.source_algebra = bimod.right
        self.target_algebra = bimod.left

    def apply(self, m: Module) -> FunctorValue:
        out, td = tensor_over(self.bimod, m)
        return FunctorValue(out, td)

    def on_map(self, f: ModuleMap, va: FunctorValue, vb: FunctorValue) -> ModuleMap:
        fld = f.source.field
        td_a: TensorData = va.data
        td_b: TensorData = vb.data
        big = fld.normalize(np.kron(fld.eye(self.bimod.dim), f.matrix))
        mat = fld.matmul(td_b.proj, fld.matmul(big, td_a.sect))
        return ModuleMap(va.module, vb.module, mat, _validate=False)


class HomFunctor:
    """Hom_X(B, -) for a (X, Y)-bimodule B: Mod X -> Mod Y."""

    def __init__(self, bimod: Bimodule):
        self.bimod = bimod
        self.source_algebra = bimod.left
        self.target_algebra = bimod.right

    def apply(self, m: Module) -> FunctorValue:
        out, hb = hom_module(self.bimod, m)
        return FunctorValue(out, hb)

    def on_map(self, f: ModuleMap, va: FunctorValue, vb: FunctorValue) -> ModuleMap:
        fld = f.source.field
        hb_a: HomBasis = va.data
        hb_b: HomBasis = vb.data
        mat = fld.zeros(vb.module.dim, va.module.dim)
        for s, mp in enumerate(hb_a.maps):
            mat[:, s] = hb_b.coords(fld.matmul(f.matrix, mp.matrix), fld)
        return ModuleMap(va.module, vb.module, mat, _validate=False)


class CornerFunctor:
    """M |-> eM with its eLe-module structure."""

    def __init__(self, rec: RecollementData):
        self.rec = rec
        self.source_algebra = rec.lam
        self.target_algebra = rec.gamma

    def apply(self, m: Module) -> FunctorValue:
        f = m.field
        cols = column_space_basis(m.act_vector(self.rec.e.element), f)
        x = left_inverse(cols, f) if cols.shape[1] else f.zeros(0, m.dim)
        g = self.rec.gamma
        act = f.zeros(g.dim, cols.shape[1], cols.shape[1])
        for t in range(g.dim):
            act[t] = f.matmul(x, f.matmul(m.act_vector(self.rec.corner_embedding.matrix[:, t]), cols))
        return FunctorValue(Module(g, act), (cols, x))

    def on_map(self, f: ModuleMap, va: FunctorValue, vb: FunctorValue) -> ModuleMap:
        fld = f.source.field
        cols_a, _ = va.data
        _, x_b = vb.data
        return ModuleMap(va.module, vb.module, fld.matmul(x_b, fld.matmul(f.matrix, cols_a)), _validate=False)


class InflationFunctor:
    """Mod S -> Mod L along the projection L ->> S = L/LeL."""

    def __init__(self, rec: RecollementData):
        self.rec = rec
        self.source_algebra = rec.sigma
        self.target_algebra = rec.lam

    def apply(self, m: Module) -> FunctorValue:
        f = m.field
        proj = self.rec.quotient_projection.projection
        lam = self.rec.lam
        act = f.zeros(lam.dim, m.dim, m.dim)
        for i in range(lam.dim):
            act[i] = m.act_vector(proj[:, i])
        return FunctorValue(Module(lam, act))

    def on_map(self, f: ModuleMap, va: FunctorValue, vb: FunctorValue) -> ModuleMap:
        return ModuleMap(va.module, vb.module, f.matrix, _validate=False)


class TopQuotientFunctor:
    """q: M |-> M/(LeL)M, a module over S."""

    def __init__(self, rec: RecollementData):
        self.rec = rec
        self.source_algebra = rec.lam
        self.target_algebra = rec.sigma

    def _ideal_subspace_rows(self, m: Module) -> np.ndarray:
        f = m.field
        rows = self.rec.ideal_rows
        if rows.shape[0] == 0 or m.dim == 0:
            return f.zeros(0, m.dim)
        mats = [m.act_vector(rows[t]) for t in range(rows.shape[0])]
        return column_space_basis(np.concatenate(mats, axis=1), f).T

    def apply(self, m: Module) -> FunctorValue:
        f = m.field
        quot_l, proj = quotient_module(m, self._ideal_subspace_rows(m))
        sig = self.rec.sigma
        sect = self.rec.quotient_projection.section
        act = f.zeros(sig.dim, quot_l.dim, quot_l.dim)
        for t in range(sig.dim):
            act[t] = f.matmul(proj.matrix, f.matmul(m.act_vector(sect[:, t]), proj.section))
        return FunctorValue(Module(sig, act), proj)

    def on_map(self, f: ModuleMap, va: FunctorValue, vb: FunctorValue) -> ModuleMap:
        fld = f.source.field
        proj_a: ModuleMap = va.data
        proj_b: ModuleMap = vb.data
        mat = fld.matmul(proj_b.matrix, fld.matmul(f.matrix, proj_a.section))
        return ModuleMap(va.module, vb.module, mat, _validate=False)


class SocleFunctor:
    """p: M |-> {x : (LeL)x = 0}, a module over S."""

    def __init__(self, rec: RecollementData):
        self.rec = rec
        self.source_algebra = rec.lam
        self.target_algebra = rec.sigma

    def apply(self, m: Module) -> FunctorValue:
        f = m.field
        rows = self.rec.ideal_rows
        mats = [m.act_vector(rows[t]) for t in range(rows.shape[0])]
        cols = intersect_kernels(mats, m.dim, f) if mats else f.eye(m.dim)
        x = left_inverse(cols, f) if cols.shape[1] else f.zeros(0, m.dim)
        sig = self.rec.sigma
        sect = self.rec.quotient_projection.section
        act = f.zeros(sig.dim, cols.shape[1], cols.shape[1])
        for t in range(sig.dim):
            act[t] = f.matmul(x, f.matmul(m.act_vector(sect[:, t]), cols))
        return FunctorValue(Module(sig, act), (cols, x))

    def on_map(self, f: ModuleMap, va: FunctorValue, vb: FunctorValue) -> ModuleMap:
        fld = f.source.field
        cols_a, _ = va.data
        _, x_b = vb.data
        return ModuleMap(va.module, vb.module, fld.matmul(x_b, fld.matmul(f.matrix, cols_a)), _validate=False)


# -- units and counits -----------------------------------------------------------


def counit_mu(rec: RecollementData, m: Module) -> tuple[ModuleMap, FunctorValue, FunctorValue]:
    """mu_M: l(e(M)) -> M, lambda e (x) x |-> (lambda e) . x.

    Returns (map, value of e(M), value of le(M))."""
    f = rec.field
    fe = rec.functor_e()
    fl = rec.functor_l()
    em = fe.apply(m)
    lem = fl.apply(em.module)
    cols_e, _ = em.data
    bl, _ = _lambda_e_basis(rec)
    td: TensorData = lem.data
    raw = f.zeros(m.dim, rec.lambda_e.dim * em.module.dim)
    for s in range(rec.lambda_e.dim):
        acting = m.act_vector(bl[:, s])
        block = f.matmul(acting, cols_e)
        raw[:, s * em.module.dim : (s + 1) * em.module.dim] = block
    mat = f.matmul(raw, td.sect)
    return ModuleMap(lem.module, m, mat), em, lem


def unit_nu(rec: RecollementData, m: Module) -> tuple[ModuleMap, FunctorValue, FunctorValue]:
    """nu_M: M -> r(e(M)), x |-> (u |-> e-coordinates of u . x)."""
    f = rec.field
    fe = rec.functor_e()
    fr = rec.functor_r()
    em = fe.apply(m)
    rem = fr.apply(em.module)
    _, x_e = em.data
    be, _ = _e_lambda_basis(rec)
    hb: HomBasis = rem.data
    mat = f.zeros(rem.module.dim, m.dim)
    for bidx in range(m.dim):
        fmat = f.zeros(em.module.dim, rec.e_lambda.dim)
        for s in range(rec.e_lambda.dim):
            fmat[:, s] = f.matmul(x_e, m.act_vector(be[:, s]))[:, bidx]
        mat[:, bidx] = hb.coords(fmat, f)
    return ModuleMap(m, rem.module, mat), em, rem


def unit_lambda(rec: RecollementData, m: Module) -> tuple[ModuleMap, FunctorValue]:
    """lambda_M: M -> i(q(M)) (the quotient projection)."""
    fq = rec.functor_q()
    fi = rec.functor_i()
    qm = fq.apply(m)
    iqm = fi.apply(qm.module)
    proj: ModuleMap = qm.data
    return ModuleMap(m, iqm.module, proj.matrix), iqm


def counit_kappa(rec: RecollementData, m: Module) -> tuple[ModuleMap, FunctorValue]:
    """kappa_M: i(p(M)) -> M (the inclusion)."""
    fp = rec.functor_p()
    fi = rec.functor_i()
    pm = fp.apply(m)
    ipm = fi.apply(pm.module)
    cols, _ = pm.data
    return ModuleMap(ipm.module, m, cols), ipm


def unit_e_l(rec: RecollementData, n: Module) -> ModuleMap:
    """The unit N -> e(l(N)) (an isomorphism; l is fully faithful)."""
    f = rec.field
    fl = rec.functor_l()
    fe = rec.functor_e()
    ln = fl.apply(n)
    eln = fe.apply(ln.module)
    td: TensorData = ln.data
    bl, _ = _lambda_e_basis(rec)
    # e (x) x as a pure tensor: coordinates of e inside Le
    e_in_le = solve(bl, rec.e.element, f)
    raw = f.zeros(td.m_dim * td.n_dim, n.dim)
    for s in range(td.m_dim):
        if e_in_le[s] == 0:
            continue
        raw[s * td.n_dim : (s + 1) * td.n_dim] = f.normalize(e_in_le[s] * f.eye(n.dim))
    in_ln = f.matmul(td.proj, raw)
    cols_e, x_e = eln.data
    return ModuleMap(n, eln.module, f.matmul(x_e, in_ln), _validate=False)


def counit_e_r(rec: RecollementData, n: Module) -> ModuleMap:
    """The counit e(r(N)) -> N, F |-> F(e) (an isomorphism; r is fully faithful)."""
    f = rec.field
    fr = rec.functor_r()
    fe = rec.functor_e()
    rn = fr.apply(n)
    ern = fe.apply(rn.module)
    hb: HomBasis = rn.data
    be, _ = _e_lambda_basis(rec)
    e_in_el = solve(be, rec.e.element, f)
    eval_at_e = f.zeros(n.dim, rn.module.dim)
    for s, mp in enumerate(hb.maps):
        eval_at_e[:, s] = f.matmul(mp.matrix, e_in_el)
    cols, _ = ern.data
    return ModuleMap(ern.module, n, f.matmul(eval_at_e, cols), _validate=False)


def _e_lambda_basis(rec: RecollementData):
    f = rec.field
    be = column_space_basis(rec.lam.left_mult_matrix(rec.e.element), f)
    return be, left_inverse(be, f)


def _lambda_e_basis(rec: RecollementData):
    f = rec.field
    bl = column_space_basis(rec.lam.right_mult_matrix(rec.e.element), f)
    return bl, left_inverse(bl, f)


# -- canonical exact sequences -----------------------------------------------------


def _image_rows(mat: np.ndarray, f: Field) -> np.ndarray:
    return column_space_basis(mat, f).T


def _same_row_space(a: np.ndarray, b: np.ndarray, f: Field) -> bool:
    if a.shape[0] == b.shape[0] == 0:
        return True
    ra = rref(a, f) if a.shape[0] else None
    rb = rref(b, f) if b.shape[0] else None
    rka = ra.rank if ra else 0
    rkb = rb.rank if rb else 0
    if rka != rkb:
        return False
    stacked = np.concatenate([a, b], axis=0)
    return rref(stacked, f).rank == rka


def verify_canonical_sequences(rec: RecollementData, m: Module) -> dict:
    """Check exactness of the two four-term canonical sequences at M and that
    the outer terms are killed by e.  Returns {'status': 'PASS'} or a failure
    record naming the spot."""
    f = rec.field
    failures = []

    mu, em, lem = counit_mu(rec, m)
    lam_map, iqm = unit_lambda(rec, m)
    im_mu = _image_rows(mu.matrix, f)
    ker_lam = kernel_basis(lam_map.matrix, f).T
    if not _same_row_space(im_mu, ker_lam, f):
        failures.append("first sequence: image(mu) != kernel(lambda)")
    if not lam_map.is_surjective():
        failures.append("first sequence: lambda not epi onto iq(M)")
    ker_mu = kernel_basis(mu.matrix, f)
    if ker_mu.shape[1] and not f.is_zero(f.matmul(lem.module.act_vector(rec.e.element), ker_mu)):
        failures.append("first sequence: Ker(mu) not killed by e")

    kappa, ipm = counit_kappa(rec, m)
    nu, em2, rem = unit_nu(rec, m)
    ker_nu = kernel_basis(nu.matrix, f).T
    im_kappa = _image_rows(kappa.matrix, f)
    if not _same_row_space(im_kappa, ker_nu, f):
        failures.append("second sequence: image(kappa) != kernel(nu)")
    if not kappa.is_injective():
        failures.append("second sequence: kappa not mono")
    im_nu = _image_rows(nu.matrix, f)
    coker, _ = quotient_module(rem.module, im_nu)
    if coker.dim and not f.is_zero(coker.act_vector(rec.e.element)):
        failures.append("second sequence: Coker(nu) not killed by e")

    if failures:
        return {"status": "FAIL", "failures": failures, "module_dim": m.dim}
    return {"status": "PASS", "module_dim": m.dim}


# -- exactness probes ----------------------------------------------------------------


def probe_exactness(functor, samples: int, seed: int, extra_sequences=None) -> dict:
    """Apply the functor to random short exact sequences over its source and
    check the images stay exact.  'exact' is sample evidence, not proof; a
    failure is a proof of non-exactness and carries the witness."""
    rng = np.random.default_rng(seed)
    a = functor.source_algebra
    sequences = list(extra_sequences or [])
    for _ in range(samples):
        sequences.append(random_short_exact_sequence(a, rng))
    for idx, (incl, proj) in enumerate(sequences):
        va = functor.apply(incl.source)
        vb = functor.apply(incl.target)
        vc = functor.apply(proj.target)
        fi = functor.on_map(incl, va, vb)
        fp = functor.on_map(proj, vb, vc)
        f = incl.source.field
        problems = []
        if not fi.is_injective():
            problems.append("left term not mono")
        if not fp.is_surjective():
            problems.append("right term not epi")
        if not _same_row_space(_image_rows(fi.matrix, f), kernel_basis(fp.matrix, f).T, f):
            problems.append("middle not exact")
        if problems:
            return {
                "status": "Failed",
                "problems": problems,
                "witness_index": idx,
                "witness_dims": [incl.source.dim, incl.target.dim, proj.target.dim],
                "witness": {
                    "sub": serialize_module(incl.source),
                    "middle": serialize_module(incl.target),
                    "quotient": serialize_module(proj.target),
                    "inclusion": incl.matrix.tolist(),
                    "projection": proj.matrix.tolist(),
                },
                "seed": seed,
            }
    return {"status": "Exact", "samples": len(sequences), "seed": seed, "note": "evidence, not proof"}


# -- torsion machinery ----------------------------------------------------------------


def torsion_class_membership(rec: RecollementData, l_tower_m1: Bimodule, m: Module) -> bool:
    """Is l1(M) = M_1 (x)_L M zero?  Needs l-height >= 2 (caller checks)."""
    out, _ = tensor_over(l_tower_m1, m)
    return out.dim == 0


def torsion_audit(rec: RecollementData, l_tower, t_samples, f_samples) -> dict:
    """Necessary-condition audits for moving a torsion pair through l1.

    Sample-based only: checks Hom(T, F) = 0, Hom(l1 T, l1 F) = 0, and that
    l0 l1 (F) / l2 l1 (T) stay Hom-orthogonal against the given samples.
    Requires the l-tower to provide M_1 and M_2 (l-height >= 3).
    """
    if len(l_tower) < 3:
        raise AlgebraError("torsion_audit needs l-height >= 3 (tower rungs 0..2 projective)")
    m1 = l_tower[1].bimodule  # (G, L)
    m2 = l_tower[2].bimodule  # (L, G)
    l1 = TensorFunctor(m1)
    l0 = rec.functor_l()
    l2 = TensorFunctor(m2)
    checks = []

    def hom_zero(x: Module, y: Module) -> bool:
        return len(hom_space(x, y)) == 0

    ok_tf = all(hom_zero(t, fm) for t in t_samples for fm in f_samples)
    checks.append(("Hom(T, F) = 0 on samples", ok_tf))
    l1t = [l1.apply(t).module for t in t_samples]
    l1f = [l1.apply(fm).module for fm in f_samples]
    ok_l1 = all(hom_zero(x, y) for x in l1t for y in l1f)
    checks.append(("Hom(l1 T, l1 F) = 0 on samples", ok_l1))
    ok_f_side = all(
        hom_zero(t, l0.apply(y).module) for y in l1f for t in t_samples
    )
    checks.append(("Hom(T, l0 l1 F) = 0 on samples (F-side containment audit)", ok_f_side))
    ok_t_side = all(
        hom_zero(l2.apply(x).module, fm) for x in l1t for fm in f_samples
    )
    checks.append(("Hom(l2 l1 T, F) = 0 on samples (T-side containment audit)", ok_t_side))
    status = "PASS" if all(ok for _, ok in checks) else "FAIL"
    return {
        "status": status,
        "checks": [{"check": name, "ok": ok} for name, ok in checks],
        "note": "necessary-condition audits on finite samples, not closure-complete verification",
    }
