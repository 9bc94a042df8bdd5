"""Modular data of the semisimple quotient category at level kappa.

The unnormalized matrices are stored exactly: s by the alternating-sum
formula over the Weyl group, t as the diagonal of twists, c as the charge
conjugation permutation.  The quantities that would need square roots
(the total dimension D and the sixth root zeta of p+/p-) never appear as
exact objects; every exact identity is phrased against D^2, p+ and p-,
and zeta is constructed directly from its closed form.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .chardata import quantum_dim, weyl_denominator_value
from .lie import (RootSystemData, Weight, form, lattice_index, wadd, wscale)
from .numeric import CycNum, approx_eq, default_tolerance, epsilon_power
from .report import VerificationReport
from .weyl import enumerate_alcove, enumerate_weyl, star

CycMatrix = tuple[tuple[CycNum, ...], ...]


@dataclass(frozen=True)
class ModularData:
    rs: RootSystemData
    kappa: int
    alcove: tuple[Weight, ...]
    smatrix: CycMatrix
    tmatrix: CycMatrix
    cmatrix: tuple[tuple[int, ...], ...]
    dims: tuple[CycNum, ...]
    p_plus: CycNum
    p_minus: CycNum
    d_squared: CycNum
    zeta: CycNum
    central_charge: Fraction

    @property
    def size(self) -> int:
        return len(self.alcove)

    def index_of(self, lam: Weight) -> int:
        return self.alcove.index(lam)


def twist(rs: RootSystemData, kappa: int, lam: Weight) -> CycNum:
    """theta_lam = eps^((lam, lam + 2 rho)')."""
    exp = form(rs, lam, wadd(lam, wscale(2, rs.rho)), "primed")
    return epsilon_power(exp, rs.lacing, kappa)


def s_entry_extended(rs: RootSystemData, kappa: int, lam: Weight,
                     mu: Weight) -> CycNum:
    """The s-matrix formula extended to arbitrary weight pairs."""
    den = weyl_denominator_value(rs, kappa, wscale(-2, rs.rho))
    num = CycNum.zero()
    mu_sh = wadd(mu, rs.rho)
    lam_sh = wadd(lam, rs.rho)
    for w in enumerate_weyl(rs):
        exp = -2 * form(rs, w.apply(lam_sh), mu_sh, "primed")
        term = epsilon_power(exp, rs.lacing, kappa)
        num = num + (term if w.sign > 0 else -term)
    return num / den


def build_modular_data(rs: RootSystemData, kappa: int) -> ModularData:
    """All modular data for (rs, kappa); kappa at least the dual Coxeter number."""
    alcove = enumerate_alcove(rs, kappa)
    elements = enumerate_weyl(rs)
    den = weyl_denominator_value(rs, kappa, wscale(-2, rs.rho))
    den_inv = den.inverse()

    # s is symmetric: fill the upper triangle once
    n = len(alcove)
    smat: list[list[CycNum]] = [[None] * n for _ in range(n)]
    for a, lam in enumerate(alcove):
        orbit = [(w.sign, w.apply(wadd(lam, rs.rho))) for w in elements]
        for b in range(a, n):
            mu_sh = wadd(alcove[b], rs.rho)
            num = CycNum.zero()
            for sign, img in orbit:
                term = epsilon_power(-2 * form(rs, img, mu_sh, "primed"),
                                     rs.lacing, kappa)
                num = num + (term if sign > 0 else -term)
            smat[a][b] = smat[b][a] = num * den_inv

    tdiag = [twist(rs, kappa, lam) for lam in alcove]
    tmat = tuple(tuple(tdiag[i] if i == j else CycNum.zero()
                       for j in range(n)) for i in range(n))
    cmat = tuple(tuple(int(alcove[j] == star(rs, alcove[i]))
                       for j in range(n)) for i in range(n))

    dims = tuple(quantum_dim(rs, kappa, lam) for lam in alcove)
    p_plus = CycNum.zero()
    p_minus = CycNum.zero()
    for theta, dim in zip(tdiag, dims):
        sq = dim * dim
        p_plus = p_plus + theta * sq
        p_minus = p_minus + theta.conjugate() * sq

    hvee = rs.dual_coxeter
    zeta = epsilon_power(
        Fraction(kappa - hvee, hvee) * form(rs, rs.rho, rs.rho, "primed"),
        rs.lacing, kappa)
    central = Fraction((kappa - hvee) * rs.dim_adjoint, kappa)

    return ModularData(
        rs=rs, kappa=kappa, alcove=alcove,
        smatrix=tuple(tuple(row) for row in smat),
        tmatrix=tmat, cmatrix=cmat, dims=dims,
        p_plus=p_plus, p_minus=p_minus, d_squared=p_plus * p_minus,
        zeta=zeta, central_charge=central,
    )


# -- exact matrix helpers ----------------------------------------------------

def mat_mul(a, b) -> CycMatrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = CycNum.zero()
            for k in range(n):
                x = a[i][k]
                y = b[k][j]
                if not (x.is_zero() or y.is_zero()):
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_scale(c: CycNum, a) -> CycMatrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_identity(n: int) -> CycMatrix:
    one, zero = CycNum.one(), CycNum.zero()
    return tuple(tuple(one if i == j else zero for j in range(n))
                 for i in range(n))


def mat_conj_transpose(a) -> CycMatrix:
    n = len(a)
    return tuple(tuple(a[j][i].conjugate() for j in range(n))
                 for i in range(n))


def first_mismatch(a, b) -> str:
    for i, (ra, rb) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return f"entry ({i},{j}): {x!r} vs {y!r}"
    return "no mismatch"


def mat_det_is_nonzero(a) -> bool:
    """Exact nondegeneracy test by Gaussian elimination over the field."""
    n = len(a)
    m = [list(row) for row in a]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not m[r][col].is_zero()),
                     None)
        if pivot is None:
            return False
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col].inverse()
        for r in range(col + 1, n):
            if not m[r][col].is_zero():
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return True


def int_to_cyc_matrix(mat) -> CycMatrix:
    return tuple(tuple(CycNum.from_rational(x) for x in row) for row in mat)


# -- the verification suite -----------------------------------------------------

def verify_modular_relations(md: ModularData,
                             tol: float | None = None) -> VerificationReport:
    """Exact checks of the defining relations of the modular data."""
    if tol is None:
        tol = default_tolerance()
    t0 = time.monotonic()
    rep = VerificationReport(suite="modular")
    rs, kappa = md.rs, md.kappa
    n = md.size
    s = md.smatrix
    t = md.tmatrix
    c = int_to_cyc_matrix(md.cmatrix)

    s2 = mat_mul(s, s)
    target = mat_scale(md.d_squared, c)
    rep.record("s^2 = D^2 c", mat_eq(s2, target),
               first_mismatch(s2, target))

    index = lattice_index(rs, "P", f"{kappa}Qv")
    den = weyl_denominator_value(rs, kappa, wscale(-2, rs.rho))
    closed = (CycNum.from_rational(index * (-1) ** len(rs.positive_roots))
              * (den * den).inverse())
    rep.record("D^2 closed form |P/kQv| (-1)^|R+| delta^-2",
               md.d_squared == closed,
               f"{md.d_squared!r} vs {closed!r}")

    rep.record("D^2 = sum of squared quantum dimensions",
               md.d_squared == sum((d * d for d in md.dims),
                                   start=CycNum.zero()),
               repr(md.d_squared))

    st = mat_mul(s, t)
    st3 = mat_mul(mat_mul(st, st), st)
    ps2 = mat_scale(md.p_plus, s2)
    rep.record("(st)^3 = p+ s^2", mat_eq(st3, ps2), first_mismatch(st3, ps2))

    rep.record("s^2 t = t s^2", mat_eq(mat_mul(s2, t), mat_mul(t, s2)),
               "twist does not commute with s^2")

    ssd = mat_mul(s, mat_conj_transpose(s))
    unit_target = mat_scale(md.d_squared, mat_identity(n))
    rep.record("s s^dagger = D^2 Id", mat_eq(ssd, unit_target),
               first_mismatch(ssd, unit_target))

    rep.record("det s != 0", mat_det_is_nonzero(s), "singular s-matrix")

    rep.record("zeta^6 p- = p+", md.zeta ** 6 * md.p_minus == md.p_plus,
               f"zeta^6 p- = {(md.zeta ** 6 * md.p_minus)!r}")

    rep.record("conj(p+) = p-", md.p_plus.conjugate() == md.p_minus,
               repr(md.p_plus))

    # symmetry bundle on the stored matrix
    sym_ok = True
    conj_ok = True
    star_ok = True
    for i, lam in enumerate(md.alcove):
        li = md.index_of(star(rs, lam))
        for j, mu in enumerate(md.alcove):
            mj = md.index_of(star(rs, mu))
            sym_ok = sym_ok and s[i][j] == s[j][i]
            conj_ok = conj_ok and s[i][j].conjugate() == s[i][mj]
            star_ok = star_ok and s[i][j] == s[li][mj]
    rep.record("s symmetric", sym_ok)
    rep.record("conj(s_{lm}) = s_{l m*}", conj_ok)
    rep.record("s_{lm} = s_{l* m*}", star_ok)

    rep.record("s_{l 0} = quantum dimensions",
               all(s[i][0] == md.dims[i] for i in range(n)))

    twist_ok = all(
        t[i][i].conjugate() == t[i][i].inverse()
        and t[i][i] == t[md.index_of(star(rs, lam))][md.index_of(star(rs, lam))]
        for i, lam in enumerate(md.alcove))
    rep.record("twists unitary and star-invariant, theta_0 = 1",
               twist_ok and t[0][0] == CycNum.one())

    # float-mode checks: zeta against the central charge, D against sqrt
    zf = md.zeta.to_complex()
    want = cmath.exp(2j * cmath.pi * float(md.central_charge) / 24)
    rep.record("float: zeta = exp(2 pi i c / 24)", approx_eq(zf, want, tol),
               f"{zf} vs {want}")
    dfloat = md.d_squared.to_complex()
    rep.record("float: D^2 real positive",
               abs(dfloat.imag) <= tol and dfloat.real > 0, f"{dfloat}")
    dpos = dfloat.real ** 0.5
    rep.record("float: D zeta^3 = p+",
               approx_eq(dpos * md.zeta.to_complex() ** 3,
                         md.p_plus.to_complex(), tol))
    sine = 1.0
    for alpha in rs.positive_roots:
        sine *= (2 * math.sin(math.pi * float(form(rs, alpha, rs.rho))
                              / kappa)) ** 2
    rep.record("float: D^2 = |P/kQv| / prod(2 sin)^2",
               approx_eq(dfloat, index / sine, tol),
               f"{dfloat} vs {index / sine}")

    rep.duration_seconds = time.monotonic() - t0
    return rep
