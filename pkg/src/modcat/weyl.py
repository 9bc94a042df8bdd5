"""Finite Weyl groups, the star involution, and level-kappa affine folding.

Group elements act on fundamental-weight coordinates as integer matrices.
The shifted affine action of W extended by kappa * Q^vee translations is
realized by the folding routine, which drives both the wall-vanishing
bookkeeping and the fusion-rule computation downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .lie import (RootSystemData, Weight, pairing, theta_pairing,
                  wadd, wsub, wneg)

DEFAULT_WEYL_CAP = 10 ** 6

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    length: int

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def apply(self, w: Weight) -> Weight:
        return tuple(sum(row[j] * w[j] for j in range(len(w)))
                     for row in self.matrix)


@dataclass(frozen=True)
class AffineFoldResult:
    """Representative in the closed alcove plus the folding sign.

    sign is 0 exactly when the shifted orbit meets a wall.  The folding
    element w of the affine group is recorded as (linear, translation):
    representative + rho = linear(weight + rho) + translation, where the
    translation lies in kappa * Q^vee.
    """

    representative: Weight
    sign: int
    linear: Matrix
    translation: Weight


def _identity(rank: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))


def _mat_apply(mat: Matrix, w: Weight) -> Weight:
    return tuple(sum(row[j] * w[j] for j in range(len(w))) for row in mat)


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n))
                       for j in range(n)) for i in range(n))


def simple_reflection_matrix(rs: RootSystemData, i: int) -> Matrix:
    # s_i(lam)_k = lam_k - lam_i * a_ki
    return tuple(tuple(int(k == j) - (rs.cartan[k][i] if j == i else 0)
                       for j in range(rs.rank)) for k in range(rs.rank))


def weyl_order(rs: RootSystemData) -> int:
    """Order of the Weyl group from the classical formulas."""
    n = rs.rank
    if rs.series == "A":
        return factorial(n + 1)
    if rs.series in ("B", "C"):
        return 2 ** n * factorial(n)
    if rs.series == "D":
        return 2 ** (n - 1) * factorial(n)
    if rs.series == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if rs.series == "F":
        return 1152
    return 12  # G2


@lru_cache(maxsize=None)
def enumerate_weyl(rs: RootSystemData,
                   cap: int = DEFAULT_WEYL_CAP) -> tuple[WeylElement, ...]:
    """All Weyl elements with exact lengths, or a ValueError beyond the cap."""
    order = weyl_order(rs)
    if order > cap:
        raise ValueError(
            f"Weyl group of {rs.series}{rs.rank} has {order} elements, "
            f"beyond the enumeration cap {cap}")
    gens = [simple_reflection_matrix(rs, i) for i in range(rs.rank)]
    seen: dict[Matrix, int] = {_identity(rs.rank): 0}
    frontier = [_identity(rs.rank)]
    length = 0
    while frontier:
        length += 1
        nxt = []
        for mat in frontier:
            for g in gens:
                cand = _mat_mul(mat, g)
                if cand not in seen:
                    seen[cand] = length
                    nxt.append(cand)
        frontier = nxt
    assert len(seen) == order
    elements = [WeylElement(mat, l) for mat, l in seen.items()]
    elements.sort(key=lambda e: (e.length, e.matrix))
    return tuple(elements)


def make_dominant(rs: RootSystemData, lam: Weight) -> tuple[Weight, int]:
    """Dominant representative of the (unshifted) W-orbit and fold parity.

    Parity is the usual sign (-1)^(number of reflections used); it is only
    meaningful when the orbit is regular.
    """
    cur = lam
    parity = 1
    while True:
        i = next((k for k, c in enumerate(cur) if c < 0), None)
        if i is None:
            return cur, parity
        ci = cur[i]
        cur = tuple(cur[k] - ci * rs.cartan[k][i] for k in range(rs.rank))
        parity = -parity


@lru_cache(maxsize=None)
def longest_element(rs: RootSystemData) -> Matrix:
    """Matrix of the longest Weyl element w0."""
    cur = wneg(rs.rho)
    mat = _identity(rs.rank)
    while True:
        i = next((k for k, c in enumerate(cur) if c < 0), None)
        if i is None:
            break
        ci = cur[i]
        cur = tuple(cur[k] - ci * rs.cartan[k][i] for k in range(rs.rank))
        mat = _mat_mul(simple_reflection_matrix(rs, i), mat)
    # mat maps -rho to rho; w0 is an involution, so this is w0 itself
    assert _mat_apply(mat, wneg(rs.rho)) == rs.rho
    return mat


def star(rs: RootSystemData, lam: Weight) -> Weight:
    """The duality involution lam -> -w0(lam)."""
    return wneg(_mat_apply(longest_element(rs), lam))


def _theta_bounded_dominant(rs: RootSystemData, bound) -> list[Weight]:
    """Dominant weights with <lam, theta^vee> at most the bound."""
    comarks = [theta_pairing(rs, w) for w in rs.fundamental_weights]
    out: list[Weight] = []

    def rec(prefix: list[int], left):
        if len(prefix) == rs.rank:
            out.append(tuple(prefix))
            return
        c = comarks[len(prefix)]
        top = int(left / c)
        for v in range(top + 1):
            rec(prefix + [v], left - v * c)

    rec([], bound)
    out.sort()
    return out


def enumerate_alcove(rs: RootSystemData, kappa: int) -> tuple[Weight, ...]:
    """Dominant weights with <lam+rho, theta^vee> < kappa, lex-ordered."""
    if kappa < rs.dual_coxeter:
        raise ValueError(
            f"kappa = {kappa} below the dual Coxeter number "
            f"{rs.dual_coxeter} of {rs.series}{rs.rank}")
    return tuple(_theta_bounded_dominant(rs, kappa - rs.dual_coxeter))


def enumerate_ck(rs: RootSystemData, bound: int) -> tuple[Weight, ...]:
    """Type-A sub-alcove: dominant weights with <lam, theta^vee> <= bound."""
    if rs.series != "A":
        raise ValueError("the sub-alcove is defined for type A only")
    if bound < 0:
        raise ValueError(f"negative level bound {bound}")
    out = _theta_bounded_dominant(rs, bound)
    # cross-check against the second characterization with k = 1
    kappa = bound + rs.dual_coxeter
    for lam in out:
        shifted = wadd(lam, rs.rho)
        assert all(pairing(rs, shifted, alpha) < kappa
                   for alpha in rs.positive_roots)
    return tuple(out)


def fold_to_alcove(rs: RootSystemData, kappa: int,
                   lam: Weight) -> AffineFoldResult:
    """Fold lam into the closed alcove under the shifted affine action."""
    if kappa < rs.dual_coxeter:
        raise ValueError(
            f"kappa = {kappa} below the dual Coxeter number "
            f"{rs.dual_coxeter} of {rs.series}{rs.rank}")
    theta = rs.highest_root
    nu = wadd(lam, rs.rho)
    linear = _identity(rs.rank)
    translation = rs.zero
    parity = 1
    while True:
        i = next((k for k, c in enumerate(nu) if c < 0), None)
        if i is not None:
            ci = nu[i]
            nu = tuple(nu[k] - ci * rs.cartan[k][i] for k in range(rs.rank))
            refl = simple_reflection_matrix(rs, i)
            linear = _mat_mul(refl, linear)
            translation = _mat_apply(refl, translation)
            parity = -parity
            continue
        height = theta_pairing(rs, nu)
        if height > kappa:
            # reflect across the affine wall <x, theta^vee> = kappa
            excess = height - kappa
            assert excess.denominator == 1
            nu = wsub(nu, tuple(int(excess) * t for t in theta))
            # linear part s_theta, translation part kappa * theta
            refl = _reflection_in_root(rs, theta)
            linear = _mat_mul(refl, linear)
            translation = wadd(_mat_apply(refl, translation),
                               tuple(kappa * t for t in theta))
            parity = -parity
            continue
        break
    on_wall = any(c == 0 for c in nu) or theta_pairing(rs, nu) == kappa
    return AffineFoldResult(
        representative=wsub(nu, rs.rho),
        sign=0 if on_wall else parity,
        linear=linear,
        translation=translation,
    )


@lru_cache(maxsize=None)
def _reflection_in_root(rs: RootSystemData, alpha: Weight) -> Matrix:
    cols = []
    for j in range(rs.rank):
        e = tuple(int(i == j) for i in range(rs.rank))
        p = pairing(rs, e, alpha)
        assert p.denominator == 1
        cols.append(wsub(e, tuple(int(p) * a for a in alpha)))
    return tuple(tuple(cols[j][i] for j in range(rs.rank))
                 for i in range(rs.rank))
