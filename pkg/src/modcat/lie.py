"""Root-system and weight-lattice arithmetic for the simple Lie types A-G.

Weights are integer coordinate vectors in the fundamental-weight basis.
Roots live in the same basis: the j-th simple root is the j-th column of
the Cartan matrix.  Every bilinear-form value is an exact Fraction; the
"normalized" form gives the highest root squared length 2, the "primed"
form gives short roots squared length 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

Weight = tuple[int, ...]

_RANK_RANGES = {
    "A": (1, 512),
    "B": (2, 512),
    "C": (2, 512),
    "D": (4, 512),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def wneg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def wscale(c: int, a: Weight) -> Weight:
    return tuple(c * x for x in a)


@dataclass(frozen=True)
class RootSystemData:
    """Immutable tables for one simple Lie type."""

    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Weight, ...]
    fundamental_weights: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight
    highest_root: Weight
    dual_coxeter: int
    lacing: int                       # m: 1, 2 or 3
    symmetrizers: tuple[int, ...]     # d_i = (alpha_i, alpha_i)'/2
    cartan_index: int                 # N = |P/Q|
    dim_adjoint: int
    gram_primed: tuple[tuple[Fraction, ...], ...]

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    def __repr__(self) -> str:
        return f"RootSystemData({self.series}{self.rank})"


def _cartan_matrix(series: str, rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain(upto: int) -> None:
        for i in range(upto):
            a[i][i + 1] = -1
            a[i + 1][i] = -1

    if series == "A":
        chain(rank - 1)
    elif series == "B":
        chain(rank - 2)
        a[rank - 2][rank - 1] = -1
        a[rank - 1][rank - 2] = -2    # last node short
    elif series == "C":
        chain(rank - 2)
        a[rank - 2][rank - 1] = -2    # last node long
        a[rank - 1][rank - 2] = -1
    elif series == "D":
        chain(rank - 2)
        a[rank - 3][rank - 1] = -1
        a[rank - 1][rank - 3] = -1
    elif series == "E":
        chain(rank - 2)
        a[rank - 4][rank - 1] = -1
        a[rank - 1][rank - 4] = -1
    elif series == "F":
        a[0][1] = a[1][0] = -1
        a[1][2] = -1
        a[2][1] = -2
        a[2][3] = a[3][2] = -1
    elif series == "G":
        a[0][1] = -3
        a[1][0] = -1
    return a


def _symmetrizers(cartan: list[list[int]]) -> list[int]:
    # Minimal positive integers d with d_i a_ij = d_j a_ji, gcd 1.
    rank = len(cartan)
    d: list[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(rank):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                queue.append(j)
    assert all(x is not None for x in d), "Cartan matrix not connected"
    denom = 1
    for x in d:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


def _fraction_matrix_inverse(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _positive_roots(cartan: list[list[int]],
                    inv_cartan: list[list[Fraction]]) -> list[Weight]:
    rank = len(cartan)
    simple = [tuple(cartan[i][j] for i in range(rank)) for j in range(rank)]

    def reflect(i: int, w: Weight) -> Weight:
        return tuple(w[k] - w[i] * cartan[k][i] for k in range(rank))

    roots: set[Weight] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rank):
                r = reflect(i, w)
                if r not in roots:
                    roots.add(r)
                    nxt.append(r)
        frontier = nxt

    def alpha_coords(w: Weight) -> list[Fraction]:
        return [sum(inv_cartan[i][j] * w[j] for j in range(rank))
                for i in range(rank)]

    positive = [w for w in roots if all(c >= 0 for c in alpha_coords(w))]
    positive.sort(key=lambda w: (sum(alpha_coords(w)), w))
    return positive


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystemData:
    """Construct the full data table for one simple type, e.g. ("A", 2)."""
    series = series.upper()
    if series not in _RANK_RANGES:
        raise ValueError(
            f"unknown series {series!r}; valid types are "
            "A(n>=1), B(n>=2), C(n>=2), D(n>=4), E(6..8), F4, G2")
    lo, hi = _RANK_RANGES[series]
    if not lo <= rank <= hi:
        raise ValueError(
            f"invalid rank {rank} for series {series}; valid types are "
            "A(n>=1), B(n>=2), C(n>=2), D(n>=4), E(6..8), F4, G2")

    cartan = _cartan_matrix(series, rank)
    d = _symmetrizers(cartan)
    m = max(d)
    inv_cartan = _fraction_matrix_inverse(
        [[Fraction(x) for x in row] for row in cartan])
    # (omega_i, omega_j)' = d_i * (A^{-1})_{ij}
    gram_primed = tuple(
        tuple(d[i] * inv_cartan[i][j] for j in range(rank))
        for i in range(rank))

    positive = _positive_roots(cartan, inv_cartan)
    # highest root: the unique positive root dominating all others
    theta = max(
        positive,
        key=lambda w: sum(sum(inv_cartan[i][j] * w[j] for j in range(rank))
                          for i in range(rank)))
    rho = (1,) * rank

    def primed(a: Weight, b: Weight) -> Fraction:
        return sum(a[i] * gram_primed[i][j] * b[j]
                   for i in range(rank) for j in range(rank))

    hvee = 2 * primed(rho, theta) / primed(theta, theta) + 1
    assert hvee.denominator == 1

    rs = RootSystemData(
        series=series,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        simple_roots=tuple(tuple(cartan[i][j] for i in range(rank))
                           for j in range(rank)),
        fundamental_weights=tuple(tuple(int(i == j) for i in range(rank))
                                  for j in range(rank)),
        positive_roots=tuple(positive),
        rho=rho,
        highest_root=theta,
        dual_coxeter=int(hvee),
        lacing=m,
        symmetrizers=tuple(d),
        cartan_index=abs(_int_det(cartan)),
        dim_adjoint=rank + 2 * len(positive),
        gram_primed=gram_primed,
    )
    _check_tables(rs)
    return rs


def _check_tables(rs: RootSystemData) -> None:
    theta2 = form(rs, rs.highest_root, rs.highest_root)
    assert theta2 == 2, f"highest root normalization broke: {theta2}"
    g = 0
    for x in rs.symmetrizers:
        g = gcd(g, x)
    assert g == 1
    assert len(rs.positive_roots) == (rs.dim_adjoint - rs.rank) // 2
    two_rho = rs.zero
    for alpha in rs.positive_roots:
        two_rho = wadd(two_rho, alpha)
    assert two_rho == wscale(2, rs.rho)


def form(rs: RootSystemData, lam: Weight, mu: Weight,
         variant: str = "normalized") -> Fraction:
    """Invariant bilinear form (lam, mu); primed = lacing * normalized."""
    if len(lam) != rs.rank or len(mu) != rs.rank:
        raise ValueError(f"rank mismatch: expected {rs.rank} coordinates")
    acc = Fraction(0)
    for i, li in enumerate(lam):
        if li:
            row = rs.gram_primed[i]
            acc += li * sum(row[j] * mu[j] for j in range(rs.rank) if mu[j])
    if variant == "primed":
        return acc
    if variant == "normalized":
        return acc / rs.lacing
    raise ValueError(f"unknown form variant {variant!r}")


def pairing(rs: RootSystemData, lam: Weight, alpha: Weight) -> Fraction:
    """<lam, alpha^vee> = 2 (lam, alpha) / (alpha, alpha) for a root alpha."""
    alpha2 = form(rs, alpha, alpha)
    if alpha2 == 0:
        raise ValueError("pairing against the zero vector")
    return 2 * form(rs, lam, alpha) / alpha2


def theta_pairing(rs: RootSystemData, lam: Weight) -> Fraction:
    """<lam, theta^vee> against the highest root."""
    return pairing(rs, lam, rs.highest_root)


def simple_coroots(rs: RootSystemData) -> tuple[Weight, ...]:
    """Images of the simple coroots in the weight lattice: (m/d_i) alpha_i."""
    out = []
    for i, alpha in enumerate(rs.simple_roots):
        c = rs.lacing // rs.symmetrizers[i]
        assert rs.lacing % rs.symmetrizers[i] == 0
        out.append(wscale(c, alpha))
    return tuple(out)


@lru_cache(maxsize=None)
def inverse_cartan(rs: RootSystemData) -> tuple[tuple[Fraction, ...], ...]:
    inv = _fraction_matrix_inverse(
        [[Fraction(x) for x in row] for row in rs.cartan])
    return tuple(tuple(row) for row in inv)


def root_alpha_coords(rs: RootSystemData, w: Weight) -> tuple[Fraction, ...]:
    """Coordinates of w in the simple-root basis (exact, possibly fractional)."""
    inv = inverse_cartan(rs)
    return tuple(sum(inv[i][j] * w[j] for j in range(rs.rank))
                 for i in range(rs.rank))


def _int_det(mat: list[list[int]]) -> int:
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    assert det.denominator == 1
    return int(det)


def smith_diagonal(mat: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix."""
    a = [row[:] for row in mat]
    rows, cols = len(a), len(a[0]) if a else 0
    diag = []
    top = 0
    while top < min(rows, cols):
        # find smallest nonzero entry in the remaining block
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                if a[i][j] != 0 and (best is None
                                     or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[top], a[bi] = a[bi], a[top]
        for row in a:
            row[top], row[bj] = row[bj], row[top]
        p = a[top][top]
        dirty = False
        for i in range(top + 1, rows):
            q = a[i][top] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[top])]
            if a[i][top]:
                dirty = True
        for j in range(top + 1, cols):
            q = a[top][j] // p
            if q:
                for row in a:
                    row[j] -= q * row[top]
            if a[top][j]:
                dirty = True
        if dirty:
            continue
        diag.append(abs(p))
        top += 1
    while len(diag) < min(rows, cols):
        diag.append(0)
    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a_i, a_j = diag[i], diag[i + 1]
            if a_i and a_j and a_j % a_i != 0:
                g = gcd(a_i, a_j)
                diag[i], diag[i + 1] = g, a_i * a_j // g
                changed = True
    nonzero = sorted(d for d in diag if d)
    return nonzero + [0] * (len(diag) - len(nonzero))


_LATTICE_NAMES = ("P", "Q", "Qv")


def _lattice_basis(rs: RootSystemData, label: str) -> list[list[Fraction]]:
    """Column basis of a lattice label like "P", "Q", "Qv", "3Qv" in omega coords."""
    label = label.strip()
    mult = 1
    name = label
    for prefix_len in range(len(label), 0, -1):
        head, tail = label[:prefix_len], label[prefix_len:]
        if head.isdigit() and tail in _LATTICE_NAMES:
            mult, name = int(head), tail
            break
    if name not in _LATTICE_NAMES:
        raise ValueError(
            f"unknown lattice label {label!r}; use P, Q, Qv with an optional "
            "positive integer multiplier, e.g. 3Qv")
    if mult < 1:
        raise ValueError(f"lattice multiplier must be positive in {label!r}")
    if name == "P":
        cols = [[Fraction(int(i == j)) for j in range(rs.rank)]
                for i in range(rs.rank)]
    elif name == "Q":
        cols = [[Fraction(rs.cartan[i][j]) for j in range(rs.rank)]
                for i in range(rs.rank)]
    else:
        cr = simple_coroots(rs)
        cols = [[Fraction(cr[j][i]) for j in range(rs.rank)]
                for i in range(rs.rank)]
    return [[mult * x for x in row] for row in cols]


def lattice_index(rs: RootSystemData, numerator: str, denominator: str) -> int:
    """Index of one lattice in another, e.g. lattice_index(rs, "P", "3Qv")."""
    nb = _lattice_basis(rs, numerator)
    db = _lattice_basis(rs, denominator)
    inv_nb = _fraction_matrix_inverse(nb)
    change = [[sum(inv_nb[i][k] * db[k][j] for k in range(rs.rank))
               for j in range(rs.rank)] for i in range(rs.rank)]
    int_change = []
    for row in change:
        irow = []
        for x in row:
            if x.denominator != 1:
                raise ValueError(
                    f"{denominator} is not a sublattice of {numerator}")
            irow.append(int(x))
        int_change.append(irow)
    diag = smith_diagonal(int_change)
    index = 1
    for x in diag:
        if x == 0:
            raise ValueError(
                f"{denominator} has infinite index in {numerator}")
        index *= x
    return index
