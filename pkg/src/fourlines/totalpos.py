"""Total positivity: configuration checks, canonical reduction, and the
16-parameter triangular factorization of totally positive 4x4 matrices.

Note on the factorization chart: the lower unitriangular factor used here is

    [[1, 0, 0, 0],
     [g+j+l, 1, 0, 0],
     [hj+hl+kl, h+k, 1, 0],
     [ikl, ik, i, 1]]

which equals the bidiagonal product
(I + g E21 + h E32 + i E43)(I + j E21 + k E32)(I + l E21), so every
positive parameter choice yields a totally positive product.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Tuple

from .errors import (
    DegenerateConfiguration,
    DimensionError,
    DomainError,
    HypothesisViolation,
    InputError,
    NotTotallyPositive,
)
from .exact import IndexSet, MatQ, as_rat

#: The fixed anti-diagonal sign matrix of the canonical form [X Y].
Y_SIGN = MatQ(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, -1, 0, 0],
        [1, 0, 0, 0],
    ]
)

PARAM_NAMES = "abcdefghijklmnop"


@dataclass(frozen=True)
class LWParams:
    """The 16 positive factorization parameters a..p (in letter order)."""

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(as_rat(v) for v in self.values)
        if len(vals) != 16:
            raise DimensionError(f"need 16 parameters, got {len(vals)}")
        for name, v in zip(PARAM_NAMES, vals):
            if v <= 0:
                raise DomainError(f"parameter {name} = {v} is not positive")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, name: str) -> Fraction:
        return self.values[PARAM_NAMES.index(name)]

    def as_dict(self) -> dict:
        return dict(zip(PARAM_NAMES, self.values))


@dataclass(frozen=True)
class ConfigBlocks:
    """Four 4x2 blocks spanning the four lifted tangent planes."""

    w1: MatQ
    w2: MatQ
    w3: MatQ
    w4: MatQ

    def __post_init__(self):
        for w in self.blocks():
            if w.rows != 4 or w.cols != 2:
                raise DimensionError(f"blocks must be 4x2, got {w.rows}x{w.cols}")

    def blocks(self) -> tuple:
        return (self.w1, self.w2, self.w3, self.w4)

    def concat(self) -> MatQ:
        return self.w1.hstack(self.w2).hstack(self.w3).hstack(self.w4)


@dataclass(frozen=True)
class TPReport:
    ok: bool
    witness_cols: Optional[IndexSet] = None
    witness_rows: Optional[IndexSet] = None
    witness_minor: Optional[Fraction] = None


@dataclass(frozen=True)
class CanonicalForm:
    """Change of basis g with g*[W3 W4] = Y and the reduced matrix X = g*[W1 W2]."""

    g: MatQ
    x: MatQ
    y: MatQ


def check_tp_config(blocks: ConfigBlocks) -> TPReport:
    """All 70 maximal minors of the 4x8 concatenation strictly positive?

    Reports the lexicographically first non-positive minor on failure.
    """
    for idx, w in enumerate(blocks.blocks(), start=1):
        if w.rank() < 2:
            raise InputError(f"block W{idx} is rank-deficient")
    a = blocks.concat()
    rows = IndexSet((1, 2, 3, 4))
    for cols in combinations(range(1, 9), 4):
        m = a.minor(rows, cols)
        if m <= 0:
            return TPReport(False, IndexSet(cols), rows, m)
    return TPReport(True)


def check_tp_square(x: MatQ) -> TPReport:
    """All 69 minors of orders 1..4 of a 4x4 matrix strictly positive?"""
    if x.rows != 4 or x.cols != 4:
        raise DimensionError("expected a 4x4 matrix")
    for order in range(1, 5):
        for rows in combinations(range(1, 5), order):
            for cols in combinations(range(1, 5), order):
                m = x.minor(rows, cols)
                if m <= 0:
                    return TPReport(False, IndexSet(cols), IndexSet(rows), m)
    return TPReport(True)


def canonicalize(blocks: ConfigBlocks, strict: bool = True) -> CanonicalForm:
    """Reduce [W1 W2 W3 W4] to the form [X Y] by g = Y*[W3 W4]^(-1).

    With ``strict`` the postconditions det(g) > 0 and X totally positive
    are enforced (hypothesis-violation error carrying the witness minor);
    otherwise the caller is expected to inspect them.
    """
    w34 = blocks.w3.hstack(blocks.w4)
    if w34.det() == 0:
        raise DegenerateConfiguration("[W3 W4] is singular: degenerate configuration")
    g = Y_SIGN @ w34.inverse()
    x = g @ blocks.w1.hstack(blocks.w2)
    if strict:
        if g.det() <= 0:
            raise HypothesisViolation(f"det(g) = {g.det()} is not positive")
        rep = check_tp_square(x)
        if not rep.ok:
            raise NotTotallyPositive(
                f"canonical X is not totally positive: minor rows {rep.witness_rows} "
                f"cols {rep.witness_cols} = {rep.witness_minor}",
                witness=rep,
            )
    return CanonicalForm(g=g, x=x, y=Y_SIGN)


def lw_compose(params: LWParams) -> MatQ:
    """Totally positive 4x4 matrix L * diag(m,n,o,p) * U from positive parameters."""
    a, b, c, d, e, f, g, h, i, j, k, l, m, n, o, p = params.values
    lower = MatQ(
        [
            [1, 0, 0, 0],
            [g + j + l, 1, 0, 0],
            [h * j + h * l + k * l, h + k, 1, 0],
            [i * k * l, i * k, i, 1],
        ]
    )
    diag = MatQ.diag([m, n, o, p])
    upper = MatQ(
        [
            [1, f + d + a, a * b + a * e + d * e, a * b * c],
            [0, 1, b + e, b * c],
            [0, 0, 1, c],
            [0, 0, 0, 1],
        ]
    )
    return lower @ diag @ upper


def _ldu(x: MatQ):
    """LDU decomposition without pivoting; zero pivot names the diagonal parameter."""
    n = 4
    a = [list(x.row(i)) for i in range(n)]
    lower = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    upper = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    pivots = []
    for k in range(n):
        piv = a[k][k]
        if piv == 0:
            raise NotTotallyPositive(
                f"zero pivot: diagonal parameter {'mnop'[k]} would vanish"
            )
        pivots.append(piv)
        for j in range(k + 1, n):
            upper[k][j] = a[k][j] / piv
        for i in range(k + 1, n):
            lower[i][k] = a[i][k] / piv
            for j in range(k + 1, n):
                a[i][j] -= a[i][k] * a[k][j] / piv
            a[i][k] = Fraction(0)
    return MatQ(lower), pivots, MatQ(upper)


def _positive(name: str, value: Fraction) -> Fraction:
    if value <= 0:
        raise NotTotallyPositive(f"recovered parameter {name} = {value} is not positive")
    return value


def _nonzero(name: str, value: Fraction) -> Fraction:
    if value == 0:
        raise NotTotallyPositive(f"recovered parameter {name} vanishes (boundary of total positivity)")
    return value


def lw_factor(x: MatQ) -> LWParams:
    """Recover the 16 positive parameters of a totally positive 4x4 matrix.

    Back-solves the triangular factors entry by entry:
    c = u34, b = u24/u34, e = u23 - b, a = u14/(bc), d = (u13 - a u23)/e,
    f = u12 - d - a; and on the lower side i = l43, k = l42/l43,
    l = l41/l42, h = l32 - k, j = (l31 - l32 l)/h, g = l21 - j - l.
    """
    if x.rows != 4 or x.cols != 4:
        raise DimensionError("expected a 4x4 matrix")
    lower, pivots, upper = _ldu(x)
    u12, u13, u14 = upper[0, 1], upper[0, 2], upper[0, 3]
    u23, u24, u34 = upper[1, 2], upper[1, 3], upper[2, 3]
    l21, l31, l41 = lower[1, 0], lower[2, 0], lower[3, 0]
    l32, l42, l43 = lower[2, 1], lower[3, 1], lower[3, 2]

    c = _positive("c", _nonzero("c", u34))
    b = _positive("b", u24 / u34)
    e = _positive("e", u23 - b)
    a = _positive("a", u14 / _nonzero("b·c", b * c))
    d = _positive("d", (u13 - a * u23) / e)
    f = _positive("f", u12 - d - a)

    i = _positive("i", _nonzero("i", l43))
    k = _positive("k", l42 / l43)
    l = _positive("l", l41 / _nonzero("i·k", l42))
    h = _positive("h", l32 - k)
    j = _positive("j", (l31 - l32 * l) / h)
    g = _positive("g", l21 - j - l)

    m, n, o, p = (_positive("mnop"[t], pivots[t]) for t in range(4))
    params = LWParams((a, b, c, d, e, f, g, h, i, j, k, l, m, n, o, p))
    if lw_compose(params) != x:
        raise NotTotallyPositive("matrix is outside the positive factorization chart")
    return params


def blocks_of_canonical(x: MatQ) -> ConfigBlocks:
    """Blocks of [X Y]: W1, W2 the column pairs of X; W3, W4 those of Y."""
    cols = [x.col(j) for j in range(4)] + [Y_SIGN.col(j) for j in range(4)]
    return ConfigBlocks(
        MatQ.from_cols(cols[0:2]),
        MatQ.from_cols(cols[2:4]),
        MatQ.from_cols(cols[4:6]),
        MatQ.from_cols(cols[6:8]),
    )


def random_tp_instance(seed: int, bound: int = 10):
    """Deterministic totally positive instance: parameters and blocks of [X Y]."""
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    rng = random.Random(seed)
    params = LWParams(
        tuple(Fraction(rng.randint(1, bound), rng.randint(1, bound)) for _ in range(16))
    )
    return params, blocks_of_canonical(lw_compose(params))
