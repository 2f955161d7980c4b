"""Direct evaluators for the closed-form wall-crossing results.

Everything here is plain rational arithmetic plus a few ring elements; the
independent ring evaluation of the general wall-crossing expression lives
in ``oracle`` and is used by the test suite to confirm each formula.

Conventions used throughout: a = (zeta.alpha)/2 (may be a half-integer,
all arithmetic is rational); binomial coefficients with out-of-range
arguments are zero, as are powers with negative exponents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, RegimeError
from .graded import SIGMA, GradedElement, ModelSpec, frac
from .jacobian import InsertionWord, Pairings, e_alpha, e_zeta, jacobian_odd_integral
from .walls import WallGeometry


@dataclass(frozen=True)
class DeltaValue:
    """An exact wall-crossing difference value with its computation path."""

    value: Fraction
    path: str
    wall: WallGeometry = None
    word: str = None
    modulus_exponent: int = None

    def __post_init__(self):
        object.__setattr__(self, "value", frac(self.value))

    def rational_str(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"


def comb0(n, k) -> int:
    """Binomial coefficient, zero whenever the arguments fall out of range."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def pow0(base: Fraction, n) -> Fraction:
    """base**n with the convention that negative exponents give zero terms."""
    if n < 0:
        return Fraction(0)
    return frac(base) ** n


def delta_l0(wall: WallGeometry, pairings: Pairings, r, vol=1) -> DeltaValue:
    """Wall-crossing term for l_zeta = 0 on the word x^r alpha^(d-2r)."""
    if wall.l_zeta != 0:
        raise RegimeError(f"delta_l0 needs l_zeta = 0, got {wall.l_zeta}")
    d, q = wall.d, wall.q
    s = d - 2 * r
    za, sa, sz = pairings.zetaAlpha, pairings.sigmaAlpha, pairings.sigmaZeta
    sign = -1 if (r + d) % 2 else 1
    total = Fraction(0)
    for b in range(q + 1):
        c = comb0(s, b)
        if not c:
            continue
        total += (sign * Fraction(2) ** (3 * q - b - d) * math.perm(q, b) * c
                  * pow0(za, s - b) * pow0(sa, b) * pow0(sz, q - b))
    value = wall.sign_wall() * total * frac(vol)
    return DeltaValue(value, "closed-form", wall=wall, word=f"x^{r} alpha^{s}")


def delta_l0_odd(wall: WallGeometry, model: ModelSpec, word: InsertionWord) -> DeltaValue:
    """Wall-crossing term for l_zeta = 0 on a word with odd-degree insertions.

    The sum over j of the degree-3/degree-1 insertion formula, with the
    functional F evaluated in the ring.  Terms whose factorial argument
    q - (a+b)/2 - j is negative are zero.  Words of odd total odd-count
    give zero (F kills them).
    """
    if wall.l_zeta != 0:
        raise RegimeError(f"delta_l0_odd needs l_zeta = 0, got {wall.l_zeta}")
    a_cnt, b_cnt = len(word.gammas), len(word.threes)
    if (a_cnt + b_cnt) % 2:
        return DeltaValue(Fraction(0), "closed-form", wall=wall, word=word.describe())
    d, q = wall.d, wall.q
    if word.degree() != 2 * d:
        raise PreconditionError(
            f"word degree {word.degree()} does not match 2d = {2 * d}")
    r, s = word.r, word.s
    fz = jacobian_odd_integral(model, word.gammas, word.threes)
    if fz == 0:
        return DeltaValue(Fraction(0), "closed-form", wall=wall, word=word.describe())
    za = model.pair("zeta", "alpha")
    sa = model.pair(SIGMA, "alpha")
    sz = model.pair(SIGMA, "zeta")
    sign = -1 if (r + d + b_cnt) % 2 else 1
    total = Fraction(0)
    for j in range(s + 1):
        idx = q - (a_cnt + b_cnt) // 2 - j
        if idx < 0:
            continue
        total += (sign * Fraction(2) ** (3 * q - d - b_cnt - j) * comb0(s, j)
                  * fz / math.factorial(idx)
                  * pow0(za, s - j) * pow0(sa, j)
                  * pow0(sz, q + (b_cnt - a_cnt) // 2 - j))
    value = wall.sign_wall() * total
    return DeltaValue(value, "closed-form", wall=wall, word=word.describe())


def delta_l1(wall: WallGeometry, pairings: Pairings, r, vol=1) -> DeltaValue:
    """Wall-crossing term for l_zeta = 1 on the word x^r alpha^(d-2r)."""
    if wall.l_zeta != 1:
        raise RegimeError(f"delta_l1 needs l_zeta = 1, got {wall.l_zeta}")
    d, q = wall.d, wall.q
    s = d - 2 * r
    za, sa, sz = pairings.zetaAlpha, pairings.sigmaAlpha, pairings.sigmaZeta
    z2, k2, a2 = pairings.zeta2, pairings.K2, pairings.alpha2
    bracket_const = 6 * z2 + 2 * k2 - 24 * q - 8 * r
    sign = -1 if (r + d + 1) % 2 else 1
    total = Fraction(0)
    for b in range(q + 1):
        group = (pow0(za, s - b)
                 * (comb0(s, b) * bracket_const + 8 * comb0(s, b + 1) * comb0(b + 1, 1))
                 + 8 * pow0(za, s - b - 2) * a2 * comb0(s, b + 2) * comb0(b + 2, 2))
        if not group:
            continue
        total += (sign * Fraction(2) ** (3 * q - b - d) * group
                  * pow0(sa, b) * pow0(sz, q - b) * math.perm(q, b))
    value = wall.sign_wall() * total * frac(vol)
    return DeltaValue(value, "closed-form", wall=wall, word=f"x^{r} alpha^{s}")


# -- the summed Segre classes of the two extension strata (l_zeta = 1) ----

def _wall_classes(model):
    zs = model.even("zeta")
    ks = model.even("K")
    ez = e_zeta(model)
    uni = model.universal_class()
    return zs, ks, ez, uni


def segre_sum_closed(model: ModelSpec, n) -> GradedElement:
    """Closed form for the k-summed Segre class s_n of the two extension pairs.

    s_0 = 2; s_1 = 8 e_zeta - 4 zeta - 8 E; for n >= 2 the four-term
    expression with the (n-3)! term dropped when n < 3.
    """
    if n < 0:
        raise PreconditionError("segre_sum_closed needs n >= 0")
    zs, ks, ez, uni = _wall_classes(model)
    four_ez = 4 * ez
    out = 2 * four_ez ** n / math.factorial(n)
    if n >= 1:
        out = out - (4 * zs + 8 * uni) * four_ez ** (n - 1) / math.factorial(n - 1)
    if n >= 2:
        quad = 6 * (zs * zs) + 2 * (ks * ks) + 24 * (uni * zs) + 24 * (uni * uni)
        out = out + quad * four_ez ** (n - 2) / math.factorial(n - 2)
    if n >= 3:
        out = out - 24 * model.point() * four_ez ** (n - 2) / math.factorial(n - 3)
    return out


def segre_det_entries(model):
    """The K-even determinant entries a_1, a_2, a_3 of the stratum data."""
    zs, ks, ez, uni = _wall_classes(model)
    a1 = -4 * ez + 2 * zs + 4 * uni
    a2 = 2 * (zs * zs) + 8 * (uni * uni) + (ks * ks) + 8 * (uni * zs)
    a3 = 24 * (uni * uni * zs)
    return a1, a2, a3


def _recursion_head(model):
    zs, ks, _, uni = _wall_classes(model)
    return 2 * (zs * zs) + (ks * ks) + 8 * (uni * zs) + 8 * (uni * uni)


def segre_det_recursive(model: ModelSpec, n) -> GradedElement:
    """The stratum determinant by its two-term recursion (bases n = 0, 1)."""
    if n < 0:
        raise PreconditionError("segre_det needs n >= 0")
    a1, _, _ = segre_det_entries(model)
    if n == 0:
        return model.one()
    four_ez = 4 * e_zeta(model)
    head = _recursion_head(model)
    cur = -a1
    for m in range(2, n + 1):
        cur = (-a1 * cur
               + (m - 1) * four_ez ** (m - 2) * (head - 18 * (m - 2) * model.point()))
    return cur


def segre_det_closed(model: ModelSpec, n) -> GradedElement:
    """The stratum determinant by its resolved closed form."""
    if n < 0:
        raise PreconditionError("segre_det needs n >= 0")
    zs, _, ez, uni = _wall_classes(model)
    four_ez = 4 * ez
    base = four_ez - 2 * zs - 4 * uni
    out = base ** n
    head = _recursion_head(model)
    for i in range(2, n + 1):
        out = out + (base ** (n - i) * (i - 1) * four_ez ** (i - 2)
                     * (head - 18 * (i - 2) * model.point()))
    return out


def segre_det_determinant(model: ModelSpec, n) -> GradedElement:
    """The stratum determinant evaluated literally as a determinant."""
    from .chern import ChernData, segre_from_ch
    a1, a2, a3 = segre_det_entries(model)
    data = ChernData(model, 0, (a1, a2, a3))
    return segre_from_ch(data, n) * math.factorial(n)


def leading_insertion_class(model: ModelSpec, l_zeta, which) -> GradedElement:
    """The three explicitly known insertion moments for any l_zeta.

    ``which`` picks one of ("2l,q", "2l-1,q", "2l,q-1"); the returned class
    is the literal right-hand side (numbers times e-class powers).
    """
    if l_zeta < 0:
        raise PreconditionError("l_zeta must be non-negative")
    q = model.q
    a2 = model.pair("alpha", "alpha")
    a = model.pair("zeta", "alpha") / 2
    lead = Fraction(math.factorial(2 * l_zeta), math.factorial(l_zeta))
    ea = e_alpha(model)
    if which == "2l,q":
        return lead * pow0(a2, l_zeta) * ea ** q
    if which == "2l-1,q":
        return -4 * lead * pow0(a2, l_zeta - 1) * a * ea ** q
    if which == "2l,q-1":
        if q < 1:
            raise PreconditionError("index pair (2l, q-1) needs q >= 1")
        return 4 * lead * pow0(a2, l_zeta) * ea ** (q - 1) * e_zeta(model)
    raise PreconditionError(f"unknown leading index pair {which!r}")


def delta_leading(wall: WallGeometry, pairings: Pairings, r, vol=1) -> DeltaValue:
    """Two lowest-order terms of delta in a = (zeta.alpha)/2, any l_zeta.

    Valid modulo a^(d - 2r - 2 l_zeta - q + 2); the returned value carries
    that exponent.  Requires d - 2r >= 2 l_zeta + q.
    """
    d, q, l = wall.d, wall.q, wall.l_zeta
    m = d - 2 * r - 2 * l - q
    if m < 0:
        raise PreconditionError(
            f"delta_leading needs d - 2r >= 2 l_zeta + q, got d={d}, r={r}, l={l}, q={q}")
    a = pairings.zetaAlpha / 2
    a2, sa, sz = pairings.alpha2, pairings.sigmaAlpha, pairings.sigmaZeta
    sign = -1 if (d + l + r) % 2 else 1
    scale = sign * Fraction(2) ** (q - 2 * r)
    fact = Fraction(math.factorial(d - 2 * r), math.factorial(l))
    first = pow0(a, m) * fact / math.factorial(m) * pow0(a2, l) * pow0(sa, q)
    second = (4 * pow0(a, m + 1) * fact * q / math.factorial(m + 1)
              * pow0(a2, l) * pow0(sa, q - 1) * sz) if q >= 1 else Fraction(0)
    value = wall.sign_wall() * scale * (first + second) * frac(vol)
    return DeltaValue(value, "leading-term", wall=wall,
                      word=f"x^{r} alpha^{d - 2 * r}", modulus_exponent=m + 2)
