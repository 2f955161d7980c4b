"""Ring evaluation of the general wall-crossing expression for l_zeta <= 1.

This is the brute-force side of every closed form: the insertion word is
expanded multinomially as a polynomial in the formal variable X with ring
coefficients, each power X^N is replaced through the Segre substitution
table of the extension-bundle data, and the result is integrated.

The substitution table is built once per wall from the Chern characters of
the extension bundles:

    l = 0:  ch E_{+-zeta} = (h(+-zeta) + q) + e_{K -+ 2 zeta}
    l = 1:  ch E(k-th stratum) = ch M_{+-zeta} + exp(line class) exp(+-2E)

with duals through ch_dual and the two strata summed inside the table.
Hilbert schemes of >= 2 points would require their full cohomology, so
l_zeta >= 2 is rejected.
"""

from __future__ import annotations

from fractions import Fraction

from .chern import ch_direct_sum, ch_dual, chern_data_from_element, segre_from_ch
from .closed import DeltaValue
from .errors import PreconditionError, RegimeError
from .graded import SIGMA, ModelSpec, exp_truncated, integrate, integrate_jacobian
from .jacobian import InsertionWord, e_alpha, e_divisor, e_zeta_beta
from .walls import WallGeometry


def ch_extension_bundles(model: ModelSpec, wall: WallGeometry, l_zeta, k):
    """Chern data of the stratum pair (E_zeta^{l-k,k}, E_{-zeta}^{k,l-k}).

    Returned un-dualized; ranks follow the wall's h-values.  Only
    l_zeta in {0, 1} is supported: the larger strata live over Hilbert
    schemes of >= 2 points, whose cohomology this model does not carry.
    """
    if l_zeta not in (0, 1):
        raise RegimeError(
            "extension-bundle Chern data requires l_zeta in {0, 1}: larger strata "
            "need Hilbert-scheme cohomology that this model does not include")
    if k < 0 or k > l_zeta:
        raise PreconditionError(f"stratum index k={k} out of range for l_zeta={l_zeta}")
    sigma_k = model.pair(SIGMA, "K")
    sigma_z = model.pair(SIGMA, "zeta")
    # ch M_{+-zeta} = rank + e_{K -+ 2 zeta}
    m_plus = model.scalar(wall.h_plus + wall.q) + e_divisor(model, sigma_k - 2 * sigma_z)
    m_minus = model.scalar(wall.h_minus + wall.q) + e_divisor(model, sigma_k + 2 * sigma_z)
    if l_zeta == 0:
        return (chern_data_from_element(m_plus), chern_data_from_element(m_minus))
    zs = model.even("zeta")
    ks = model.even("K")
    two_e = 2 * model.universal_class()
    if k == 0:
        ch_plus = m_plus + exp_truncated(zs + two_e)
        ch_minus = m_minus + exp_truncated(-zs - ks - two_e)
    else:
        ch_plus = m_plus + exp_truncated(zs - ks + two_e)
        ch_minus = m_minus + exp_truncated(-zs - two_e)
    return (chern_data_from_element(ch_plus), chern_data_from_element(ch_minus))


class _SegreTable:
    """Lazy X^N -> ring class substitution for one wall."""

    def __init__(self, model, wall, datas, component_rank=None):
        self.model = model
        self.wall = wall
        self.datas = datas
        self.component = component_rank is not None
        self._cache = {}

    def xpower(self, n):
        out = self._cache.get(n)
        if out is None:
            wall = self.wall
            if self.component:
                idx = n - wall.n_minus
                out = self.model.zero()
                if idx >= 0:
                    out = segre_from_ch(self.datas[0], idx)
            else:
                idx = n - 1 - wall.n_plus - wall.n_minus
                out = self.model.zero()
                if idx >= 0:
                    for data in self.datas:
                        out = out + segre_from_ch(data, idx)
                    if (n - wall.n_minus) % 2:
                        out = -out
            self._cache[n] = out
        return out


def _xpoly_mul(model, poly, factor):
    out = {}
    for n1, c1 in poly.items():
        for n2, c2 in factor.items():
            c = c1 * c2
            if c.is_zero():
                continue
            key = n1 + n2
            s = out.get(key)
            out[key] = c if s is None else s + c
    return {n: c for n, c in out.items() if not c.is_zero()}


def _expand(model, factors):
    poly = {0: model.one()}
    for f in factors:
        poly = _xpoly_mul(model, poly, f)
        if not poly:
            break
    return poly


def delta_oracle_l0(model: ModelSpec, wall: WallGeometry, word: InsertionWord,
                    branch="unified") -> DeltaValue:
    """Ring evaluation of the wall-crossing term for l_zeta = 0.

    ``branch="unified"`` substitutes X^N through the Segre classes of
    E_zeta (+) E_{-zeta}^dual and covers both the flip regime and the
    extra-component regime.  ``branch="component"`` substitutes
    s_{N - N_{-zeta}}(E_{-zeta}) directly, as on a moduli space gaining a
    whole component; it requires h(zeta) + q = 0 and Chern data consistent
    with a rank-zero E_zeta (Sigma.K = 2 Sigma.zeta).
    """
    if wall.l_zeta != 0:
        raise RegimeError(f"l0 oracle needs l_zeta = 0, got {wall.l_zeta}")
    a_cnt, b_cnt = len(word.gammas), len(word.threes)
    if (a_cnt + b_cnt) % 2:
        # the Jacobian integral of an odd-degree class vanishes
        return DeltaValue(Fraction(0), "ring-oracle", wall=wall, word=word.describe())
    if word.degree() != 2 * wall.d:
        raise PreconditionError(
            f"word degree {word.degree()} does not match 2d = {2 * wall.d}")
    ch_plus, ch_minus = ch_extension_bundles(model, wall, 0, 0)
    if branch == "unified":
        data = ch_direct_sum(ch_plus, ch_dual(ch_minus))
        table = _SegreTable(model, wall, (data,))
    elif branch == "component":
        if wall.h_plus + wall.q != 0:
            raise RegimeError("component branch requires h(zeta) + q = 0")
        table = _SegreTable(model, wall, (ch_minus,), component_rank=ch_minus.rank)
    else:
        raise PreconditionError(f"unknown branch {branch!r}")
    a = model.pair("zeta", "alpha") / 2
    ea = e_alpha(model)
    factors = []
    factors += [{2: model.scalar(Fraction(-1, 4))}] * word.r
    factors += [{0: -ea, 1: model.scalar(a)}] * word.s
    factors += [{1: model.theta(i)} for i in word.gammas]
    factors += [{0: -e_zeta_beta(model, j)} for j in word.threes]
    poly = _expand(model, factors)
    total = Fraction(0)
    for n, coeff in poly.items():
        total += integrate_jacobian(coeff * table.xpower(n))
    value = wall.sign_complex() * total
    return DeltaValue(value, "ring-oracle", wall=wall, word=word.describe())


def delta_oracle_l1(model: ModelSpec, wall: WallGeometry, r) -> DeltaValue:
    """Ring evaluation of the wall-crossing term for l_zeta = 1 on x^r alpha^(d-2r).

    The point insertion becomes [S] - X^2/4 and the alpha insertion
    alpha_S - e_alpha + aX; the X-table sums the Segre classes of the k = 0
    and k = 1 stratum pairs, so the K-odd couplings cancel exactly.
    """
    if wall.l_zeta != 1:
        raise RegimeError(f"l1 oracle needs l_zeta = 1, got {wall.l_zeta}")
    s = wall.d - 2 * r
    if s < 0:
        return DeltaValue(Fraction(0), "ring-oracle", wall=wall, word=f"x^{r} alpha^{s}")
    datas = []
    for k in (0, 1):
        ch_plus, ch_minus = ch_extension_bundles(model, wall, 1, k)
        datas.append(ch_direct_sum(ch_plus, ch_dual(ch_minus)))
    table = _SegreTable(model, wall, tuple(datas))
    a = model.pair("zeta", "alpha") / 2
    ea = e_alpha(model)
    alpha_s = model.even("alpha")
    factors = []
    factors += [{0: model.point(), 2: model.scalar(Fraction(-1, 4))}] * r
    factors += [{0: alpha_s - ea, 1: model.scalar(a)}] * s
    poly = _expand(model, factors)
    total = Fraction(0)
    for n, coeff in poly.items():
        total += integrate(coeff * table.xpower(n))
    value = wall.sign_complex() * total
    return DeltaValue(value, "ring-oracle", wall=wall, word=f"x^{r} alpha^{s}")
