"""Concrete J x S models built from numeric pairing data, and the
distinguished Jacobian classes living on them.

A model is determined by q, the antisymmetric a_ij data (full matrix or
block coefficients a_1, ..., a_r with omega = a_1 th_1 th_2 + ...), and the
Gram pairings among the even symbols Sigma, zeta, K, alpha.  Block
coefficients are integers in the geometric situation; rationals are
accepted so that the Sigma-rescaling invariance (Sigma -> r Sigma divides
every a_ij by r) can be exercised exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError, SchemaError
from .graded import SIGMA, GradedElement, ModelSpec, frac, integrate_jacobian

PAIRING_KEYS = ("zeta2", "zetaK", "zetaAlpha", "sigmaZeta", "sigmaAlpha",
                "sigmaK", "K2", "Kalpha", "alpha2")


@dataclass(frozen=True)
class Pairings:
    """The nine intersection pairings among Sigma, zeta, K, alpha."""

    zeta2: Fraction = Fraction(0)
    zetaK: Fraction = Fraction(0)
    zetaAlpha: Fraction = Fraction(0)
    sigmaZeta: Fraction = Fraction(0)
    sigmaAlpha: Fraction = Fraction(0)
    sigmaK: Fraction = Fraction(0)
    K2: Fraction = Fraction(0)
    Kalpha: Fraction = Fraction(0)
    alpha2: Fraction = Fraction(0)

    def __post_init__(self):
        for key in PAIRING_KEYS:
            object.__setattr__(self, key, frac(getattr(self, key)))

    def gram(self):
        """Symmetric Gram dictionary over {Sigma, zeta, K, alpha}; Sigma.Sigma = 0."""
        return {
            (SIGMA, SIGMA): Fraction(0),
            (SIGMA, "zeta"): self.sigmaZeta,
            (SIGMA, "K"): self.sigmaK,
            (SIGMA, "alpha"): self.sigmaAlpha,
            ("zeta", "zeta"): self.zeta2,
            ("zeta", "K"): self.zetaK,
            ("zeta", "alpha"): self.zetaAlpha,
            ("K", "K"): self.K2,
            ("K", "alpha"): self.Kalpha,
            ("alpha", "alpha"): self.alpha2,
        }


@dataclass(frozen=True)
class PairingInput:
    """Numeric input for build_model: q, a_ij data and the pairings.

    Exactly one of ``a_blocks`` / ``a_matrix`` may be given; with neither,
    the principal block form a_i = 1 for i <= q is used (vol = 1).
    """

    q: int
    pairings: Pairings
    a_blocks: tuple = None
    a_matrix: tuple = None

    def __post_init__(self):
        if self.q < 0:
            raise PreconditionError("q must be non-negative")
        if self.a_blocks is not None and self.a_matrix is not None:
            raise PreconditionError("give a_blocks or a_matrix, not both")
        if self.a_blocks is not None:
            blocks = tuple(frac(b) for b in self.a_blocks)
            if len(blocks) > self.q:
                raise PreconditionError(f"at most q={self.q} block coefficients allowed")
            if any(b == 0 for b in blocks):
                raise PreconditionError("block coefficients must be nonzero")
            object.__setattr__(self, "a_blocks", blocks)
        if self.a_matrix is not None:
            object.__setattr__(
                self, "a_matrix", tuple(tuple(frac(x) for x in row) for row in self.a_matrix))

    @classmethod
    def from_json_dict(cls, doc) -> "PairingInput":
        try:
            q = int(doc["q"])
            raw = doc.get("pairings", {})
            unknown = set(raw) - set(PAIRING_KEYS)
            if unknown:
                raise SchemaError(f"unknown pairing keys: {sorted(unknown)}")
            pairings = Pairings(**{k: Fraction(str(v)) for k, v in raw.items()})
            blocks = doc.get("a_blocks")
            matrix = doc.get("a_matrix")
            return cls(q=q, pairings=pairings,
                       a_blocks=tuple(blocks) if blocks is not None else None,
                       a_matrix=tuple(map(tuple, matrix)) if matrix is not None else None)
        except SchemaError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad PairingInput document: {exc}") from exc


def build_model(inp: PairingInput) -> ModelSpec:
    """Realize a PairingInput as a concrete ring model."""
    n = 2 * inp.q
    if inp.a_matrix is not None:
        matrix = inp.a_matrix
        if len(matrix) != n:
            raise PreconditionError(f"a_matrix size {len(matrix)} != 2q = {n}")
    else:
        blocks = inp.a_blocks if inp.a_blocks is not None else (Fraction(1),) * inp.q
        rows = [[Fraction(0)] * n for _ in range(n)]
        for r, b in enumerate(blocks):
            rows[2 * r][2 * r + 1] = frac(b)
            rows[2 * r + 1][2 * r] = -frac(b)
        matrix = tuple(tuple(row) for row in rows)
    return ModelSpec(inp.q, matrix, inp.pairings.gram())


def volume(model: ModelSpec) -> Fraction:
    """vol = (1/q!) integral over J of omega^q; equals 1 when q = 0."""
    return integrate_jacobian(model.omega_pow(model.q)) / math.factorial(model.q)


def e_divisor(model: ModelSpec, sigma_dot) -> GradedElement:
    """Slant of c_1(F)^2 against a divisor class D with Sigma.D = sigma_dot:
    -2 (Sigma.D) omega."""
    return model.omega_class() * (-2 * frac(sigma_dot))


def e_alpha(model: ModelSpec) -> GradedElement:
    """e_alpha = -2 (Sigma.alpha) omega."""
    return e_divisor(model, model.pair(SIGMA, "alpha"))


def e_zeta(model: ModelSpec) -> GradedElement:
    """e_zeta = -2 (Sigma.zeta) omega."""
    return e_divisor(model, model.pair(SIGMA, "zeta"))


def e_gamma(model: ModelSpec, i) -> GradedElement:
    """The degree-1 class attached to the H_1 basis element number i: th_i."""
    return model.theta(i)


def e_zeta_beta(model: ModelSpec, i) -> GradedElement:
    """The degree-1 class attached to the H_3 insertion dual to be_i:
    (Sigma.zeta) * (interior product of be_i with omega)."""
    return model.interior_omega(i) * model.pair(SIGMA, "zeta")


def jacobian_odd_integral(model: ModelSpec, gammas, threes) -> Fraction:
    """The functional F on the odd part of an insertion word.

    Zero when the odd count is odd or when q - (a+b)/2 < 0 (the omega power
    cannot fill the top degree); otherwise the integral over J of
    th_{g_1} ... th_{g_a} . i_{be_{j_1}} omega ... i_{be_{j_b}} omega . omega^{q-(a+b)/2}.
    """
    a, b = len(gammas), len(threes)
    if (a + b) % 2:
        return Fraction(0)
    p = model.q - (a + b) // 2
    if p < 0:
        return Fraction(0)
    elem = model.one()
    for i in gammas:
        elem = elem * model.theta(i)
    for j in threes:
        elem = elem * model.interior_omega(j)
        if elem.is_zero():
            return Fraction(0)
    return integrate_jacobian(elem * model.omega_pow(p))


@dataclass(frozen=True)
class InsertionWord:
    """The argument x^r alpha^s gamma_1...gamma_a A_1...A_b of the invariant.

    ``gammas`` lists H_1 basis indices (degree-3 insertions), ``threes``
    lists H_3 classes through their Poincare-dual H^1 basis indices
    (degree-1 insertions).  Indices are 0-based; repeats are rejected since
    odd insertions anticommute.
    """

    r: int = 0
    s: int = 0
    gammas: tuple = field(default=())
    threes: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(self.gammas))
        object.__setattr__(self, "threes", tuple(self.threes))
        if self.r < 0 or self.s < 0:
            raise PreconditionError("multiplicities must be non-negative")
        if len(set(self.gammas)) != len(self.gammas) or len(set(self.threes)) != len(self.threes):
            raise PreconditionError("odd insertions may appear at most once each")

    def degree(self) -> int:
        return 4 * self.r + 2 * self.s + 3 * len(self.gammas) + len(self.threes)

    def odd_count(self) -> int:
        return len(self.gammas) + len(self.threes)

    def describe(self) -> str:
        bits = []
        if self.r:
            bits.append(f"x^{self.r}")
        if self.s:
            bits.append(f"alpha^{self.s}")
        bits += [f"d{i + 1}" for i in self.gammas]
        bits += [f"B{j + 1}" for j in self.threes]
        return " ".join(bits) if bits else "1"


def pairing_input_from_json(text: str) -> tuple:
    """Parse a JSON document into (PairingInput, wall_section_or_None)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top-level JSON value must be an object")
    version = doc.get("schema_version", 1)
    if version != 1:
        raise SchemaError(f"unsupported schema_version {version}")
    inp = PairingInput.from_json_dict(doc)
    wall = doc.get("wall")
    if wall is not None and not isinstance(wall, dict):
        raise SchemaError("'wall' must be an object")
    return inp, wall
