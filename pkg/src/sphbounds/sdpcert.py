"""Three-point SDP certificates for spherical codes, and their exact
verification.

A certificate is a tuple of symmetric rational matrices (F_0..F_d) together
with rational constants B and f_0.  Writing F(x,y,z) = sum_k <F_k, S^n_k>, if

  (a) every F_k is positive semidefinite,
  (b) F_0 - f_0 E_0 is positive semidefinite for some f_0 > 0,
  (c) F <= 0 on the realizable domain D,
  (d) F(x,x,1) <= B on [-1, t],

then every (n, N, t) code satisfies
  N <= (3B + sqrt(9B^2 + 4 f_0 (F(1,1,1) - 3B))) / (2 f_0).

The built-in certificate below proves the bound 10 for (4, N, 1/6) codes with
B = 250, f_0 = 800/3, F(1,1,1) = 59750/3, so the bound is exactly 10.  It was
found by solving the semidefinite feasibility problem over tuples satisfying
all equality conditions forced by tightness at the Petersen code, then
rounding to rationals; every property asserted about it is re-verified
exactly by this module and the test suite.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import QMatrix, ldlt_psd, nullspace, rank, solve_linear, PsdVerdict
from .serialize import frac_str, matrix_from_json, matrix_to_json, parse_frac
from .threepoint import MatrixTuple, expand, in_span, kernel_basis, snk_matrix, tuple_basis
from .tripoly import SymPoly3, TriPoly, m_sym
from .unipoly import UniPoly, isolate_roots, sturm_max_on

Q = Fraction


# ---------------------------------------------------------------------------
# domain
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Domain:
    """Realizable inner-product triples: [-1,t]^3 with 1+2xyz-x^2-y^2-z^2 >= 0."""
    t: Fraction

    def __post_init__(self):
        t = Fraction(self.t)
        object.__setattr__(self, "t", t)
        if not -1 <= t < 1:
            raise ValueError("need -1 <= t < 1")

    def contains(self, x, y, z) -> bool:
        x, y, z = Fraction(x), Fraction(y), Fraction(z)
        if not all(-1 <= v <= self.t for v in (x, y, z)):
            return False
        return 1 + 2 * x * y * z - x * x - y * y - z * z >= 0


def discriminant_poly() -> TriPoly:
    """1 + 2xyz - x^2 - y^2 - z^2 as a TriPoly."""
    return TriPoly({(0, 0, 0): Q(1), (1, 1, 1): Q(2),
                    (2, 0, 0): Q(-1), (0, 2, 0): Q(-1), (0, 0, 2): Q(-1)})


# ---------------------------------------------------------------------------
# certificate type
# ---------------------------------------------------------------------------

@dataclass
class SdpCertificate:
    n: int
    t: Fraction
    blocks: MatrixTuple
    B: Fraction
    f0: Fraction

    def __post_init__(self):
        self.t = Fraction(self.t)
        self.B = Fraction(self.B)
        self.f0 = Fraction(self.f0)
        if self.f0 <= 0:
            raise ValueError("f_0 must be positive")

    def expansion(self) -> SymPoly3:
        return expand(self.blocks, self.n)

    def value_at_ones(self) -> Fraction:
        return self.expansion().eval_at_ones()

    def head_block_minus_f0(self) -> QMatrix:
        F0 = self.blocks.blocks[0]
        rows = [list(r) for r in F0.data]
        rows[0][0] -= self.f0
        return QMatrix(rows)

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "t": frac_str(self.t),
            "blocks": [matrix_to_json(b) for b in self.blocks.blocks],
            "B": frac_str(self.B),
            "f0": frac_str(self.f0),
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SdpCertificate":
        doc = json.loads(text)
        blocks = MatrixTuple(tuple(matrix_from_json(b) for b in doc["blocks"]))
        return cls(n=int(doc["n"]), t=parse_frac(doc["t"]), blocks=blocks,
                   B=parse_frac(doc["B"]), f0=parse_frac(doc["f0"]))


# ---------------------------------------------------------------------------
# the built-in bound-10 certificate for (4, N, 1/6)
# ---------------------------------------------------------------------------

_BUILTIN_F0 = [
    ["1298467/1620", "-11019/16", "-1544921/720", "40817/360"],
    ["-11019/16", "894811/810", "114617/40", "-39843/20"],
    ["-1544921/720", "114617/40", "173131/20", "-6629/5"],
    ["40817/360", "-39843/20", "-6629/5", "15701"],
]
_BUILTIN_F1 = [
    ["254519/162", "-223", "-1859"],
    ["-223", "28199/4", "-3875"],
    ["-1859", "-3875", "15701"],
]
_BUILTIN_F2 = [["1650"]]

# m-basis expansion of the built-in certificate (keys sorted decreasingly)
BUILTIN_EXPANSION: Dict[Tuple[int, int, int], Fraction] = {
    (3, 2, 0): Q(25492, 5),
    (3, 1, 0): Q(-2663, 10),
    (3, 0, 0): Q(40817, 180),
    (2, 2, 1): Q(15701),
    (2, 2, 0): Q(16284, 5),
    (2, 1, 1): Q(-7750),
    (2, 1, 0): Q(49177, 20),
    (2, 0, 0): Q(-59921, 360),
    (1, 1, 1): Q(8399, 4),
    (1, 1, 0): Q(-4562, 5),
    (1, 0, 0): Q(125537, 648),
    (0, 0, 0): Q(-38033, 1620),
}

# quadratic cofactor of F(x,x,1) - B over (x+2/3)^2 (x-1/6), low degree first
BUILTIN_DIAG_COFACTOR = UniPoly([Q(229387, 90), Q(382301, 90), Q(25492, 15)])

# zero set of F on D: the symmetric orbits of these representatives
ZERO_REPRESENTATIVES = (
    (Q(-2, 3), Q(-2, 3), Q(1, 6)),
    (Q(-2, 3), Q(1, 6), Q(1, 6)),
    (Q(1, 6), Q(1, 6), Q(1, 6)),
)


def zero_orbit_points(t=Q(1, 6)) -> List[Tuple[Fraction, Fraction, Fraction]]:
    import itertools
    pts = set()
    for rep in ZERO_REPRESENTATIVES:
        for p in itertools.permutations(rep):
            pts.add(p)
    return sorted(pts)


def builtin_certificate() -> SdpCertificate:
    """The exact certificate proving N <= 10 for (4, N, 1/6) spherical codes."""
    blocks = MatrixTuple((QMatrix(_BUILTIN_F0), QMatrix(_BUILTIN_F1), QMatrix(_BUILTIN_F2)))
    return SdpCertificate(n=4, t=Q(1, 6), blocks=blocks, B=Q(250), f0=Q(800, 3))


# ---------------------------------------------------------------------------
# verification: conditions (a), (b)
# ---------------------------------------------------------------------------

@dataclass
class Verdict:
    passed: bool
    detail: str = ""
    witness: object = None

    def __bool__(self):
        return self.passed


def verify_psd(cert: SdpCertificate) -> Verdict:
    """Exact LDL^T checks of every F_k and of F_0 - f_0 E_0."""
    for k, blk in enumerate(cert.blocks.blocks):
        v = ldlt_psd(blk)
        if not v.psd:
            return Verdict(False, f"F_{k} not PSD", witness=v.witness)
    v = ldlt_psd(cert.head_block_minus_f0())
    if not v.psd:
        return Verdict(False, "F_0 - f_0 E_0 not PSD", witness=v.witness)
    return Verdict(True, "all blocks PSD and F_0 - f_0 E_0 PSD")


def verify_expansion(cert: SdpCertificate,
                     expected: Optional[Dict[Tuple[int, int, int], Fraction]] = None) -> Verdict:
    """Match the expansion of the blocks coefficient-by-coefficient.

    With no explicit table, certificates whose blocks equal the built-in ones
    are checked against the frozen built-in expansion (including the value
    59750/3 at (1,1,1)); other certificates only get the consistency checks.
    """
    poly = cert.expansion()
    if expected is None and cert.blocks == builtin_certificate().blocks:
        expected = BUILTIN_EXPANSION
    if expected is not None:
        for key, val in expected.items():
            got = poly.coeffs.get(key, Q(0))
            if got != val:
                return Verdict(False, f"coefficient of m{key} is {got}, expected {val}",
                               witness=key)
        extra = set(poly.coeffs) - set(expected)
        if extra:
            return Verdict(False, f"unexpected monomials {sorted(extra)}", witness=extra)
    ones = poly.eval_at_ones()
    if cert.blocks == builtin_certificate().blocks and ones != Q(59750, 3):
        return Verdict(False, f"F(1,1,1) = {ones} != 59750/3")
    return Verdict(True, f"expansion verified; F(1,1,1) = {ones}")


# ---------------------------------------------------------------------------
# condition (d): the diagonal restriction
# ---------------------------------------------------------------------------

@dataclass
class ConditionDReport:
    passed: bool
    detail: str = ""
    witness: Optional[Fraction] = None
    factor_certified: bool = False
    cofactor: Optional[UniPoly] = None
    roots_in_interval: Optional[List[Fraction]] = None

    def __bool__(self):
        return self.passed


def diagonal_poly(cert: SdpCertificate) -> UniPoly:
    """G(x) = F(x,x,1) - B, exactly."""
    tri = cert.expansion().to_tripoly()
    return tri.substitute_diag() - UniPoly.const(cert.B)


def verify_condition_d(cert: SdpCertificate,
                       expected_cofactor: Optional[UniPoly] = None) -> ConditionDReport:
    """Certify F(x,x,1) <= B on [-1, t] twice over.

    Factor path: divide G = F(x,x,1) - B exactly by (x+2/3)^2 (x-1/6) when
    those roots are present; the quotient must be strictly positive on the
    interval (checked by Sturm), which pins the sign of G and shows its only
    roots in [-1, t] are -2/3 and 1/6.  Sturm path: `sturm_max_on` applied to
    G directly.  Both must agree.
    """
    t = cert.t
    G = diagonal_poly(cert)
    sturm_verdict = sturm_max_on(G, Q(-1), t)
    report = ConditionDReport(passed=sturm_verdict.nonpositive)
    if not sturm_verdict.nonpositive:
        report.detail = "F(x,x,1) > B inside [-1, t]"
        report.witness = sturm_verdict.witness
        return report

    a, r = Q(-2, 3), Q(1, 6)
    if G.eval(a) == 0 and G.derivative().eval(a) == 0 and G.eval(r) == 0:
        quot = G
        for root, mult in ((a, 2), (r, 1)):
            for _ in range(mult):
                quot, rem = quot.divmod(UniPoly([-root, 1]))
                assert rem.is_zero()
        # strict positivity of the cofactor on [-1, t]
        neg = sturm_max_on(-quot, Q(-1), t)
        no_zero = (quot.eval(Q(-1)) > 0 and quot.eval(t) > 0
                   and not isolate_roots(quot, Q(-1), t))
        if neg.nonpositive and no_zero:
            report.factor_certified = True
            report.cofactor = quot
            report.roots_in_interval = [a, r]
            if expected_cofactor is not None and quot != expected_cofactor:
                report.passed = False
                report.detail = "cofactor differs from the frozen reference"
                return report
            report.detail = "factor-sign and Sturm certifications agree"
            return report
    report.detail = "Sturm certification only (no reference factorization)"
    return report


# ---------------------------------------------------------------------------
# the bound
# ---------------------------------------------------------------------------

@dataclass
class BoundValue:
    exact: Optional[Fraction] = None
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    radicand: Optional[Fraction] = None

    def as_float(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return float((self.lower + self.upper) / 2)


def sqrt_enclosure(r: Fraction, eps: Fraction) -> Tuple[Fraction, Fraction]:
    """[lo, hi] with lo <= sqrt(r) <= hi and hi - lo <= eps, exactly."""
    if r < 0:
        raise ValueError("negative radicand")
    if r == 0:
        return Q(0), Q(0)
    scale = 1
    while Fraction(1, scale) > eps:
        scale *= 2
    # sqrt(p/q) = sqrt(p*q)/q ; floor-integer sqrt at denominator q*scale
    p, q = r.numerator, r.denominator
    a = math.isqrt(p * q * scale * scale)
    lo = Fraction(a, q * scale)
    hi = Fraction(a + 1, q * scale)
    assert lo * lo <= r <= hi * hi
    return lo, hi


def compute_bound(cert: SdpCertificate, eps: Fraction = Q(1, 10 ** 30)) -> BoundValue:
    """(3B + sqrt(9B^2 + 4 f_0 (F(1,1,1) - 3B))) / (2 f_0), exact when possible.

    Returns the exact rational value when the radicand is a rational square,
    otherwise a certified enclosure of width <= eps.
    """
    F111 = cert.value_at_ones()
    B, f0 = cert.B, cert.f0
    radicand = 9 * B * B + 4 * f0 * (F111 - 3 * B)
    if radicand < 0:
        raise ArithmeticError("negative radicand: certificate constants inconsistent")
    p, q = radicand.numerator, radicand.denominator
    sp, sq = math.isqrt(p), math.isqrt(q)
    if sp * sp == p and sq * sq == q:
        root = Fraction(sp, sq)
        return BoundValue(exact=(3 * B + root) / (2 * f0), radicand=radicand)
    lo, hi = sqrt_enclosure(radicand, eps * cert.f0)
    return BoundValue(lower=(3 * B + lo) / (2 * f0), upper=(3 * B + hi) / (2 * f0),
                      radicand=radicand)


# ---------------------------------------------------------------------------
# full verification
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    psd: Verdict = None
    expansion: Verdict = None
    condition_c: object = None
    condition_d: ConditionDReport = None
    bound: BoundValue = None
    passed: bool = False
    condition_c_mode: str = "skipped"

    def to_dict(self) -> dict:
        out = {
            "passed": self.passed,
            "psd": {"passed": bool(self.psd), "detail": self.psd.detail},
            "expansion": {"passed": bool(self.expansion), "detail": self.expansion.detail},
            "condition_d": {"passed": bool(self.condition_d),
                            "detail": self.condition_d.detail,
                            "factor_certified": self.condition_d.factor_certified},
            "condition_c": None,
            "bound": None,
        }
        if self.condition_c is not None:
            out["condition_c"] = {"passed": self.condition_c.passed,
                                  "mode": self.condition_c.mode,
                                  "detail": self.condition_c.detail}
        if self.bound is not None:
            if self.bound.exact is not None:
                out["bound"] = frac_str(self.bound.exact)
            else:
                out["bound"] = [frac_str(self.bound.lower), frac_str(self.bound.upper)]
        return out


def verify_full(cert: SdpCertificate, condition_c_mode: str = "certified",
                expected_expansion=None, expected_cofactor=None) -> VerificationReport:
    """Run every certificate check; PASS only if all conditions hold.

    `condition_c_mode`: 'certified' (interval branch-and-bound), 'sampled'
    (float grid preflight), or 'skipped'.
    """
    from .conditionc import verify_condition_c
    rep = VerificationReport()
    is_builtin = cert.blocks == builtin_certificate().blocks
    rep.psd = verify_psd(cert)
    rep.expansion = verify_expansion(cert, expected_expansion)
    rep.condition_d = verify_condition_d(
        cert, expected_cofactor if expected_cofactor is not None
        else (BUILTIN_DIAG_COFACTOR if is_builtin else None))
    rep.condition_c_mode = condition_c_mode
    if condition_c_mode != "skipped":
        rep.condition_c = verify_condition_c(cert, mode=condition_c_mode)
    rep.bound = compute_bound(cert)
    rep.passed = bool(rep.psd and rep.expansion and rep.condition_d
                      and (rep.condition_c is None or rep.condition_c.passed))
    return rep


# ---------------------------------------------------------------------------
# the one-parameter search family and kernel data
# ---------------------------------------------------------------------------

# reference kernel tuples at sizes (4, 3, 1); each expands to the zero
# polynomial (verified exactly by tests and by build_search_space)
_K1 = (
    [["0", "-1/2", "0", "0"], ["-1/2", "1", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]],
    [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]],
    [["0"]],
)
_K2 = (
    [["1/2", "0", "-5/4", "0"], ["0", "0", "0", "0"], ["-5/4", "0", "2", "0"], ["0", "0", "0", "0"]],
    [["0", "0", "0"], ["0", "3", "0"], ["0", "0", "0"]],
    [["1"]],
)
_K3 = (
    [["0", "0", "0", "0"], ["0", "-1", "1/2", "0"], ["0", "1/2", "0", "0"], ["0", "0", "0", "0"]],
    [["0", "1/2", "0"], ["1/2", "0", "0"], ["0", "0", "0"]],
    [["0"]],
)
# note: the (0,0) entry of the middle block is 0; a nonzero entry there would
# expand to m100 - m110 and leave the kernel
_K4 = (
    [["0", "0", "0", "0"], ["0", "0", "-1/2", "1/2"], ["0", "-1/2", "0", "0"], ["0", "1/2", "0", "0"]],
    [["0", "0", "1/2"], ["0", "0", "0"], ["1/2", "0", "0"]],
    [["0"]],
)

_A_BLOCKS = (
    [[-18, -54, 0, 0], [-54, 2268, -648, 0], [0, -648, 3240, 5832], [0, 0, 5832, 0]],
    [[0, 0, 0], [0, -6480, 0], [0, 0, 0]],
    [[0]],
)
_B_BLOCKS = (
    [[-64, 504, 0, 0], [504, -5832, 2592, 0], [0, 2592, 4428, -13608], [0, 0, -13608, 34992]],
    [[0, 0, 0], [0, 12204, -13608], [0, -13608, 34992]],
    [[0]],
)


def reference_kernel() -> List[MatrixTuple]:
    return [MatrixTuple(tuple(QMatrix(b) for b in K)) for K in (_K1, _K2, _K3, _K4)]


def family_base() -> MatrixTuple:
    return MatrixTuple(tuple(QMatrix(b) for b in _A_BLOCKS))


def family_direction() -> MatrixTuple:
    return MatrixTuple(tuple(QMatrix(b) for b in _B_BLOCKS))


_FAMILY_SPAN = [(3, 2, 0), (2, 2, 1), (2, 2, 0), (2, 1, 1), (2, 1, 0),
                (1, 1, 1), (1, 1, 0), (1, 0, 0), (0, 0, 0)]


@dataclass
class SearchSpace:
    """Affine family F_gamma = base + gamma * direction (+ kernel shifts)."""
    base: MatrixTuple
    direction: MatrixTuple
    kernel: List[MatrixTuple]
    family_dimension: int = 1


def build_search_space() -> SearchSpace:
    """Derive the one-parameter polynomial family from the linear conditions.

    In the 9-dimensional span of {m320, m221, m220, m211, m210, m111, m110,
    m100, 1}, impose: vanishing at the three zero triples, vanishing x-partial
    at (-2/3,-2/3,1/6), (-2/3,1/6,1/6), (-2/3,-2/3,1), equal diagonal values
    at -2/3 and 1/6, and F(1,1,1) + 27 B = 100 f_0 with f_0 = 800/3.  The
    exact solution set is a one-dimensional affine family; it must agree with
    the frozen base/direction tuples up to the expansion kernel.
    """
    za, zt = Q(-2, 3), Q(1, 6)
    basis_polys = [m_sym(*key).to_tripoly() for key in _FAMILY_SPAN]
    rows, rhs = [], []

    def add(fun, value):
        rows.append([fun(p) for p in basis_polys])
        rhs.append(value)

    for pt in ((za, za, zt), (za, zt, zt), (zt, zt, zt)):
        add(lambda p, pt=pt: p.eval(*pt), Q(0))
    for pt in ((za, za, zt), (za, zt, zt), (za, za, 1)):
        add(lambda p, pt=pt: p.derivative(0).eval(*pt), Q(0))
    add(lambda p: p.eval(za, za, 1) - p.eval(zt, zt, 1), Q(0))
    # F(1,1,1) + 27 B = 100 f0 with B = F(1/6,1/6,1), f0 = 800/3
    add(lambda p: p.eval(1, 1, 1) + 27 * p.eval(zt, zt, 1), Q(80000, 3))

    rep = solve_linear(QMatrix(rows), rhs)
    if rep.status != "affine" or len(rep.nullspace) != 1:
        raise ArithmeticError("family solve did not give a one-dimensional affine set")

    base, direction = family_base(), family_direction()
    kern = kernel_basis(4, (4, 3, 1))
    # the solved family must match the frozen tuples: base expansion solves the
    # system, direction expansion spans the homogeneous line
    base_poly = expand(base, 4)
    dir_poly = expand(direction, 4)
    part = {key: c for key, c in zip(_FAMILY_SPAN, rep.solution)}
    null = {key: c for key, c in zip(_FAMILY_SPAN, rep.nullspace[0])}
    base_vec = {k: base_poly.coeffs.get(k, Q(0)) for k in _FAMILY_SPAN}
    # base must equal particular + lambda * null for a single rational lambda
    lam = None
    for k in _FAMILY_SPAN:
        diff = base_vec[k] - part[k]
        if null[k] != 0:
            cand = diff / null[k]
            if lam is None:
                lam = cand
            elif lam != cand:
                raise ArithmeticError("frozen family base is off the solved family")
        elif diff != 0:
            raise ArithmeticError("frozen family base is off the solved family")
    for k in _FAMILY_SPAN:
        got = dir_poly.coeffs.get(k, Q(0))
        if null[k] == 0:
            if got != 0:
                raise ArithmeticError("frozen direction is off the solved line")
    ratios = {k: dir_poly.coeffs.get(k, Q(0)) / null[k] for k in _FAMILY_SPAN if null[k] != 0}
    if len(set(ratios.values())) != 1:
        raise ArithmeticError("frozen direction is off the solved line")

    kref = reference_kernel()
    for K in kref:
        if not expand(K, 4).is_zero():
            raise ArithmeticError("reference kernel tuple does not expand to zero")
        if not in_span(kern, K):
            raise ArithmeticError("reference kernel tuple outside the computed kernel")
    if len(kern) != 4:
        raise ArithmeticError(f"kernel dimension {len(kern)} != 4")
    return SearchSpace(base=base, direction=direction, kernel=kref, family_dimension=1)


@dataclass
class FeasibilityResult:
    blocks: Optional[MatrixTuple]
    beta: Optional[List[Fraction]]
    psd: bool
    diagnostic: str = ""


def family_tuple(space: SearchSpace, gamma, beta: Sequence) -> MatrixTuple:
    gamma = Fraction(gamma)
    out = space.base.add(space.direction.scale(gamma))
    for b, K in zip(beta, space.kernel):
        if b != 0:
            out = out.add(K.scale(Fraction(b)))
    return out


def feasibility_solve(space: SearchSpace, gamma,
                      beta: Optional[Sequence] = None) -> FeasibilityResult:
    """Find kernel shifts making every block of base + gamma*direction PSD.

    With `beta` given the candidate is certified directly.  Otherwise a small
    numeric SDP maximizes the joint minimum eigenvalue over the four shift
    coordinates, the optimizer's point is rounded through a denominator
    ladder, and the first exactly-PSD candidate wins.
    """
    gamma = Fraction(gamma)
    if beta is not None:
        beta = [Fraction(b) for b in beta]
        tup = family_tuple(space, gamma, beta)
        worst = None
        for k, blk in enumerate(tup.blocks):
            v = ldlt_psd(blk)
            if not v.psd:
                return FeasibilityResult(None, beta, False,
                                         f"block {k} not PSD; witness value {v.witness_value}")
        return FeasibilityResult(tup, beta, True, "certified by exact LDL^T")

    import numpy as np
    import cvxpy as cp
    bvar = cp.Variable(4)
    margin = cp.Variable()
    cons = []
    for k in range(3):
        size = space.base.blocks[k].rows
        base = np.array([[float(space.base.blocks[k][i, j]) for j in range(size)]
                         for i in range(size)])
        dirm = np.array([[float(space.direction.blocks[k][i, j]) for j in range(size)]
                         for i in range(size)])
        expr = base + float(gamma) * dirm
        for idx, K in enumerate(space.kernel):
            Km = np.array([[float(K.blocks[k][i, j]) for j in range(size)]
                           for i in range(size)])
            expr = expr + bvar[idx] * Km
        cons.append(expr >> margin * np.eye(size))
    prob = cp.Problem(cp.Maximize(margin), cons)
    prob.solve(solver=cp.CLARABEL)
    if prob.status not in ("optimal", "optimal_inaccurate") or margin.value is None:
        return FeasibilityResult(None, None, False, f"numeric SDP failed: {prob.status}")
    if margin.value < -1e-7:
        return FeasibilityResult(None, None, False,
                                 f"most negative eigenvalue about {margin.value:.6g}")
    for den in (1, 2, 3, 4, 6, 12, 100, 10 ** 4):
        cand = [Fraction(float(v)).limit_denominator(den) for v in bvar.value]
        res = feasibility_solve(space, gamma, cand)
        if res.psd:
            return res
    return FeasibilityResult(None, None, False, "rounding failed to certify")
