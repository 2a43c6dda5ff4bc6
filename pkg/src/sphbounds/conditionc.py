"""Certified verification that the certificate polynomial is nonpositive on
the realizable domain D = {(x,y,z) in [-1,t]^3 : 1+2xyz-x^2-y^2-z^2 >= 0}.

Branch and bound over boxes with exact rational interval arithmetic.  A box is
discharged when (i) its discriminant enclosure shows it misses D, (ii) the
polynomial enclosure (natural form intersected with a mean-value form) is
nonpositive, or (iii) it lies inside the certified neighborhood of one of the
known zeros of F.

Each zero gets a one-time exact local certificate.  Writing G(u) = F(z0 + u)
and splitting coordinates into "boundary" ones (z0_i = t, hence u_i <= 0 on
the cube) and "free" ones, telescoping the boundary coordinates gives

    G(u) = K(u_free) + sum_b u_b * H_b(u),

an exact polynomial identity.  If every H_b is strictly positive on the box
(interval arithmetic) then each u_b * H_b <= 0, and K <= 0 follows from exact
quadratic dominance: K has no constant or linear part, its quadratic form Q
satisfies Q <= -lambda*I for an explicit rational lambda > 0, and the cubic
and higher terms are bounded by C_eta * |u|^2 with C_eta < lambda on a small
enough box.  The same argument gives strict negativity away from z0, which
pins the zero set of F on D exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .intervals import RationalInterval, split_box, widest_axis
from .linalg import QMatrix, ldlt_psd
from .sdpcert import SdpCertificate, discriminant_poly, zero_orbit_points
from .tripoly import TriPoly

Q = Fraction


@dataclass
class ConditionCReport:
    passed: bool
    mode: str  # 'certified' | 'sampled' | 'sampled-only'
    detail: str = ""
    zero_set: List[Tuple[Fraction, Fraction, Fraction]] = field(default_factory=list)
    boxes_processed: int = 0
    failures: List[tuple] = field(default_factory=list)
    sampled_max: Optional[float] = None


class _LocalZeroCertificate:
    """Exact negativity certificate for F near one zero on the cube [-1,t]^3."""

    def __init__(self, F: TriPoly, z0, t: Fraction):
        self.z0 = tuple(Fraction(v) for v in z0)
        self.t = t
        G = F.taylor_shift(self.z0)
        if G.terms.get((0, 0, 0), Q(0)) != 0:
            raise ValueError(f"{z0} is not a zero of F")
        self.boundary = [i for i in range(3) if self.z0[i] == t]
        self.free = [i for i in range(3) if self.z0[i] != t]
        for i in self.free:
            if not (-1 < self.z0[i] < t):
                raise ValueError("free coordinates must be interior")
        # telescoping: G = K + sum_b u_b H_b
        self.H: Dict[int, TriPoly] = {}
        rest = G
        for b in self.boundary:
            dropped = rest.substitute_axis(b, 0)
            self.H[b] = (rest - dropped).divide_by_axis(b)
            rest = dropped
        self.K = rest  # polynomial in the free coordinates only
        for e in self.K.terms:
            for b in self.boundary:
                if e[b] != 0:
                    raise AssertionError("telescoping left a boundary coordinate")
        # linear part of K must vanish exactly; collect the quadratic form
        nf = len(self.free)
        for e, c in self.K.terms.items():
            if sum(e) == 1:
                raise ValueError(f"nonzero linear free-direction term at {z0}")
        self.quad = QMatrix.zero(max(nf, 1))
        if nf:
            qm = [[Q(0)] * nf for _ in range(nf)]
            for e, c in self.K.terms.items():
                if sum(e) != 2:
                    continue
                idx = [a for a in self.free for _ in range(e[a])]
                i, j = self.free.index(idx[0]), self.free.index(idx[1])
                if i == j:
                    qm[i][i] = c
                else:
                    qm[i][j] += c / 2
                    qm[j][i] += c / 2
            self.quad = QMatrix(qm)
            self.lam = self._dominance_lambda()
        else:
            if any(self.K.terms):
                raise ValueError("corner zero with a nonzero free part")
            self.lam = None
        # higher-order coefficient table: (total degree, |coeff|)
        self.higher = [(sum(e), abs(c)) for e, c in self.K.terms.items() if sum(e) >= 3]

    def _dominance_lambda(self) -> Fraction:
        """Rational lambda > 0 with quad <= -lambda I, by exact LDL^T checks."""
        import numpy as np
        nf = self.quad.rows
        approx = float(min(np.linalg.eigvalsh(
            np.array([[float(self.quad[i, j]) for j in range(nf)] for i in range(nf)]))))
        if approx >= 0:
            raise ValueError("free-direction quadratic form is not negative definite")
        cand = Fraction(-approx).limit_denominator(10 ** 6) / 2
        for _ in range(60):
            shifted = QMatrix([[-self.quad[i, j] - (cand if i == j else 0)
                                for j in range(nf)] for i in range(nf)])
            if ldlt_psd(shifted).psd:
                return cand
            cand /= 2
        raise ValueError("could not certify quadratic dominance")

    def remainder_constant(self, eta: Fraction) -> Fraction:
        return sum((c * eta ** (d - 2) for d, c in self.higher), Q(0))

    def certify_box(self, box: Sequence[RationalInterval]) -> bool:
        """True when F < 0 on the box except exactly at z0 (if contained)."""
        # shift to u-coordinates
        ubox = tuple(RationalInterval(box[i].lo - self.z0[i], box[i].hi - self.z0[i])
                     for i in range(3))
        for b in self.boundary:
            if ubox[b].hi > 0:
                return False  # outside the cube side; not our case
        if self.free:
            eta = max(max(abs(ubox[f].lo), abs(ubox[f].hi)) for f in self.free)
            if self.remainder_constant(eta) >= self.lam:
                return False
        for b, Hb in self.H.items():
            if Hb.interval_eval(ubox).lo <= 0:
                return False
        return True


class _BoxCertifier:
    def __init__(self, cert: SdpCertificate):
        self.t = cert.t
        self.F = cert.expansion().to_tripoly()
        self.disc = discriminant_poly()
        self.partials = [self.F.derivative(a) for a in range(3)]
        self.zeros = []
        for z0 in zero_orbit_points(self.t):
            if self.F.eval(*z0) == 0:
                self.zeros.append(_LocalZeroCertificate(self.F, z0, self.t))
        self.near = Q(1, 8)  # try local certificates within this distance

    def enclosure(self, box) -> RationalInterval:
        nat = self.F.interval_eval(box)
        mid = tuple(iv.mid for iv in box)
        mv = RationalInterval(self.F.eval(*mid))
        for a in range(3):
            da = self.partials[a].interval_eval(box)
            off = RationalInterval(box[a].lo - mid[a], box[a].hi - mid[a])
            mv = mv + da * off
        return nat.intersect(mv) if (mv.lo <= nat.hi and nat.lo <= mv.hi) else nat

    def outside_domain(self, box) -> bool:
        return self.disc.interval_eval(box).hi < 0

    def near_zero_certificates(self, box):
        for lz in self.zeros:
            if all(box[i].lo - lz.z0[i] <= self.near
                   and lz.z0[i] - box[i].hi <= self.near for i in range(3)):
                yield lz


def verify_condition_c(cert: SdpCertificate, mode: str = "certified",
                       depth_cap: int = 20, grid_step: Fraction = Q(1, 200),
                       tol: float = 1e-12, workers: int = 1) -> ConditionCReport:
    """Certify F <= 0 on D (see module docstring), or fall back to sampling.

    In certified mode the verdict also carries the exact zero set.  If some
    box cannot be discharged by depth `depth_cap`, the verdict downgrades to
    'sampled-only' with the offending boxes reported.
    """
    if mode == "sampled":
        ok, mx = _sampled_check(cert, grid_step, tol, workers)
        return ConditionCReport(passed=ok, mode="sampled", sampled_max=mx,
                                detail=f"max F over D grid = {mx:.3e}")
    if mode != "certified":
        raise ValueError(f"unknown mode {mode!r}")

    certifier = _BoxCertifier(cert)
    t = cert.t
    root = (RationalInterval(Q(-1), t),) * 3
    stack = [(root, 0)]
    processed = 0
    failures = []
    while stack:
        box, depth = stack.pop()
        processed += 1
        if certifier.outside_domain(box):
            continue
        enc = certifier.enclosure(box)
        if enc.hi < 0:
            continue
        handled = False
        for lz in certifier.near_zero_certificates(box):
            if lz.certify_box(box):
                handled = True
                break
        if handled:
            continue
        if depth >= depth_cap:
            failures.append(tuple((iv.lo, iv.hi) for iv in box))
            continue
        left, right = split_box(box, widest_axis(box))
        stack.append((left, depth + 1))
        stack.append((right, depth + 1))

    zero_set = [z for z in zero_orbit_points(t) if certifier.F.eval(*z) == 0]
    if not failures:
        return ConditionCReport(
            passed=True, mode="certified", boxes_processed=processed,
            zero_set=zero_set,
            detail=f"branch-and-bound certified on {processed} boxes; "
                   f"zero set has {len(zero_set)} points")
    ok, mx = _sampled_check(cert, grid_step, tol, workers)
    return ConditionCReport(
        passed=ok, mode="sampled-only", boxes_processed=processed,
        zero_set=zero_set, failures=failures[:16], sampled_max=mx,
        detail=f"{len(failures)} boxes unresolved at depth {depth_cap}; "
               f"sampled max = {mx:.3e}")


def _sampled_check(cert: SdpCertificate, step: Fraction, tol: float, workers: int = 1):
    """Dense float grid over D; returns (max <= tol, max value)."""
    import numpy as np
    F = cert.expansion().to_tripoly().float_evaluator()
    t = float(cert.t)
    h = float(step)
    npts = math.floor((t + 1.0) / h) + 1
    xs = -1.0 + h * np.arange(npts)
    xs = xs[xs <= t + 1e-15]

    def slab(i):
        x = xs[i]
        Yg, Zg = np.meshgrid(xs, xs, indexing="ij")
        Xg = np.full_like(Yg, x)
        mask = 1 + 2 * Xg * Yg * Zg - Xg ** 2 - Yg ** 2 - Zg ** 2 >= 0
        if not mask.any():
            return -float("inf")
        return float(F(Xg[mask], Yg[mask], Zg[mask]).max())

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as ex:
            vals = list(ex.map(slab, range(len(xs))))
    else:
        vals = [slab(i) for i in range(len(xs))]
    mx = max(vals)
    return (mx <= tol, mx)
