"""Automorphism testing for rational maps: exact verification plus a
numeric discovery mode.

Exact computation of the full automorphism group of an arbitrary map would
require factoring its fixed-point form, so the split here is: candidates
are verified exactly (coefficient proportionality after conjugation), and
candidate discovery is numeric (automorphisms permute the periodic points,
so every automorphism shows up as the Moebius map through a triple of
them).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .forms import RationalMap, distinct_common_roots_count
from .moebius import FiniteSubgroup, MoebiusMap, classify_census, conjugate_map


class NotAnAutomorphism(ValueError):
    """Type requested for a map/Moebius pair that is not an automorphism."""


class DegenerateConfiguration(RuntimeError):
    """Fewer than three distinct periodic points found through period 2."""


def is_automorphism(phi: RationalMap, sigma: MoebiusMap) -> bool:
    """Exact test: does conjugating phi by sigma reproduce phi projectively?"""
    return conjugate_map(phi, sigma).proportional_to(phi)


def automorphism_type(phi: RationalMap, sigma: MoebiusMap) -> int:
    """Type t in {-1, 0, 1}: one less than the number of distinct common
    fixed points of phi and sigma."""
    if sigma.is_identity():
        raise NotAnAutomorphism("type is defined for non-trivial automorphisms")
    if not is_automorphism(phi, sigma):
        raise NotAnAutomorphism("sigma does not stabilize phi")
    common = distinct_common_roots_count(phi.fixed_point_form(), sigma.fixed_point_form())
    return common - 1


@dataclass
class AutReport:
    """Verification/discovery outcome for one map."""

    verified_elements: list[MoebiusMap] = field(default_factory=list)
    numeric_order: int | None = None
    census: dict[int, int] = field(default_factory=dict)
    classified: str = "unknown"
    failed: MoebiusMap | None = None

    @property
    def all_verified(self) -> bool:
        return self.failed is None

    def to_json(self) -> dict:
        return {
            "verified_elements": [e.to_json() for e in self.verified_elements],
            "numeric_order": self.numeric_order,
            "census": {str(k): v for k, v in sorted(self.census.items())},
            "classified": self.classified,
            "failed": self.failed.to_json() if self.failed else None,
        }


def verify_group_action(phi: RationalMap, group: FiniteSubgroup) -> AutReport:
    """Run the exact automorphism test on every element of the group.

    Stops at the first failure, which is recorded in the report.
    """
    verified = []
    census: dict[int, int] = {}
    for e in group.elements:
        if not is_automorphism(phi, e):
            return AutReport(
                verified_elements=verified, census=census, classified="unknown", failed=e
            )
        verified.append(e)
        o = e.projective_order()
        census[o] = census.get(o, 0) + 1
    return AutReport(
        verified_elements=verified,
        census=census,
        classified=classify_census(len(verified), census),
    )


# ---------------------------------------------------------------------------
# numeric discovery
# ---------------------------------------------------------------------------


def _complex_coeffs(form) -> np.ndarray:
    return np.array([c.complex() for c in form.coeffs], dtype=complex)


def _roots_of_form(coeffs: np.ndarray, exact_lead_zeros: int) -> list[complex | None]:
    """Projective roots of a binary form given by X-descending coefficients.

    None stands for the point at infinity; exact_lead_zeros leading
    coefficients are known to vanish exactly.
    """
    pts: list[complex | None] = [None] * exact_lead_zeros
    poly = coeffs[exact_lead_zeros:]
    if len(poly) > 1:
        pts.extend(np.roots(poly))
    return pts


def _cluster(points, tol: float):
    out: list[complex | None] = []
    for p in points:
        if p is None:
            if None not in out:
                out.append(None)
            continue
        if not any(q is not None and abs(p - q) <= tol for q in out):
            out.append(p)
    return out


def _homog(p: complex | None) -> tuple[complex, complex]:
    return (1 + 0j, 0j) if p is None else (p, 1 + 0j)


def _mobius_through(src, dst) -> np.ndarray:
    """The numeric Moebius matrix sending the src triple to the dst triple."""

    def to_01inf(triple):
        (x1, y1), (x2, y2), (x3, y3) = (_homog(p) for p in triple)
        alpha = y3 * x2 - x3 * y2
        beta = y1 * x2 - x1 * y2
        return np.array([[alpha * y1, -alpha * x1], [beta * y3, -beta * x3]], dtype=complex)

    m_src = to_01inf(src)
    m_dst = to_01inf(dst)
    inv = np.array([[m_dst[1, 1], -m_dst[0, 1]], [-m_dst[1, 0], m_dst[0, 0]]], dtype=complex)
    return inv @ m_src


def _subst_complex(coeffs: np.ndarray, a, b, c, d) -> np.ndarray:
    # F(aX+bY, cX+dY) for a complex coefficient vector (X-descending)
    n = len(coeffs) - 1
    p1 = [np.array([1.0 + 0j])]
    p2 = [np.array([1.0 + 0j])]
    for _ in range(n):
        p1.append(np.convolve(p1[-1], np.array([a, b])))
        p2.append(np.convolve(p2[-1], np.array([c, d])))
    out = np.zeros(n + 1, dtype=complex)
    for i, coef in enumerate(coeffs):
        if coef != 0:
            out += coef * np.convolve(p1[n - i], p2[i])
    return out


def _conjugate_complex(fc: np.ndarray, gc: np.ndarray, m: np.ndarray):
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    fs = _subst_complex(fc, a, b, c, d)
    gs = _subst_complex(gc, a, b, c, d)
    return d * fs - b * gs, a * gs - c * fs


def _proportional(v: np.ndarray, w: np.ndarray, tol: float) -> bool:
    nv, nw = np.linalg.norm(v), np.linalg.norm(w)
    if nv == 0 or nw == 0:
        return False
    s = np.vdot(v, w) / (nv * nv)
    return bool(np.linalg.norm(s * v - w) <= tol * nw)


def _numeric_order(m: np.ndarray, tol: float, cap: int = 512) -> int | None:
    m = m / np.sqrt(abs(np.linalg.det(m)))
    p = m.copy()
    for k in range(1, cap + 1):
        scale = max(abs(p[0, 0]), abs(p[1, 1]), 1e-30)
        if abs(p[0, 1]) <= tol * scale and abs(p[1, 0]) <= tol * scale and abs(
            p[0, 0] - p[1, 1]
        ) <= tol * scale:
            return k
        p = p @ m
        p = p / np.max(np.abs(p))
    return None


def discover_automorphisms(phi: RationalMap, tolerance: float = 1e-8) -> AutReport:
    """Numeric search for Aut(phi) via triples of periodic points.

    Fixed points are computed as roots of the fixed-point form; if fewer
    than three are distinct, period-2 points are added.  Each candidate
    Moebius map through a triple is tested numerically; no exactness is
    claimed for the result.
    """
    if phi.degree < 2:
        raise ValueError("discovery expects degree >= 2")
    cluster_tol = max(tolerance, 1e-9) ** 0.5
    j = phi.fixed_point_form()
    lead_zeros = 0
    while lead_zeros <= j.degree and not j.coeffs[lead_zeros]:
        lead_zeros += 1
    fc = _complex_coeffs(phi.F)
    gc = _complex_coeffs(phi.G)
    points = _cluster(_roots_of_form(_complex_coeffs(j), lead_zeros), cluster_tol)
    if len(points) < 3:
        d = phi.degree
        f2 = _subst_complex_pair(fc, gc, fc)
        g2 = _subst_complex_pair(fc, gc, gc)
        j2 = np.concatenate(([0], f2)) - np.concatenate((g2, [0]))
        # exact leading zeros are unknown here; strip numerically
        scale = np.max(np.abs(j2)) or 1.0
        nz = 0
        while nz < len(j2) - 1 and abs(j2[nz]) <= 1e-12 * scale:
            nz += 1
        points = _cluster(points + _roots_of_form(j2, nz), cluster_tol)
    if len(points) < 3:
        raise DegenerateConfiguration("fewer than 3 periodic points through period 2")

    points.sort(key=lambda p: (0, 0.0, 0.0) if p is None else (1, round(p.real, 6), round(p.imag, 6)))
    base = points[:3]
    coeff_vec = np.concatenate((fc, gc))
    found: list[np.ndarray] = []
    for q1 in points:
        for q2 in points:
            if q2 is q1:
                continue
            for q3 in points:
                if q3 is q1 or q3 is q2:
                    continue
                m = _mobius_through(base, (q1, q2, q3))
                if abs(np.linalg.det(m)) < 1e-14:
                    continue
                m = m / np.max(np.abs(m))
                cf, cg = _conjugate_complex(fc, gc, m)
                if _proportional(np.concatenate((cf, cg)), coeff_vec, tolerance):
                    if not any(_matrix_proportional(m, f, tolerance) for f in found):
                        found.append(m)
    census: dict[int, int] = {}
    for m in found:
        o = _numeric_order(m, max(tolerance, 1e-9))
        if o is not None:
            census[o] = census.get(o, 0) + 1
    return AutReport(
        verified_elements=[],
        numeric_order=len(found),
        census=census,
        classified=classify_census(len(found), census),
    )


def _matrix_proportional(m1: np.ndarray, m2: np.ndarray, tol: float) -> bool:
    v, w = m1.ravel(), m2.ravel()
    s = np.vdot(v, w) / np.vdot(v, v)
    return bool(np.linalg.norm(s * v - w) <= max(tol, 1e-9) ** 0.5 * np.linalg.norm(w))


def _subst_complex_pair(fc: np.ndarray, gc: np.ndarray, target: np.ndarray) -> np.ndarray:
    """target(F(X,Y), G(X,Y)) for complex coefficient vectors; the form
    composition needed for period-2 points.  Every term has full degree
    n*d, so the accumulation is a plain sum."""
    n = len(target) - 1
    pf = [np.array([1.0 + 0j])]
    pg = [np.array([1.0 + 0j])]
    for _ in range(n):
        pf.append(np.convolve(pf[-1], fc))
        pg.append(np.convolve(pg[-1], gc))
    deg_out = n * (len(fc) - 1)
    out = np.zeros(deg_out + 1, dtype=complex)
    for i, coef in enumerate(target):
        if coef != 0:
            out += coef * np.convolve(pf[n - i], pg[i])
    return out
