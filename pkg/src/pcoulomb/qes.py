"""Polynomial-ansatz oracle for the constrained radial problem.

Substituting u(r) = P(r) r^(Lambda+1) exp(-lam r - kap r^2) with
P = sum_{k=0..n} p_k r^k into

    -T u'' + [-A/r + Lambda(Lambda+1) T / r^2 + b r + c r^2] u = E u,
    T = hbar^2 / 2m,

and fixing the exponent rates so the r^2 and r^1 function-level terms cancel,

    kap = sqrt(2 m c) / (2 hbar),      lam = sqrt(m/2) b / (hbar sqrt(c)),

forces the level energy from the top power,

    E = -b^2/(4c) + (hbar sqrt(c)/sqrt(2m)) (2(n + Lambda) + 3),

and leaves one linear condition per remaining power r^j, j = -1 .. n-1:

    T [(j+2)(j+1) + 2(Lambda+1)(j+2)] p_{j+2}
        + [A - a0 - 2 T lam (j+1)] p_{j+1}
        + 4 T kap (n - j) p_j  =  0,          a0 = 2 T lam (Lambda + 1),

with p_k = 0 outside 0..n.  Rows j = n-1 .. 0 determine p_{n-1} .. p_0 by
back-substitution from the monic normalization p_n = 1 (each p_k is a
polynomial of degree n-k in A); the leftover row j = -1 is the scalar
constraint

    D(A) = 2 T (Lambda+1) p_1(A) + (A - a0) p_0(A) = 0,

a real polynomial of degree n+1 whose roots are the admissible Coulomb
strengths for an exact level-n state.  For n = 0 the single condition is
A = a0, reproducing the ground-level coupling relation exactly.

Everything here is independent of the closed-form construction: no
superpotential enters, only the ansatz reduction.  Root lists are returned in
ascending order and the whole pipeline is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .model import DimensionSpec, PhysicalParams
from .tolerances import DEFAULT_TOLS

#: maximum supported polynomial degree of the ansatz
MAX_LEVEL = 8

#: relative width at which bisection brackets are considered converged
ROOT_RTOL = DEFAULT_TOLS.root_bisect_rtol


@dataclass(frozen=True)
class RecursionSystem:
    """Banded linear system in (p_k) parameterized by the Coulomb strength A.

    Row j (j = -1 .. n-1) reads
        curvature[j] * p_{j+2} + (A + shift[j]) * p_{j+1} + step[j] * p_j = 0
    with curvature[j] = T[(j+2)(j+1) + 2(Lambda+1)(j+2)],
    shift[j] = -a0 - 2 T lam (j+1) and step[j] = 4 T kap (n-j).
    """

    n: int
    lam_exp: float
    kap_exp: float
    kinetic: float
    a0: float
    curvature: tuple[float, ...]
    shift: tuple[float, ...]
    step: tuple[float, ...]

    def row(self, j: int) -> tuple[float, float, float]:
        """Coefficients (of p_{j+2}, constant part on p_{j+1}, of p_j) for row j."""
        i = j + 1
        return self.curvature[i], self.shift[i], self.step[i]


@dataclass(frozen=True)
class OracleSolution:
    """One admissible Coulomb strength with its exact level-n state."""

    n: int
    a_root: float
    poly: tuple[float, ...]
    energy: float
    node_count: int


def _exponent_rates(
    b: float, c: float, phys: PhysicalParams
) -> tuple[float, float]:
    kap = math.sqrt(2.0 * phys.mass * c) / (2.0 * phys.hbar)
    lam = math.sqrt(phys.mass / 2.0) * b / (phys.hbar * math.sqrt(c))
    return lam, kap


def level_energy(
    b: float, c: float, dim: DimensionSpec, phys: PhysicalParams, n: int
) -> float:
    """Energy forced by the top power of the reduced equation."""
    scale = phys.hbar * math.sqrt(c) / math.sqrt(2.0 * phys.mass)
    return -b**2 / (4.0 * c) + scale * (2.0 * (n + dim.lam) + 3.0)


def oracle_reduce(
    b: float, c: float, dim: DimensionSpec, phys: PhysicalParams, n: int
) -> RecursionSystem:
    """Reduce the radial equation to the banded system described above."""
    if c <= 0:
        raise ValueError("oracle requires a confining quadratic term (c > 0)")
    if b < 0:
        raise ValueError(f"linear coupling must be >= 0, got {b}")
    if n < 0 or n > MAX_LEVEL:
        raise ValueError(f"level must be in 0..{MAX_LEVEL}, got {n}")
    t = phys.kinetic
    lam, kap = _exponent_rates(b, c, phys)
    a0 = 2.0 * t * lam * (dim.lam + 1.0)
    curvature = []
    shift = []
    step = []
    for j in range(-1, n):
        curvature.append(t * ((j + 2) * (j + 1) + 2.0 * (dim.lam + 1.0) * (j + 2)))
        shift.append(-a0 - 2.0 * t * lam * (j + 1))
        step.append(4.0 * t * kap * (n - j))
    return RecursionSystem(
        n=n,
        lam_exp=lam,
        kap_exp=kap,
        kinetic=t,
        a0=a0,
        curvature=tuple(curvature),
        shift=tuple(shift),
        step=tuple(step),
    )


def _coefficients_in_a(system: RecursionSystem) -> list[np.ndarray]:
    """p_0 .. p_n as ascending coefficient arrays in A, monic seed p_n = 1.

    Row j solved for p_j:
        p_j = -[ (A + shift[j]) p_{j+1} + curvature[j] p_{j+2} ] / step[j],
    descending j = n-1 .. 0.  step[j] = 4 T kap (n-j) > 0 throughout.
    """
    n = system.n
    polys: dict[int, np.ndarray] = {n: np.array([1.0]), n + 1: np.array([0.0])}
    for j in range(n - 1, -1, -1):
        curv, shift, step = system.row(j)
        acc = npoly.polymul(np.array([shift, 1.0]), polys[j + 1])
        acc = npoly.polyadd(acc, curv * polys[j + 2])
        polys[j] = -acc / step
    return [polys[k] for k in range(n + 1)]


def qes_constraint_polynomial(
    b: float, c: float, dim: DimensionSpec, phys: PhysicalParams, n: int
) -> np.ndarray:
    """Constraint polynomial D(A), ascending coefficients, degree n+1.

    Canonicalized to a positive leading coefficient; the root set is what
    matters, the overall scale is a convention.
    """
    system = oracle_reduce(b, c, dim, phys, n)
    polys = _coefficients_in_a(system)
    p1 = polys[1] if n >= 1 else np.array([0.0])
    d = npoly.polyadd(
        2.0 * system.kinetic * (dim.lam + 1.0) * p1,
        npoly.polymul(np.array([-system.a0, 1.0]), polys[0]),
    )
    d = np.asarray(d, dtype=float)
    if d[-1] < 0:
        d = -d
    return d


def _bisect_root(coeffs: np.ndarray, lo: float, hi: float) -> float:
    """Bisection to relative width ROOT_RTOL, then two guarded Newton polishes."""
    flo = npoly.polyval(lo, coeffs)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= ROOT_RTOL * max(1.0, abs(mid)):
            break
        fmid = npoly.polyval(mid, coeffs)
        if fmid == 0.0:
            return mid
        if (flo < 0) != (fmid < 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    root = 0.5 * (lo + hi)
    deriv = npoly.polyder(coeffs)
    for _ in range(2):
        slope = npoly.polyval(root, deriv)
        if slope == 0.0:
            break
        polished = root - npoly.polyval(root, coeffs) / slope
        if lo <= polished <= hi:
            root = polished
    return float(root)


def _root_bound(coeffs: np.ndarray) -> float:
    """Fujiwara bound: every real root lies in [-bound, bound]."""
    top = abs(float(coeffs[-1]))
    deg = len(coeffs) - 1
    terms = [abs(float(coeffs[deg - k]) / top) ** (1.0 / k) for k in range(1, deg + 1)]
    return 2.0 * max(terms) + 1.0


def _real_roots(coeffs: np.ndarray) -> list[float]:
    """All real roots, ascending, by monotone-segment bisection.

    The critical points (real roots of the derivative, found recursively)
    split the Fujiwara bracket into segments on which the polynomial is
    monotone, so each segment holds at most one root and a sign change pins
    it exactly.  Fully deterministic; exact zeros at segment ends are kept
    once.
    """
    coeffs = np.trim_zeros(np.asarray(coeffs, dtype=float), trim="b")
    if coeffs.size <= 1:
        return []
    if coeffs.size == 2:
        return [-float(coeffs[0]) / float(coeffs[1])]
    bound = _root_bound(coeffs)
    crit = [x for x in _real_roots(npoly.polyder(coeffs)) if -bound < x < bound]
    points = [-bound] + crit + [bound]
    roots: list[float] = []
    for lo, hi in zip(points[:-1], points[1:]):
        if hi <= lo:
            continue
        flo = float(npoly.polyval(lo, coeffs))
        fhi = float(npoly.polyval(hi, coeffs))
        if flo == 0.0:
            roots.append(lo)
        if fhi != 0.0 and (flo < 0) != (fhi < 0):
            roots.append(_bisect_root(coeffs, lo, hi))
    if float(npoly.polyval(points[-1], coeffs)) == 0.0:
        roots.append(points[-1])
    roots.sort()
    merged: list[float] = []
    for r in roots:
        if not merged or abs(r - merged[-1]) > 1e-11 * max(1.0, abs(r)):
            merged.append(r)
    return merged


def _null_vector(system: RecursionSystem, a_root: float) -> tuple[float, ...]:
    """Back-substituted polynomial coefficients p_0 .. p_n at a fixed root."""
    n = system.n
    p = [0.0] * (n + 2)
    p[n] = 1.0
    for j in range(n - 1, -1, -1):
        curv, shift, step = system.row(j)
        p[j] = -((a_root + shift) * p[j + 1] + curv * p[j + 2]) / step
    return tuple(p[: n + 1])


def positive_roots(poly: tuple[float, ...], scale: float = 1.0) -> list[float]:
    """Positive real roots of an ascending-coefficient polynomial.

    Roots within 1e-12 of the origin (measured against ``scale``, a
    characteristic length) do not count as positive.  Used for node counting
    of the low-degree polynomials produced here.
    """
    return [r for r in _real_roots(np.asarray(poly)) if r > 1e-12 * scale]


def qes_solve(
    b: float, c: float, dim: DimensionSpec, phys: PhysicalParams, n: int
) -> list[OracleSolution]:
    """All real constraint roots with their states, ascending in A.

    Every solution shares the level energy (the energy does not depend on
    which root is taken); they differ in the polynomial part and hence in
    node count.  An empty list means no real roots were found, which is a
    reportable outcome rather than an error.
    """
    system = oracle_reduce(b, c, dim, phys, n)
    d = qes_constraint_polynomial(b, c, dim, phys, n)
    energy = level_energy(b, c, dim, phys, n)
    length = 1.0 / math.sqrt(system.kap_exp)
    solutions = []
    for a_root in _real_roots(d):
        poly = _null_vector(system, a_root)
        nodes = len(positive_roots(poly, scale=length))
        solutions.append(
            OracleSolution(
                n=n, a_root=a_root, poly=poly, energy=energy, node_count=nodes
            )
        )
    return solutions


def oracle_state(
    solution: OracleSolution, dim: DimensionSpec, phys: PhysicalParams,
    b: float, c: float,
):
    """Closed-form state assembled from an oracle solution."""
    from .susy import ClosedFormState

    lam, kap = _exponent_rates(b, c, phys)
    return ClosedFormState(
        poly=solution.poly, q=dim.lam + 1.0, lam=lam, kap=kap
    )
