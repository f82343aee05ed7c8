"""Seed systems of basic invariants, one per group, with an independence certificate.

The downstream construction transforms an arbitrary valid system of basic
invariants; this module provides concrete defaults:

* power sums of even degree for B_n and D_n (plus the product of all
  variables for D_n),
* projected power sums for A_n,
* the radial quadratic and the real part of (x + iy)^m for planar dihedral
  models,
* Reynolds averages of powers of linear forms for everything else, with a
  deterministic retry ladder in case a candidate vanishes or breaks
  algebraic independence.

Validity is certified by the Jacobian determinant: the system is
algebraically independent iff the determinant is not the zero polynomial,
and for a genuine system of basic invariants the determinant is a scalar
multiple of the antiinvariant.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .groups import (
    ReflectionGroup,
    RootSystem,
    antiinvariant,
    group_action,
    project_polynomial,
    reynolds,
    reynolds_linear_power,
)
from .polys import Polynomial, substitute_linear
from .scalars import FLOAT


@dataclass
class SeedSystem:
    """Homogeneous invariant generators sorted by degree, with provenance."""

    polynomials: list
    degrees: list
    provenance: str

    def __post_init__(self):
        order = sorted(range(len(self.polynomials)), key=lambda i: self.degrees[i])
        self.polynomials = [self.polynomials[i] for i in order]
        self.degrees = [self.degrees[i] for i in order]


def _power_sum(num_vars, field, k):
    terms = {}
    for j in range(num_vars):
        exp = tuple(k if i == j else 0 for i in range(num_vars))
        terms[exp] = 1
    return Polynomial(num_vars, field, terms)


def _product_of_variables(num_vars, field):
    return Polynomial(num_vars, field, {(1,) * num_vars: 1})


def _planar_dihedral_seeds(rs: RootSystem):
    # Invariants of the dihedral group whose first mirror is the x-axis:
    # the radial quadratic and Re((x + iy)^m).
    field, m = rs.field, rs.m
    radial = _power_sum(2, field, 2)
    terms = {}
    sign = 1
    for k in range(0, m + 1, 2):
        binom = 1
        for t in range(k):
            binom = binom * (m - t) // (t + 1)
        terms[(m - k, k)] = sign * binom
        sign = -sign
    return [radial, Polynomial(2, field, terms)]


def _power_sum_seeds(group: ReflectionGroup) -> SeedSystem:
    rs = group.root_system
    nv, field = rs.num_vars, rs.field
    label = rs.type_label
    if label == "A":
        proj = rs.projection
        polys = [substitute_linear(_power_sum(nv, field, k), proj)
                 for k in range(2, rs.rank + 2)]
        return SeedSystem(polys, [p.homogeneous_degree() for p in polys], "power-sum")
    if label == "B":
        polys = [_power_sum(nv, field, 2 * i) for i in range(1, rs.rank + 1)]
        return SeedSystem(polys, [2 * i for i in range(1, rs.rank + 1)], "power-sum")
    if label == "D":
        polys = [_power_sum(nv, field, 2 * i) for i in range(1, rs.rank)]
        polys.append(_product_of_variables(nv, field))
        return SeedSystem(polys, [p.homogeneous_degree() for p in polys], "power-sum")
    if label == "I2" and (rs.num_vars == 2):
        polys = _planar_dihedral_seeds(rs)
        return SeedSystem(polys, [2, rs.m], "power-sum")
    raise ValueError(f"no closed-form seed family for type {rs.describe()}; use reynolds")


def _candidate_forms(nv):
    """Deterministic ladder of linear forms whose powers get averaged."""
    for t in range(1, nv + 1):
        yield tuple(1 if j < t else 0 for j in range(nv))
    for t in range(1, nv):
        yield tuple(1 if j == 0 else (2 if j == t else 0) for j in range(nv))
    for t in range(2, nv):
        yield tuple(j + 1 if j <= t else 0 for j in range(nv))


def _candidate_monomials(nv, degree):
    """All exponent vectors of the given total degree, graded-lex order."""
    def rec(pos, remaining):
        if pos == nv - 1:
            yield (remaining,)
            return
        for e in range(remaining + 1):
            for rest in rec(pos + 1, remaining - e):
                yield (e,) + rest
    return rec(0, degree)


def _reynolds_candidates(group: ReflectionGroup, degree: int):
    """Lazily yield candidate invariants of one degree, deterministically."""
    rs = group.root_system
    nv, field = rs.num_vars, rs.field
    proj = rs.projection
    for coeffs in _candidate_forms(nv):
        vec = linalg.mat_vec(proj, tuple(field.coerce(c) for c in coeffs))
        if all(field.is_zero(c) for c in vec):
            continue
        yield reynolds_linear_power(vec, degree, group)
    for exp in _candidate_monomials(nv, degree):
        mono = Polynomial.monomial(exp, 1, field)
        # project after averaging: cheaper and equal, the projector commutes
        yield project_polynomial(reynolds(mono, group), rs)


def _independent_within_degree(accepted, candidate, field):
    """Exact linear independence of equal-degree invariants via coefficient rank."""
    block = accepted + [candidate]
    support = sorted({e for p in block for e, _ in p.sorted_terms()})
    index = {e: i for i, e in enumerate(support)}
    rows = []
    for p in block:
        row = [field.zero] * len(support)
        for e, c in p.sorted_terms():
            row[index[e]] = c
        rows.append(row)
    return linalg.rank(rows, field) == len(block)


_MAX_CANDIDATES_PER_SLOT = 24


def _reynolds_seeds(group: ReflectionGroup) -> SeedSystem:
    """Fill every classical degree with Reynolds averages.

    Depth-first search over the deterministic candidate ladder: a candidate
    must be nonzero, of the right degree, and linearly independent inside its
    equal-degree block; complete assignments must pass the Jacobian
    certificate (within-degree independence cannot see relations like p^2
    against a lower-degree seed p).  Averages are memoized so backtracking
    never recomputes them.
    """
    rs = group.root_system
    degrees = rs.degrees
    slots = len(degrees)
    generators = {d: _reynolds_candidates(group, d) for d in set(degrees)}
    computed: dict = {d: [] for d in set(degrees)}

    def candidate(degree, index):
        pool = computed[degree]
        while len(pool) <= index:
            try:
                pool.append(next(generators[degree]))
            except StopIteration:
                return None
            if len(pool) > _MAX_CANDIDATES_PER_SLOT:
                return None
        return pool[index]

    def extend(chosen, i):
        if i == slots:
            system = SeedSystem(list(chosen), list(degrees), "reynolds")
            ok, _witness, _prop = jacobian_certificate(system, group)
            return system if ok else None
        index = 0
        while True:
            cand = candidate(degrees[i], index)
            index += 1
            if cand is None:
                return None
            if cand.is_zero() or cand.homogeneous_degree() != degrees[i]:
                continue
            same_degree = [p for p, d in zip(chosen, degrees) if d == degrees[i]]
            if not _independent_within_degree(same_degree, cand, rs.field):
                continue
            found = extend(chosen + [cand], i + 1)
            if found is not None:
                return found

    system = extend([], 0)
    if system is None:
        raise RuntimeError(
            f"no algebraically independent Reynolds seed system found for {rs.describe()}"
        )
    return system


def seed_invariants(group: ReflectionGroup, strategy: str = "auto") -> SeedSystem:
    """A valid system of basic invariants for the group.

    ``strategy`` is one of ``auto`` (closed-form family when one exists,
    Reynolds averaging otherwise), ``power-sums``, or ``reynolds``.
    """
    rs = group.root_system
    has_closed_form = rs.type_label in ("A", "B", "D") or (
        rs.type_label == "I2" and rs.num_vars == 2
    )
    if strategy == "auto":
        strategy = "power-sums" if has_closed_form else "reynolds"
    if strategy == "power-sums":
        if not has_closed_form:
            raise ValueError(f"no closed-form seeds for {rs.describe()}; use reynolds")
        system = _power_sum_seeds(group)
    elif strategy == "reynolds":
        system = _reynolds_seeds(group)
    else:
        raise ValueError(f"unknown seed strategy {strategy!r}")
    if rs.field is not FLOAT:
        ok, witness, _prop = jacobian_certificate(system, group)
        if not ok:
            raise RuntimeError(
                f"seed system for {rs.describe()} failed the independence certificate"
            )
    if list(system.degrees) != list(rs.degrees):
        raise RuntimeError(
            f"seed degrees {system.degrees} do not match the classical table {rs.degrees}"
        )
    return system


def validate_user_seeds(polys, group: ReflectionGroup) -> SeedSystem:
    """Wrap user-supplied polynomials as a certified seed system."""
    rs = group.root_system
    degrees = []
    for p in polys:
        d = p.homogeneous_degree()
        if d is None:
            raise ValueError("user seeds must be homogeneous and nonzero")
        if p.num_vars != rs.num_vars or p.field is not rs.field:
            raise ValueError("user seeds do not match the group's variables or field")
        degrees.append(d)
    system = SeedSystem(list(polys), degrees, "user-supplied")
    if list(system.degrees) != list(rs.degrees):
        raise ValueError(
            f"user seed degrees {sorted(degrees)} do not match the classical "
            f"table {rs.degrees} for {rs.describe()}"
        )
    for gen in group.generators:
        for p in system.polynomials:
            if group_action(gen, p) != p:
                raise ValueError("user seed is not invariant under the group")
    ok, _witness, _prop = jacobian_certificate(system, group)
    if not ok:
        raise ValueError("user seeds are algebraically dependent (zero Jacobian)")
    return system


def _poly_det(rows):
    """Determinant of a square matrix of polynomials by memoized minor expansion."""
    n = len(rows)
    field = rows[0][0].field
    nv = rows[0][0].num_vars
    memo = {}

    def minor(i, colmask):
        if i == n:
            return Polynomial.constant(1, nv, field)
        key = colmask
        got = memo.get((i, key))
        if got is not None:
            return got
        total = Polynomial.zero(nv, field)
        sign = 1
        for j in range(n):
            bit = 1 << j
            if colmask & bit:
                continue
            entry = rows[i][j]
            if not entry.is_zero():
                sub = minor(i + 1, colmask | bit)
                contrib = entry * sub
                total = total + (contrib if sign > 0 else -contrib)
            sign = -sign
        memo[(i, key)] = total
        return total

    return minor(0, 0)


def _proportional(f: Polynomial, g: Polynomial) -> bool:
    """Whether f = c*g for some nonzero scalar c (both nonzero)."""
    if f.is_zero() or g.is_zero():
        return False
    fterms, gterms = f.sorted_terms(), g.sorted_terms()
    if [e for e, _ in fterms] != [e for e, _ in gterms]:
        return False
    lead_f, lead_g = fterms[0][1], gterms[0][1]
    return all(cf * lead_g == cg * lead_f for (_, cf), (_, cg) in zip(fterms, gterms))


def jacobian_certificate(system: SeedSystem, group: ReflectionGroup):
    """(is_independent, witness, witness_is_multiple_of_antiinvariant).

    The witness is the Jacobian determinant of the seeds; for groups realized
    in a larger ambient space the matrix is squared off with the constant
    gradients of the fixed directions, which contribute only a scalar factor.
    """
    rs = group.root_system
    field, nv = rs.field, rs.num_vars
    rows = [[p.partial(j) for j in range(nv)] for p in system.polynomials]
    for u in rs.complement_basis:
        rows.append([Polynomial.constant(c, nv, field) for c in u])
    if len(rows) != nv:
        raise ValueError("seed count plus fixed directions must equal the variable count")
    witness = _poly_det(rows)
    if witness.is_zero():
        return False, witness, None
    if rs.field is FLOAT:
        return True, witness, None
    return True, witness, _proportional(witness, antiinvariant(rs))
