"""Construction and exact verification of canonical systems of basic invariants.

A system f_1, ..., f_n of basic invariants is canonical when f_i(d)f_j is
the zero polynomial for i != j and a positive constant for i = j.  The
construction here starts from any valid seed system h_1, ..., h_n:

1. push each seed through the transfer map built from the fundamental
   antiinvariant (``transfer``), assembling the candidate
   ``sum_j x_j * transfer(d_j h_i)``,
2. orthogonalize candidates of equal degree under the apolar pairing.

For groups whose invariant degrees are all distinct, step 2 is a no-op and
the candidates themselves form the system.  Type D_n with even n has one
repeated degree; there the monomial x_1*...*x_n is itself a member of the
canonical span, and a single cross-pairing combination of the two seeds
replaces the orthogonalization.

Exact outputs carry the pair (f_i, c_i) with c_i = <f_i, f_i>; the unit
normalization divides by sqrt(c_i) and therefore exists only in the float
view.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .groups import ReflectionGroup, antiinvariant, group_action
from .polys import (
    OneForm,
    Polynomial,
    apolar_inner,
    apply_diff,
    differential,
)
from .scalars import FLOAT, is_positive, to_float
from .seeds import SeedSystem, seed_invariants


def transfer(f: Polynomial, delta: Polynomial) -> Polynomial:
    """Apply ``f`` to the antiinvariant, then apply the result to it again.

    The map is linear, degree-preserving, self-adjoint for the apolar
    pairing, commutes with the group action, and kills exactly the ideal
    generated by positive-degree invariants.
    """
    return apply_diff(apply_diff(f, delta), delta)


def transfer_form(omega: OneForm, delta: Polynomial) -> OneForm:
    """Componentwise transfer of a one-form."""
    return omega.map_components(lambda c: transfer(c, delta))


def euler_contract(omega: OneForm) -> Polynomial:
    """Contract a one-form with the Euler vector field: sum_k x_k * h_k.

    On the differential of a homogeneous h this returns (deg h) * h.
    """
    nv, field = omega.num_vars, omega.field
    total = Polynomial.zero(nv, field)
    for k, comp in enumerate(omega.components):
        total = total + Polynomial.variable(k, nv, field) * comp
    return total


def candidate_invariants(seeds: SeedSystem, delta: Polynomial) -> list:
    """The candidate system sum_j x_j * transfer(d_j h_i), one per seed.

    Each candidate is homogeneous invariant of the same degree as its seed,
    and the list is linearly independent; anything else signals an invalid
    seed system or an upstream bug.
    """
    cands = []
    for h in seeds.polynomials:
        g = euler_contract(transfer_form(differential(h), delta))
        if g.is_zero():
            raise RuntimeError(
                f"candidate for a degree-{h.homogeneous_degree()} seed collapsed to zero"
            )
        if g.homogeneous_degree() != h.homogeneous_degree():
            raise RuntimeError("candidate degree does not match its seed degree")
        cands.append(g)
    for degree in set(seeds.degrees):
        block = [c for c in cands if c.homogeneous_degree() == degree]
        if len(block) > 1 and not _linearly_independent(block):
            raise RuntimeError(f"degree-{degree} candidates are linearly dependent")
    return cands


def _linearly_independent(polys):
    field = polys[0].field
    support = sorted({e for p in polys for e, _ in p.sorted_terms()})
    index = {e: i for i, e in enumerate(support)}
    rows = []
    for p in polys:
        row = [field.zero] * len(support)
        for e, c in p.sorted_terms():
            row[index[e]] = c
        rows.append(row)
    return linalg.rank(rows, field) == len(polys)


def orthogonalize_graded(candidates: list) -> list:
    """Gram-Schmidt under the apolar pairing, without normalization.

    Candidates must be homogeneous and sorted by degree.  Polynomials of
    distinct degrees pair to zero, so projections only happen inside
    equal-degree blocks.
    """
    out = []
    for cand in candidates:
        g = cand
        d = cand.homogeneous_degree()
        for prev in out:
            if prev.homogeneous_degree() != d:
                continue
            coeff = apolar_inner(prev, g) / apolar_inner(prev, prev)
            g = g - prev.scale(coeff)
        if g.is_zero():
            raise RuntimeError("orthogonalization hit a zero vector: dependent candidates")
        out.append(g)
    return out


@dataclass
class InvariantEntry:
    polynomial: Polynomial
    degree: int
    norm: object  # <f, f>, a field scalar

    def to_json(self, field):
        return {
            "degree": self.degree,
            "norm": field.format(self.norm),
            "poly": self.polynomial.to_json(),
        }


class InvariantSystem:
    """Ordered homogeneous invariants with their exact self-pairings."""

    def __init__(self, entries, group_json, provenance):
        self.entries = list(entries)
        self.group_json = group_json
        self.provenance = provenance
        self.verified = False

    @property
    def degrees(self):
        return [e.degree for e in self.entries]

    def polynomials(self):
        return [e.polynomial for e in self.entries]

    def float_normalized(self):
        """Unit-normalized float view: each entry divided by sqrt of its norm."""
        out = []
        for e in self.entries:
            scale = 1.0 / (to_float(e.norm) ** 0.5)
            f = e.polynomial.convert(FLOAT)
            out.append(f.scale(scale))
        return out

    def to_json(self):
        field = self.entries[0].polynomial.field
        return {
            "group": self.group_json,
            "entries": [e.to_json(field) for e in self.entries],
            "provenance": self.provenance,
            "verified": self.verified,
        }

    @classmethod
    def from_polynomials(cls, polys, group_json, provenance):
        """Wrap homogeneous polynomials as a system (no canonicity implied)."""
        return cls(_entries_from_polys(polys), group_json, provenance)

    @classmethod
    def from_json(cls, data):
        entries = []
        for e in data["entries"]:
            poly = Polynomial.from_json(e["poly"])
            norm = poly.field.parse(e["norm"])
            entries.append(InvariantEntry(poly, e["degree"], norm))
        system = cls(entries, data["group"], data["provenance"])
        system.verified = bool(data.get("verified", False))
        return system

    def latex(self):
        lines = []
        for i, e in enumerate(self.entries, start=1):
            lines.append(f"f_{{{i}}} = {e.polynomial.latex()}")
        return lines


def _entries_from_polys(polys):
    """Normalize each member to a unit coefficient, then record its norm.

    Scaling an entry never affects canonicity; pinning the graded-lex leading
    coefficient makes the output representative (and its JSON) deterministic.
    Float polynomials first shed roundoff dust (relative 1e-12) and are pinned
    at their largest coefficient instead, which a noise term can never be.
    """
    out = []
    for p in polys:
        if p.field is FLOAT:
            peak = max(abs(c) for _, c in p.sorted_terms())
            p = Polynomial(p.num_vars, p.field,
                           {e: c for e, c in p.sorted_terms() if abs(c) > 1e-12 * peak})
            lead = max(p.sorted_terms(), key=lambda ec: (abs(ec[1]), ec[0]))[1]
        else:
            lead = p.sorted_terms()[0][1]
        p = p.scale(p.field.one / lead)
        out.append(InvariantEntry(p, p.homogeneous_degree(), apolar_inner(p, p)))
    return out


def _even_d_special_system(group: ReflectionGroup, seeds: SeedSystem,
                           delta: Polynomial) -> list:
    """Type D with even rank: place the monomial x_1*...*x_n directly.

    The two seeds of degree n are mixed into the single combination
    b*h - a*h' with a, b their apolar pairings against the monomial; its
    candidate is automatically orthogonal to the monomial.
    """
    rs = group.root_system
    n = rs.rank
    ell = n // 2
    field = rs.field
    monomial = Polynomial(rs.num_vars, field, {(1,) * rs.num_vars: 1})
    polys = []
    repeated = [i for i, d in enumerate(seeds.degrees) if d == n]
    if len(repeated) != 2:
        raise RuntimeError("expected exactly two seeds of the repeated degree")
    i_low, i_high = repeated
    a = apolar_inner(monomial, seeds.polynomials[i_low])
    b = apolar_inner(monomial, seeds.polynomials[i_high])
    if field.is_zero(a) and field.is_zero(b):
        raise RuntimeError(
            "both repeated-degree seeds pair to zero against the monomial; "
            "the seed system cannot be a valid basis"
        )
    combo = seeds.polynomials[i_low].scale(b) - seeds.polynomials[i_high].scale(a)
    for i, h in enumerate(seeds.polynomials):
        if i == i_low:
            g = euler_contract(transfer_form(differential(combo), delta))
            if g.is_zero():
                raise RuntimeError("the mixed repeated-degree candidate collapsed to zero")
            polys.append(g)
        elif i == i_high:
            polys.append(monomial)
        else:
            g = euler_contract(transfer_form(differential(h), delta))
            if g.is_zero():
                raise RuntimeError("a candidate collapsed to zero")
            polys.append(g)
    return polys


def canonical_system(group: ReflectionGroup, seeds: SeedSystem | None = None,
                     mode: str = "generic", delta: Polynomial | None = None) -> InvariantSystem:
    """Build a canonical system for the group.

    ``mode`` selects the construction path:

    * ``generic``: candidates followed by graded Gram-Schmidt (always valid),
    * ``refined``: skip the orthogonalization when the degrees are distinct;
      for D_n with even n, insert the monomial x_1*...*x_n directly.

    Both paths produce systems with identical per-degree spans.
    """
    rs = group.root_system
    if seeds is None:
        seeds = seed_invariants(group)
    if delta is None:
        delta = antiinvariant(rs)
    degrees = list(seeds.degrees)
    if mode == "generic":
        polys = orthogonalize_graded(candidate_invariants(seeds, delta))
        provenance = "generic"
    elif mode == "refined":
        if len(set(degrees)) == len(degrees):
            polys = candidate_invariants(seeds, delta)
            provenance = "refined-distinct-degrees"
        elif rs.type_label == "D" and rs.rank % 2 == 0:
            polys = _even_d_special_system(group, seeds, delta)
            provenance = "refined-even-d"
        else:
            raise ValueError(
                f"no refined path for {rs.describe()}: repeated degrees outside type D"
            )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    system = InvariantSystem(_entries_from_polys(polys), rs.to_json(), provenance)
    return system


@dataclass
class PairFailure:
    i: int
    j: int
    pairing: Polynomial

    def describe(self):
        return f"(f_{self.i + 1}, f_{self.j + 1}) = {self.pairing} != 0"


@dataclass
class VerificationReport:
    passed: bool
    pair_failures: list
    norm_failures: list
    invariance_failures: list
    degree_ok: bool
    norms: list
    tolerance: float | None

    def summary(self):
        if self.passed:
            return "canonical: all cross-pairings vanish, all self-pairings positive"
        issues = []
        for f in self.pair_failures:
            issues.append(f.describe())
        for i in self.norm_failures:
            issues.append(f"(f_{i + 1}, f_{i + 1}) is not a positive constant")
        for i, g in self.invariance_failures:
            issues.append(f"f_{i + 1} is not invariant under generator {g + 1}")
        if not self.degree_ok:
            issues.append("degrees do not match the classical table")
        return "; ".join(issues)

    def to_json(self, field):
        return {
            "passed": self.passed,
            "pair_failures": [
                {"i": f.i, "j": f.j, "pairing": f.pairing.to_json()}
                for f in self.pair_failures
            ],
            "norm_failures": self.norm_failures,
            "invariance_failures": self.invariance_failures,
            "degree_ok": self.degree_ok,
            "norms": [field.format(n) for n in self.norms],
            "tolerance": self.tolerance,
        }


def _max_abs_coefficient(p: Polynomial) -> float:
    if p.is_zero():
        return 0.0
    return max(abs(to_float(c)) for _, c in p.sorted_terms())


FLOAT_VERIFY_TOLERANCE = 1e-8


def verify_canonical(system: InvariantSystem, group: ReflectionGroup,
                     tolerance: float | None = None) -> VerificationReport:
    """Check every ordered pair (i, j) of the defining conditions.

    For exact fields the cross-pairings must vanish identically (including
    i < j, where the pairing is a positive-degree polynomial).  For the float
    backend the system is unit-normalized first and coefficients are compared
    against a tolerance.
    """
    rs = group.root_system
    exact = rs.field is not FLOAT
    if not exact and tolerance is None:
        tolerance = FLOAT_VERIFY_TOLERANCE

    if exact:
        polys = system.polynomials()
    else:
        polys = system.float_normalized()

    pair_failures = []
    norm_failures = []
    norms = []
    n = len(polys)
    for i in range(n):
        for j in range(n):
            pairing = apply_diff(polys[i], polys[j])
            if i == j:
                c = pairing.constant_term()
                norms.append(c)
                residual = pairing - Polynomial.constant(c, pairing.num_vars, pairing.field)
                if exact:
                    ok = residual.is_zero() and is_positive(c)
                else:
                    ok = (
                        _max_abs_coefficient(residual) <= tolerance
                        and abs(to_float(c) - 1.0) <= tolerance
                    )
                if not ok:
                    norm_failures.append(i)
            else:
                bad = (not pairing.is_zero()) if exact else (
                    _max_abs_coefficient(pairing) > tolerance
                )
                if bad:
                    pair_failures.append(PairFailure(i, j, pairing))

    invariance_failures = []
    originals = system.polynomials()
    for i, p in enumerate(originals):
        for gi, gen in enumerate(group.generators):
            moved = group_action(gen, p)
            if exact:
                ok = moved == p
            else:
                ok = _max_abs_coefficient(moved - p) <= tolerance * max(
                    1.0, _max_abs_coefficient(p)
                )
            if not ok:
                invariance_failures.append((i, gi))

    degree_ok = system.degrees == list(rs.degrees)
    passed = (
        not pair_failures and not norm_failures and not invariance_failures and degree_ok
    )
    system.verified = bool(passed)
    return VerificationReport(
        passed=passed,
        pair_failures=pair_failures,
        norm_failures=norm_failures,
        invariance_failures=invariance_failures,
        degree_ok=degree_ok,
        norms=norms,
        tolerance=tolerance,
    )


