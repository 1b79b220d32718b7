"""Skew PBW extension arithmetic in normal form.

An extension ``A`` over a finite base ring ``R`` is presented by, for each
generator ``x_i``, an injective endomorphism ``sigma_i`` and a skew
derivation ``delta_i`` governing ``x_i r = sigma_i(r) x_i + delta_i(r)``,
plus for each pair ``i < j`` a nonzero element ``d_ij`` and affine lower
terms governing ``x_j x_i = d_ij x_i x_j + r_0 + sum_k r_k x_k``.

Elements of ``A`` are kept in normal form: a finite map from exponent
vectors to nonzero left coefficients over the standard monomials
``x_1^a1 ... x_n^an``.  Multiplication rewrites out-of-order junctions
``x_j x_i`` (j > i) and pushes scalars left through monomials one
generator at a time.  Each rewrite either keeps the total degree and
removes one inversion or strictly drops the degree, so the rewriting
terminates; results are memoized per spec.

The monomial order is fixed: degree first, ties broken lexicographically
with ``x_1`` largest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (AssociativityFailError, DegreeCapExceeded, InvalidDeltaError,
                     InvalidSigmaError, PreconditionUnverified, ZeroQError)
from .maps import (CompatReport, DerivationMap, RingMap, compatibility_report,
                   composite_power_table, identity_map, zero_derivation)
from .rings import CapExceeded, ElementSets, FiniteRing, element_sets, radicals

DEFAULT_DEGREE_CAP = 12
DEFAULT_POWER_BUDGET = 16


def deglex_key(alpha: tuple[int, ...]) -> tuple:
    """Sort key for the fixed monomial order: total degree, then x_1 > x_2 > ..."""
    return (sum(alpha), alpha)


class SPBWSpec:
    """Defining data of a skew PBW extension over a finite ring."""

    __slots__ = ("label", "base", "n", "sigma", "delta", "q", "lower", "degree_cap",
                 "_mts_cache", "_mono_cache", "_nil_flags", "_base_sets")

    def __init__(self, label: str, base: FiniteRing, n: int,
                 sigma: Sequence[RingMap] | None = None,
                 delta: Sequence[DerivationMap] | None = None,
                 q: Mapping[tuple[int, int], int] | None = None,
                 lower: Mapping[tuple[int, int], Sequence[int]] | None = None,
                 degree_cap: int = DEFAULT_DEGREE_CAP):
        if n < 1:
            raise ValueError("need at least one generator")
        self.label = label
        self.base = base
        self.n = n
        if sigma is None:
            sigma = [identity_map(base)] * n
        sigma = tuple(sigma)
        if len(sigma) != n:
            raise InvalidSigmaError(f"expected {n} endomorphisms, got {len(sigma)}")
        for i, m in enumerate(sigma):
            if m.ring is not base:
                raise InvalidSigmaError(f"sigma_{i + 1} is defined over a different ring")
            if not (m.is_endo and m.is_injective):
                raise InvalidSigmaError(f"sigma_{i + 1} must be an injective endomorphism")
        self.sigma = sigma
        if delta is None:
            delta = [zero_derivation(base, sigma[i]) for i in range(n)]
        delta = tuple(delta)
        if len(delta) != n:
            raise InvalidDeltaError(f"expected {n} derivations, got {len(delta)}")
        for i, d in enumerate(delta):
            if d.ring is not base:
                raise InvalidDeltaError(f"delta_{i + 1} is defined over a different ring")
            if d.sigma.table != sigma[i].table:
                raise InvalidDeltaError(f"delta_{i + 1} is not paired with sigma_{i + 1}")
        self.delta = delta

        q_norm: dict[tuple[int, int], int] = {}
        lower_norm: dict[tuple[int, int], tuple[int, ...]] = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                d_ij = base.one if q is None else int(q.get((i, j), base.one))
                if d_ij == 0:
                    raise ZeroQError(f"d_{i},{j} must be nonzero")
                if d_ij < 0 or d_ij >= base.order:
                    raise ValueError(f"d_{i},{j} = {d_ij} is not a base ring element")
                q_norm[(i, j)] = d_ij
                terms = (0,) * (n + 1) if lower is None else \
                    tuple(int(x) for x in lower.get((i, j), (0,) * (n + 1)))
                if len(terms) != n + 1:
                    raise ValueError(f"lower terms for ({i},{j}) must have length {n + 1}")
                for x in terms:
                    if x < 0 or x >= base.order:
                        raise ValueError(f"lower term {x} is not a base ring element")
                lower_norm[(i, j)] = terms
        self.q = q_norm
        self.lower = lower_norm
        if degree_cap < 1:
            raise ValueError("degree cap must be positive")
        self.degree_cap = degree_cap
        self._mts_cache: dict = {}
        self._mono_cache: dict = {}
        self._nil_flags: tuple[bool, str] | None = None
        self._base_sets: ElementSets | None = None

    def __repr__(self) -> str:
        return f"SPBWSpec({self.label!r}, base={self.base.label}, n={self.n})"

    def relation(self, i: int, j: int) -> tuple[int, tuple[int, ...]]:
        """Rewrite data for x_j x_i with 1-based i < j."""
        return self.q[(i, j)], self.lower[(i, j)]

    def with_degree_cap(self, degree_cap: int) -> "SPBWSpec":
        return SPBWSpec(self.label, self.base, self.n, self.sigma, self.delta,
                        self.q, self.lower, degree_cap=degree_cap)

    @property
    def is_bijective(self) -> bool:
        units_ok = all(self.base.is_unit(d) for d in self.q.values())
        return units_ok and all(m.is_bijective for m in self.sigma)

    def base_sets(self) -> ElementSets:
        if self._base_sets is None:
            self._base_sets = element_sets(self.base)
        return self._base_sets


class SkewPoly:
    """An extension element in normal form: exponent vector -> nonzero coefficient."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: SPBWSpec, terms: Mapping[tuple[int, ...], int]):
        self.spec = spec
        clean = {}
        for alpha, c in terms.items():
            alpha = tuple(int(e) for e in alpha)
            if len(alpha) != spec.n or any(e < 0 for e in alpha):
                raise ValueError(f"bad exponent vector {alpha}")
            if sum(alpha) > spec.degree_cap:
                raise DegreeCapExceeded(sum(alpha), spec.degree_cap, "term construction")
            c = int(c)
            if c < 0 or c >= spec.base.order:
                raise ValueError(f"coefficient {c} is not a base ring element")
            if c != 0:
                clean[alpha] = c
        self._terms = clean

    @classmethod
    def zero(cls, spec: SPBWSpec) -> "SkewPoly":
        return cls(spec, {})

    @classmethod
    def one(cls, spec: SPBWSpec) -> "SkewPoly":
        return cls.constant(spec, spec.base.one)

    @classmethod
    def constant(cls, spec: SPBWSpec, r: int) -> "SkewPoly":
        return cls(spec, {(0,) * spec.n: r})

    @classmethod
    def monomial(cls, spec: SPBWSpec, alpha: Sequence[int], coeff: int | None = None) -> "SkewPoly":
        if coeff is None:
            coeff = spec.base.one
        return cls(spec, {tuple(alpha): coeff})

    @classmethod
    def gen(cls, spec: SPBWSpec, i: int) -> "SkewPoly":
        """The generator x_i, 1-based."""
        alpha = [0] * spec.n
        alpha[i - 1] = 1
        return cls.monomial(spec, alpha)

    def terms(self) -> Iterable[tuple[tuple[int, ...], int]]:
        return self._terms.items()

    def coefficient(self, alpha: Sequence[int]) -> int:
        return self._terms.get(tuple(alpha), 0)

    def coefficients(self) -> list[int]:
        return list(self._terms.values())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(a) for a in self._terms)

    def key(self) -> tuple:
        return tuple(sorted(self._terms.items()))

    def __eq__(self, other) -> bool:
        return (isinstance(other, SkewPoly) and self.spec is other.spec
                and self._terms == other._terms)

    def __hash__(self) -> int:
        return hash((id(self.spec), self.key()))

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check_same_spec(other)
        out = dict(self._terms)
        add = self.spec.base.add
        for alpha, c in other._terms.items():
            s = add(out.get(alpha, 0), c)
            if s == 0:
                out.pop(alpha, None)
            else:
                out[alpha] = s
        return SkewPoly(self.spec, out)

    def __neg__(self) -> "SkewPoly":
        neg = self.spec.base.neg
        return SkewPoly(self.spec, {a: neg(c) for a, c in self._terms.items()})

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return multiply(self.spec, self, other)

    def scale_left(self, r: int) -> "SkewPoly":
        mul = self.spec.base.mul
        return SkewPoly(self.spec, {a: mul(r, c) for a, c in self._terms.items()})

    def _check_same_spec(self, other: "SkewPoly") -> None:
        if self.spec is not other.spec:
            raise ValueError("operands belong to different extension specs")

    def __repr__(self) -> str:
        from .polytext import format_poly
        return format_poly(self)


@dataclass(frozen=True)
class LeadingData:
    """Leading monomial data under the fixed order.

    For the zero polynomial the conventional values lm = lc = lt = 0 are
    used and deg is 0.
    """

    lm: tuple[int, ...] | int
    lc: int
    lt: tuple[int, tuple[int, ...]] | int
    deg: int
    exp: tuple[int, ...] | int


def leading_data(spec: SPBWSpec, f: SkewPoly) -> LeadingData:
    if f.is_zero:
        return LeadingData(lm=0, lc=0, lt=0, deg=0, exp=0)
    alpha = max(f._terms, key=deglex_key)
    c = f._terms[alpha]
    return LeadingData(lm=alpha, lc=c, lt=(c, alpha), deg=f.degree(), exp=alpha)


# ---------------------------------------------------------------------------
# Normal-form arithmetic
# ---------------------------------------------------------------------------

def _merge_term(acc: dict, ring: FiniteRing, alpha: tuple[int, ...], c: int) -> None:
    s = ring.add(acc.get(alpha, 0), c)
    if s == 0:
        acc.pop(alpha, None)
    else:
        acc[alpha] = s


def _mts(spec: SPBWSpec, alpha: tuple[int, ...], r: int) -> dict:
    """Normal form of x^alpha * r as a term dict; degree never grows."""
    if r == 0:
        return {}
    if not any(alpha):
        return {alpha: r}
    cached = spec._mts_cache.get((alpha, r))
    if cached is not None:
        return dict(cached)
    # Peel the last generator: x^alpha = x^alpha' x_i with i maximal.
    i = max(k for k, e in enumerate(alpha) if e > 0)
    alpha_p = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
    head = _mts(spec, alpha_p, spec.sigma[i](r))
    out: dict = {}
    for beta, c in head.items():
        # beta has no support after position i, so appending x_i stays sorted.
        out[beta[:i] + (beta[i] + 1,) + beta[i + 1:]] = c
    tail_r = spec.delta[i](r)
    if tail_r != 0:
        for beta, c in _mts(spec, alpha_p, tail_r).items():
            _merge_term(out, spec.base, beta, c)
    spec._mts_cache[(alpha, r)] = tuple(out.items())
    return out


def _mono_mul(spec: SPBWSpec, gamma: tuple[int, ...], beta: tuple[int, ...]) -> dict:
    """Normal form of x^gamma * x^beta as a term dict.

    When the junction is in order the product is x^(gamma+beta).  Otherwise
    the defining rewrite is applied at the junction; the leading summand
    keeps the degree with one inversion fewer and every other summand drops
    the degree, which bounds the recursion.
    """
    cached = spec._mono_cache.get((gamma, beta))
    if cached is not None:
        return dict(cached)
    j = max((k for k, e in enumerate(gamma) if e > 0), default=None)
    i = min((k for k, e in enumerate(beta) if e > 0), default=None)
    if j is None or i is None or j <= i:
        out = {tuple(g + b for g, b in zip(gamma, beta)): spec.base.one}
        spec._mono_cache[(gamma, beta)] = tuple(out.items())
        return out
    # Junction x_j x_i with j > i (0-based here, relation keys are 1-based).
    d, lower = spec.relation(i + 1, j + 1)
    gamma_p = gamma[:j] + (gamma[j] - 1,) + gamma[j + 1:]
    beta_p = beta[:i] + (beta[i] - 1,) + beta[i + 1:]
    acc: dict = {}
    eij = tuple((1 if k in (i, j) else 0) for k in range(spec.n))
    _poly_mul_into(acc, spec, _mts(spec, gamma_p, d), _mono_mul(spec, eij, beta_p))
    r0 = lower[0]
    if r0 != 0:
        _poly_mul_into(acc, spec, _mts(spec, gamma_p, r0), {beta_p: spec.base.one})
    for k in range(spec.n):
        rk = lower[k + 1]
        if rk != 0:
            ek = tuple((1 if t == k else 0) for t in range(spec.n))
            _poly_mul_into(acc, spec, _mts(spec, gamma_p, rk), _mono_mul(spec, ek, beta_p))
    spec._mono_cache[(gamma, beta)] = tuple(acc.items())
    return acc


def _poly_mul_into(acc: dict, spec: SPBWSpec, fterms: Mapping, gterms: Mapping) -> None:
    ring = spec.base
    rmul = ring.mul
    for alpha, a in fterms.items():
        for beta, b in gterms.items():
            for gamma, c in _mts(spec, alpha, b).items():
                ac = rmul(a, c)
                if ac == 0:
                    continue
                for eps, e in _mono_mul(spec, gamma, beta).items():
                    v = rmul(ac, e)
                    if v != 0:
                        _merge_term(acc, ring, eps, v)


def monomial_times_scalar(spec: SPBWSpec, alpha: Sequence[int], r: int) -> SkewPoly:
    """Normal form of x^alpha * r.

    The leading coefficient is the ordered composite of the endomorphisms
    applied to r, and everything else has strictly smaller degree.
    """
    alpha = tuple(int(e) for e in alpha)
    if len(alpha) != spec.n or any(e < 0 for e in alpha):
        raise ValueError(f"bad exponent vector {alpha}")
    if sum(alpha) > spec.degree_cap:
        raise DegreeCapExceeded(sum(alpha), spec.degree_cap, "monomial_times_scalar")
    if r < 0 or r >= spec.base.order:
        raise ValueError(f"{r} is not a base ring element")
    out = _mts(spec, alpha, r)
    assert all(sum(b) <= sum(alpha) for b in out), "scalar push must not raise degree"
    return SkewPoly(spec, out)


def multiply(spec: SPBWSpec, f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product in normal form; degree of the result is at most deg f + deg g."""
    if f.spec is not spec or g.spec is not spec:
        raise ValueError("operands belong to a different extension spec")
    if f.is_zero or g.is_zero:
        return SkewPoly.zero(spec)
    predicted = f.degree() + g.degree()
    if predicted > spec.degree_cap:
        raise DegreeCapExceeded(predicted, spec.degree_cap, "multiply")
    acc: dict = {}
    _poly_mul_into(acc, spec, f._terms, g._terms)
    return SkewPoly(spec, acc)


def power(spec: SPBWSpec, f: SkewPoly, k: int) -> SkewPoly:
    """k-th power by repeated multiplication; the zeroth power is 1."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if k * f.degree() > spec.degree_cap:
        raise DegreeCapExceeded(k * f.degree(), spec.degree_cap, "power")
    out = SkewPoly.one(spec)
    for _ in range(k):
        out = multiply(spec, out, f)
    return out


NILPOTENT = "nilpotent"
NOT_NILPOTENT_WITHIN = "not_nilpotent_within"
CAP_EXCEEDED = "cap_exceeded"


@dataclass(frozen=True)
class NilpotencyProbe:
    """Outcome of direct nilpotency probing by repeated powering."""

    status: str
    index: int | None = None
    checked: int | None = None

    @property
    def is_nilpotent(self) -> bool:
        return self.status == NILPOTENT


def is_nilpotent_direct(spec: SPBWSpec, f: SkewPoly, budget: int = DEFAULT_POWER_BUDGET) -> NilpotencyProbe:
    """Probe nilpotency by computing powers up to the budget.

    Returns a tri-state: nilpotent with its index, not nilpotent within
    the budget, or cap-limited when the degree cap stops the powering.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    acc = f
    for k in range(1, budget + 1):
        if acc.is_zero:
            return NilpotencyProbe(status=NILPOTENT, index=k)
        if k == budget:
            break
        try:
            acc = multiply(spec, acc, f)
        except DegreeCapExceeded:
            return NilpotencyProbe(status=CAP_EXCEEDED, checked=k)
    return NilpotencyProbe(status=NOT_NILPOTENT_WITHIN, checked=budget)


def nil_criterion_flags(spec: SPBWSpec) -> tuple[bool, str]:
    """Verify the hypotheses under which coefficient nilpotency is exact.

    The coefficient criterion holds when the base ring is weakly
    compatible with the spec's maps and NI (its upper nilradical equals
    its nilpotent set).  The verification result is cached on the spec.
    """
    if spec._nil_flags is not None:
        return spec._nil_flags
    try:
        sets = spec.base_sets()
        rad = radicals(spec.base)
    except CapExceeded as exc:
        spec._nil_flags = (False, f"base ring hypotheses unverifiable: {exc}")
        return spec._nil_flags
    ni = rad.upper_nilradical == sets.nil
    report = compatibility_report(spec.base, spec.sigma, spec.delta, sets)
    if not (report.weak_sigma_compatible and report.weak_delta_compatible):
        reason = "base ring is not weakly compatible with the spec maps"
        if "weak_sigma_compatible" in report.witnesses:
            reason += f" (witness {report.witnesses['weak_sigma_compatible']})"
        spec._nil_flags = (False, reason)
    elif not ni:
        spec._nil_flags = (False, "base ring is not NI (upper nilradical differs from nilpotents)")
    else:
        spec._nil_flags = (True, "")
    return spec._nil_flags


def _require_nil_criterion(spec: SPBWSpec) -> None:
    ok, reason = nil_criterion_flags(spec)
    if not ok:
        raise PreconditionUnverified(reason)


def is_nilpotent_coeff(spec: SPBWSpec, f: SkewPoly) -> bool:
    """Exact nilpotency test: every coefficient nilpotent in the base ring.

    Only valid under the verified base hypotheses; raises
    PreconditionUnverified when those are absent or false.
    """
    _require_nil_criterion(spec)
    nil = spec.base_sets().nil
    return all(c in nil for c in f.coefficients())


def nil_adjacent(spec: SPBWSpec, f: SkewPoly, g: SkewPoly) -> bool:
    """Whether the product f*g is nilpotent, via the coefficient criterion."""
    if f == g:
        raise ValueError("adjacency is defined for distinct elements")
    _require_nil_criterion(spec)
    nil = spec.base_sets().nil
    prod = multiply(spec, f, g)
    return all(c in nil for c in prod.coefficients())


# ---------------------------------------------------------------------------
# Spec validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecValidation:
    passed: bool
    checks: tuple[str, ...]
    failure: str = ""
    witness: tuple = ()


def validate_spec(spec: SPBWSpec, scalar_pool: Sequence[int] | None = None) -> SpecValidation:
    """Re-check the defining data and spot-check associativity.

    The construction already enforces map validity and nonzero d's; the
    associativity sweep over a bounded pool of generators and scalars is
    what catches inconsistent user-provided rewrite data.  The engine
    trusts the data beyond this bounded check.
    """
    checks = []
    for i, m in enumerate(spec.sigma):
        if not (m.is_endo and m.is_injective):
            return SpecValidation(False, tuple(checks), f"sigma_{i + 1} invalid", ())
    checks.append("sigma maps injective endomorphisms")
    for i, d in enumerate(spec.delta):
        if d.sigma.table != spec.sigma[i].table:
            return SpecValidation(False, tuple(checks), f"delta_{i + 1} not paired", ())
    checks.append("delta maps paired with sigma maps")
    if any(d == 0 for d in spec.q.values()):
        return SpecValidation(False, tuple(checks), "zero d coefficient", ())
    checks.append("d coefficients nonzero")

    if scalar_pool is None:
        if spec.base.order <= 8:
            scalar_pool = list(spec.base.elements())
        else:
            scalar_pool = list(range(8))
    pool = [SkewPoly.constant(spec, r) for r in scalar_pool]
    pool += [SkewPoly.gen(spec, i) for i in range(1, spec.n + 1)]
    for u in pool:
        for v in pool:
            uv = multiply(spec, u, v)
            for w in pool:
                left = multiply(spec, uv, w)
                right = multiply(spec, u, multiply(spec, v, w))
                if left != right:
                    return SpecValidation(False, tuple(checks),
                                          "associativity fails on the spot-check pool",
                                          (repr(u), repr(v), repr(w)))
    checks.append(f"associativity spot-check over {len(pool)}^3 products")
    return SpecValidation(True, tuple(checks))


def require_valid(spec: SPBWSpec) -> None:
    report = validate_spec(spec)
    if not report.passed:
        raise AssociativityFailError(report.failure, report.witness)
