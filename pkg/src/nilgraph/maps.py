"""Validated endomorphisms and skew derivations of finite rings.

Maps are total tables of element indices.  ``validate_endo`` and
``validate_derivation`` check the defining identities exhaustively and
reject bad tables with a witness pair.  ``compatibility_report`` decides
the compatibility and rigidity predicates used to gate the skew-extension
machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import (LeibnizFailsError, NotAdditiveError, NotMultiplicativeError,
                     UnitNotFixedError)
from .rings import ElementSets, FiniteRing, element_sets


@dataclass(frozen=True)
class RingMap:
    """A unital ring endomorphism given by its image table."""

    ring: FiniteRing
    table: tuple[int, ...]
    is_endo: bool
    is_injective: bool
    is_bijective: bool
    name: str = ""

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __repr__(self) -> str:
        return f"RingMap({self.name or self.table}, ring={self.ring.label})"


@dataclass(frozen=True)
class DerivationMap:
    """A skew derivation d with d(ab) = sigma(a)d(b) + d(a)b."""

    ring: FiniteRing
    sigma: RingMap
    table: tuple[int, ...]
    name: str = ""

    def __call__(self, x: int) -> int:
        return self.table[x]

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.table)


def validate_endo(ring: FiniteRing, table: Sequence[int], name: str = "") -> RingMap:
    """Check a table is a unital endomorphism; raises with a witness otherwise."""
    tab = tuple(int(x) for x in table)
    if len(tab) != ring.order:
        raise ValueError(f"map table length {len(tab)} does not match order {ring.order}")
    for x in tab:
        if x < 0 or x >= ring.order:
            raise ValueError(f"map image {x} out of range")
    if tab[ring.one] != ring.one:
        raise UnitNotFixedError("map does not fix the identity", (ring.one, tab[ring.one]))
    for a in ring.elements():
        for b in ring.elements():
            if tab[ring.add(a, b)] != ring.add(tab[a], tab[b]):
                raise NotAdditiveError("map is not additive", (a, b))
            if tab[ring.mul(a, b)] != ring.mul(tab[a], tab[b]):
                raise NotMultiplicativeError("map is not multiplicative", (a, b))
    injective = len(set(tab)) == ring.order
    return RingMap(ring=ring, table=tab, is_endo=True,
                   is_injective=injective, is_bijective=injective, name=name)


def validate_derivation(ring: FiniteRing, sigma: RingMap,
                        table: Sequence[int], name: str = "") -> DerivationMap:
    """Check additivity and the twisted Leibniz rule; raises with a witness."""
    if not sigma.is_endo:
        raise ValueError("derivation requires a validated endomorphism")
    tab = tuple(int(x) for x in table)
    if len(tab) != ring.order:
        raise ValueError(f"derivation table length {len(tab)} does not match order {ring.order}")
    for a in ring.elements():
        for b in ring.elements():
            if tab[ring.add(a, b)] != ring.add(tab[a], tab[b]):
                raise NotAdditiveError("derivation is not additive", (a, b))
            lhs = tab[ring.mul(a, b)]
            rhs = ring.add(ring.mul(sigma(a), tab[b]), ring.mul(tab[a], b))
            if lhs != rhs:
                raise LeibnizFailsError("Leibniz rule fails", (a, b))
    # d(1) = d(1*1) = sigma(1)d(1) + d(1) forces d(1) = 0.
    assert tab[ring.one] == 0
    return DerivationMap(ring=ring, sigma=sigma, table=tab, name=name)


def identity_map(ring: FiniteRing) -> RingMap:
    return RingMap(ring=ring, table=tuple(ring.elements()), is_endo=True,
                   is_injective=True, is_bijective=True, name="identity")


def zero_derivation(ring: FiniteRing, sigma: RingMap | None = None) -> DerivationMap:
    if sigma is None:
        sigma = identity_map(ring)
    return DerivationMap(ring=ring, sigma=sigma, table=(0,) * ring.order, name="zero")


def frobenius_map(ring: FiniteRing) -> RingMap:
    """The p-th power map for a ring of prime characteristic p."""
    p = ring.characteristic()
    if any(p % d == 0 for d in range(2, p)):
        raise ValueError(f"frobenius preset needs prime characteristic, got {p}")
    table = [ring.power(a, p) for a in ring.elements()]
    return validate_endo(ring, table, name="frobenius")


def _split_pair_label(label: str) -> tuple[str, str] | None:
    if not (label.startswith("(") and label.endswith(")")):
        return None
    depth = 0
    for i, ch in enumerate(label[1:-1], start=1):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            return label[1:i], label[i + 1:-1]
    return None


def swap_map(ring: FiniteRing) -> RingMap:
    """Coordinate swap on a two-factor product ring, resolved through labels."""
    table = []
    for a in ring.elements():
        parts = _split_pair_label(ring.label_of(a))
        if parts is None:
            raise ValueError("swap preset requires a two-factor product ring")
        table.append(ring.element_by_label(f"({parts[1]},{parts[0]})"))
    return validate_endo(ring, table, name="swap")


def compose(outer: RingMap, inner: RingMap) -> RingMap:
    table = tuple(outer.table[inner.table[x]] for x in inner.ring.elements())
    return RingMap(ring=inner.ring, table=table,
                   is_endo=outer.is_endo and inner.is_endo,
                   is_injective=outer.is_injective and inner.is_injective,
                   is_bijective=outer.is_bijective and inner.is_bijective,
                   name=f"{outer.name or 'f'}.{inner.name or 'g'}")


def composite_power_table(sigma: Sequence[RingMap], alpha: Sequence[int]) -> tuple[int, ...]:
    """Table of the ordered composite sigma_1^a1 after ... after sigma_n^an."""
    ring = sigma[0].ring
    table = list(range(ring.order))
    # Apply the last variable's map first, matching the ordered composition.
    for i in reversed(range(len(sigma))):
        for _ in range(alpha[i]):
            t = sigma[i].table
            table = [t[x] for x in table]
    return tuple(table)


def _distinct_power_tables(m: RingMap) -> list[tuple[int, ...]]:
    tables = []
    seen = set()
    cur = tuple(m.ring.elements())
    while cur not in seen:
        seen.add(cur)
        tables.append(cur)
        cur = tuple(m.table[x] for x in cur)
    return tables


def composite_closure(sigma: Sequence[RingMap]) -> list[tuple[int, ...]]:
    """All distinct tables of ordered composites over every multi-index.

    Finite rings make this set finite: each generator's forward power
    orbit is finite, and ordered composites are products of one power per
    generator.
    """
    ring = sigma[0].ring
    tables = {tuple(ring.elements())}
    for m in sigma:
        powers = _distinct_power_tables(m)
        tables = {tuple(t[p[x]] for x in ring.elements())
                  for t in tables for p in powers}
    return sorted(tables)


@dataclass(frozen=True)
class CompatReport:
    """Compatibility and rigidity predicates for a family of maps."""

    sigma_compatible: bool
    delta_compatible: bool
    sigma_rigid: bool
    weak_sigma_compatible: bool
    weak_delta_compatible: bool
    witnesses: dict = field(default_factory=dict)


def compatibility_report(ring: FiniteRing, sigma: Sequence[RingMap],
                         delta: Sequence[DerivationMap],
                         sets: ElementSets | None = None) -> CompatReport:
    """Decide the compatibility predicates exhaustively over element pairs.

    The strict and weak compatibility conditions quantify over all
    multi-indices, but checking each generator suffices: if the condition
    links (a, b) to (a, image(b)) for every single generator map, then
    induction on the composite length extends it to every ordered
    composite.  Composites up to length three are spot-checked in the
    test suite against this reduction.  Rigidity does not reduce to
    generators the same way, so it is decided over the full (finite)
    closure of ordered composites.
    """
    if sets is None:
        sets = element_sets(ring)
    nil = sets.nil
    witnesses: dict = {}

    sigma_compatible = True
    for k, m in enumerate(sigma):
        for a in ring.elements():
            for b in ring.elements():
                if (ring.mul(a, b) == 0) != (ring.mul(a, m(b)) == 0):
                    sigma_compatible = False
                    witnesses.setdefault("sigma_compatible", (k + 1, a, b))
    delta_compatible = True
    for k, d in enumerate(delta):
        for a in ring.elements():
            for b in ring.elements():
                if ring.mul(a, b) == 0 and ring.mul(a, d(b)) != 0:
                    delta_compatible = False
                    witnesses.setdefault("delta_compatible", (k + 1, a, b))

    sigma_rigid = True
    for table in composite_closure(sigma):
        for a in ring.elements():
            if a != 0 and ring.mul(a, table[a]) == 0:
                sigma_rigid = False
                witnesses.setdefault("sigma_rigid", (a,))

    weak_sigma = True
    for k, m in enumerate(sigma):
        for a in ring.elements():
            for b in ring.elements():
                if (ring.mul(a, b) in nil) != (ring.mul(a, m(b)) in nil):
                    weak_sigma = False
                    witnesses.setdefault("weak_sigma_compatible", (k + 1, a, b))
    weak_delta = True
    for k, d in enumerate(delta):
        for a in ring.elements():
            for b in ring.elements():
                if ring.mul(a, b) in nil and ring.mul(a, d(b)) not in nil:
                    weak_delta = False
                    witnesses.setdefault("weak_delta_compatible", (k + 1, a, b))

    return CompatReport(sigma_compatible=sigma_compatible,
                        delta_compatible=delta_compatible,
                        sigma_rigid=sigma_rigid,
                        weak_sigma_compatible=weak_sigma,
                        weak_delta_compatible=weak_delta,
                        witnesses=witnesses)
