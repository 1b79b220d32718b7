"""Finite unital rings given by Cayley tables, and their distinguished subsets.

Elements are dense indices ``0 .. order-1`` with index 0 the additive
identity and index 1 the multiplicative identity.  All structure is
table-driven: ``add_table[a][b]`` and ``mul_table[a][b]`` give element
indices.  Every constructor verifies the full ring axioms exhaustively
(vectorized with numpy), so a ``FiniteRing`` that exists is a ring.

Constructors provided here: integers mod n, direct products, matrix
rings over a commutative base, and quotients of a univariate polynomial
ring by a monic modulus.  On top of those, this module computes the
classical distinguished subsets (nilpotents, zero divisors, units,
nilpotent-annihilator set), enumerates two-sided ideals, finds prime and
minimal prime ideals, computes the prime radical and upper nilradical,
and decides the reduced / reversible / symmetric / 2-primal / NI
predicates with explicit counterexample witnesses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded

DEFAULT_ORDER_CAP = 256
DEFAULT_IDEAL_CAP = 64


def _as_table(table: Sequence[Sequence[int]], order: int, what: str) -> tuple[tuple[int, ...], ...]:
    rows = []
    if len(table) != order:
        raise ValueError(f"{what} has {len(table)} rows, expected {order}")
    for i, row in enumerate(table):
        if len(row) != order:
            raise ValueError(f"{what} row {i} has length {len(row)}, expected {order}")
        norm = tuple(int(x) for x in row)
        for x in norm:
            if x < 0 or x >= order:
                raise ValueError(f"{what}[{i}] entry {x} out of range 0..{order - 1}")
        rows.append(norm)
    return tuple(rows)


def _verify_axioms(add: np.ndarray, mul: np.ndarray, label: str) -> None:
    """Exhaustive ring-axiom check; raises ValueError with a witness triple."""
    n = add.shape[0]
    idx = np.arange(n)

    def first_bad(mask3):
        where = np.argwhere(mask3)
        return tuple(int(v) for v in where[0])

    # (add, 0) is an abelian group.
    bad = add[add] != add[:, add]
    if bad.any():
        raise ValueError(f"{label}: addition not associative at {first_bad(bad)}")
    if (add != add.T).any():
        a, b = np.argwhere(add != add.T)[0]
        raise ValueError(f"{label}: addition not commutative at {(int(a), int(b))}")
    if (add[0] != idx).any():
        raise ValueError(f"{label}: index 0 is not the additive identity")
    if not (add == 0).any(axis=1).all():
        a = int(np.argwhere(~(add == 0).any(axis=1))[0][0])
        raise ValueError(f"{label}: element {a} has no additive inverse")

    # Multiplication is associative and distributes over addition.
    bad = mul[mul] != mul[:, mul]
    if bad.any():
        raise ValueError(f"{label}: multiplication not associative at {first_bad(bad)}")
    left = mul[:, add] != add[mul[:, :, None], mul[:, None, :]]
    if left.any():
        raise ValueError(f"{label}: left distributivity fails at {first_bad(left)}")
    right = mul[add] != add[mul[:, None, :], mul[None, :, :]]
    if right.any():
        a, b, c = first_bad(right)
        raise ValueError(f"{label}: right distributivity fails at {(a, b, c)}")

    # Index 1 is a two-sided identity distinct from 0.
    if n < 2:
        raise ValueError(f"{label}: ring must have at least two elements")
    if (mul[1] != idx).any() or (mul[:, 1] != idx).any():
        raise ValueError(f"{label}: index 1 is not a two-sided multiplicative identity")


class FiniteRing:
    """A finite associative unital ring on element indices 0..order-1."""

    __slots__ = ("label", "order", "add_table", "mul_table", "zero", "one",
                 "element_labels", "_label_index", "_neg", "_commutative")

    def __init__(self, label: str, add_table, mul_table,
                 element_labels: Sequence[str] | None = None,
                 order_cap: int = DEFAULT_ORDER_CAP):
        order = len(add_table)
        if order > order_cap:
            raise CapExceeded("ring order cap", order_cap, order)
        self.label = label
        self.order = order
        self.add_table = _as_table(add_table, order, "add_table")
        self.mul_table = _as_table(mul_table, order, "mul_table")
        self.zero = 0
        self.one = 1
        add_np = np.array(self.add_table, dtype=np.int16)
        mul_np = np.array(self.mul_table, dtype=np.int16)
        _verify_axioms(add_np, mul_np, label)
        if element_labels is None:
            element_labels = [str(i) for i in range(order)]
        if len(element_labels) != order:
            raise ValueError("element_labels length does not match order")
        self.element_labels = tuple(str(s) for s in element_labels)
        if len(set(self.element_labels)) != order:
            raise ValueError("element labels must be distinct")
        self._label_index = {s: i for i, s in enumerate(self.element_labels)}
        neg = [0] * order
        for a in range(order):
            neg[a] = self.add_table[a].index(0)
        self._neg = tuple(neg)
        self._commutative = bool((mul_np == mul_np.T).all())

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order})"

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self._neg[b]]

    def power(self, a: int, k: int) -> int:
        out = self.one
        for _ in range(k):
            out = self.mul_table[out][a]
        return out

    def label_of(self, a: int) -> str:
        return self.element_labels[a]

    def element_by_label(self, s: str) -> int:
        try:
            return self._label_index[s]
        except KeyError:
            raise ValueError(f"{self.label}: no element labeled {s!r}") from None

    @property
    def is_commutative(self) -> bool:
        return self._commutative

    def is_unit(self, a: int) -> bool:
        return any(self.mul(a, y) == 1 and self.mul(y, a) == 1 for y in self.elements())

    def characteristic(self) -> int:
        k, acc = 1, self.one
        while acc != 0:
            acc = self.add(acc, self.one)
            k += 1
        return k


def _swap_one_to_index_one(add, mul, labels):
    """Permute indices with a transposition so the identity sits at index 1."""
    order = len(add)
    one = next(i for i in range(order)
               if all(mul[i][x] == x and mul[x][i] == x for x in range(order)))
    if one == 1:
        return add, mul, labels
    # The transposition is an involution, so it is its own inverse.
    perm = list(range(order))
    perm[1], perm[one] = perm[one], perm[1]
    new_add = [[perm[add[perm[a]][perm[b]]] for b in range(order)] for a in range(order)]
    new_mul = [[perm[mul[perm[a]][perm[b]]] for b in range(order)] for a in range(order)]
    new_labels = [labels[perm[a]] for a in range(order)]
    return new_add, new_mul, new_labels


def make_zmod(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """The ring of integers modulo n."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if n > order_cap:
        raise CapExceeded("ring order cap", order_cap, n)
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(f"Z/{n}", add, mul, order_cap=order_cap)


def make_product(left: FiniteRing, right: FiniteRing,
                 order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Direct product with componentwise operations; labels are "(a,b)" pairs."""
    order = left.order * right.order
    if order > order_cap:
        raise CapExceeded("ring order cap", order_cap, order)
    rs = right.order

    def enc(a, b):
        return a * rs + b

    add = [[0] * order for _ in range(order)]
    mul = [[0] * order for _ in range(order)]
    labels = [""] * order
    for a1 in left.elements():
        for b1 in right.elements():
            i = enc(a1, b1)
            labels[i] = f"({left.label_of(a1)},{right.label_of(b1)})"
            for a2 in left.elements():
                for b2 in right.elements():
                    j = enc(a2, b2)
                    add[i][j] = enc(left.add(a1, a2), right.add(b1, b2))
                    mul[i][j] = enc(left.mul(a1, a2), right.mul(b1, b2))
    add, mul, labels = _swap_one_to_index_one(add, mul, labels)
    return FiniteRing(f"{left.label} x {right.label}", add, mul, labels, order_cap=order_cap)


def make_matrix_ring(base: FiniteRing, k: int,
                     order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """The ring of k-by-k matrices over a commutative base ring."""
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    if not base.is_commutative:
        raise ValueError("matrix rings are only constructed over commutative bases")
    order = base.order ** (k * k)
    if order > order_cap:
        raise CapExceeded("ring order cap", order_cap, order)
    b = base.order

    def decode(i):
        entries = []
        for _ in range(k * k):
            i, r = divmod(i, b)
            entries.append(r)
        return entries  # row-major: position p = row * k + col

    def encode(entries):
        out = 0
        for p in reversed(range(k * k)):
            out = out * b + entries[p]
        return out

    def mat_label(entries):
        rows = []
        for r in range(k):
            row = ",".join(base.label_of(entries[r * k + c]) for c in range(k))
            rows.append(f"[{row}]")
        return "[" + ",".join(rows) + "]"

    add = [[0] * order for _ in range(order)]
    mul = [[0] * order for _ in range(order)]
    labels = [""] * order
    mats = [decode(i) for i in range(order)]
    for i, m1 in enumerate(mats):
        labels[i] = mat_label(m1)
        for j, m2 in enumerate(mats):
            add[i][j] = encode([base.add(x, y) for x, y in zip(m1, m2)])
            prod = [0] * (k * k)
            for r in range(k):
                for c in range(k):
                    acc = 0
                    for l in range(k):
                        acc = base.add(acc, base.mul(m1[r * k + l], m2[l * k + c]))
                    prod[r * k + c] = acc
            mul[i][j] = encode(prod)
    add, mul, labels = _swap_one_to_index_one(add, mul, labels)
    return FiniteRing(f"M{k}({base.label})", add, mul, labels, order_cap=order_cap)


def _poly_label(digits: Sequence[int], base: FiniteRing) -> str:
    terms = []
    for e in reversed(range(len(digits))):
        c = digits[e]
        if c == 0:
            continue
        lbl = base.label_of(c)
        if any(ch in lbl for ch in "+,*") and not lbl.startswith(("(", "[")):
            lbl = f"({lbl})"
        if e == 0:
            terms.append(lbl)
        else:
            var = "t" if e == 1 else f"t^{e}"
            terms.append(var if c == base.one else f"{lbl}{var}")
    return "+".join(terms) if terms else base.label_of(0)


def make_quotient_poly(base: FiniteRing, modulus: Sequence[int],
                       order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Quotient of base[t] by a monic modulus, coefficients little-endian.

    Elements are residue classes represented by coefficient vectors of
    degree below deg(modulus).  The base ring must be commutative and the
    modulus leading coefficient must be the base identity.
    """
    if not base.is_commutative:
        raise ValueError("polynomial quotients are only constructed over commutative bases")
    mod = [int(c) for c in modulus]
    if len(mod) < 2:
        raise ValueError("modulus must have degree at least 1")
    if mod[-1] != base.one:
        raise ValueError("modulus must be monic (leading coefficient must be the identity)")
    for c in mod:
        if c < 0 or c >= base.order:
            raise ValueError(f"modulus coefficient {c} is not a base ring element")
    deg = len(mod) - 1
    order = base.order ** deg
    if order > order_cap:
        raise CapExceeded("ring order cap", order_cap, order)
    b = base.order

    def decode(i):
        digits = []
        for _ in range(deg):
            i, r = divmod(i, b)
            digits.append(r)
        return digits

    def encode(digits):
        out = 0
        for d in reversed(digits):
            out = out * b + d
        return out

    def reduce(coeffs):
        # Long division by a monic modulus needs no inverses.
        coeffs = list(coeffs)
        for top in reversed(range(deg, len(coeffs))):
            lead = coeffs[top]
            if lead == 0:
                continue
            shift = top - deg
            for e, m in enumerate(mod):
                coeffs[shift + e] = base.sub(coeffs[shift + e], base.mul(lead, m))
        return coeffs[:deg]

    polys = [decode(i) for i in range(order)]
    add = [[0] * order for _ in range(order)]
    mul = [[0] * order for _ in range(order)]
    labels = [_poly_label(p, base) for p in polys]
    for i, p in enumerate(polys):
        for j, q in enumerate(polys):
            add[i][j] = encode([base.add(x, y) for x, y in zip(p, q)])
            conv = [0] * (2 * deg - 1)
            for e1, c1 in enumerate(p):
                if c1 == 0:
                    continue
                for e2, c2 in enumerate(q):
                    conv[e1 + e2] = base.add(conv[e1 + e2], base.mul(c1, c2))
            mul[i][j] = encode(reduce(conv))
    mod_label = _poly_label(mod, base)
    return FiniteRing(f"{base.label}[t]/({mod_label})", add, mul, labels, order_cap=order_cap)


# ---------------------------------------------------------------------------
# Distinguished subsets and radicals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ElementSets:
    """Distinguished element subsets of a finite ring."""

    nil: frozenset[int]
    left_zd: frozenset[int]
    right_zd: frozenset[int]
    zd_star: frozenset[int]
    units: frozenset[int]
    z_nil: frozenset[int]


def is_nilpotent_element(ring: FiniteRing, a: int) -> bool:
    """Decide nilpotency by iterating powers; the sequence cycles within order steps."""
    seen = set()
    p = a
    while True:
        if p == 0:
            return True
        if p in seen:
            return False
        seen.add(p)
        p = ring.mul(p, a)


def element_sets(ring: FiniteRing) -> ElementSets:
    """Compute nilpotents, zero divisors, units, and the nilpotent-annihilator set.

    z_nil is the set of x admitting a nonzero y with x*y nilpotent; its
    nonzero part is the vertex set of the nilpotent graph.
    """
    elems = list(ring.elements())
    nil = frozenset(a for a in elems if is_nilpotent_element(ring, a))
    left = frozenset(a for a in elems
                     if any(y != 0 and ring.mul(a, y) == 0 for y in elems))
    right = frozenset(a for a in elems
                      if any(y != 0 and ring.mul(y, a) == 0 for y in elems))
    zd_star = frozenset(x for x in (left | right) if x != 0)
    units = frozenset(a for a in elems if ring.is_unit(a))
    z_nil = frozenset(a for a in elems
                      if any(y != 0 and ring.mul(a, y) in nil for y in elems))
    return ElementSets(nil=nil, left_zd=left, right_zd=right,
                       zd_star=zd_star, units=units, z_nil=z_nil)


def _additive_closure(ring: FiniteRing, gens: Iterable[int]) -> frozenset[int]:
    members = {0}
    members.update(gens)
    frontier = list(members)
    add = ring.add_table
    while frontier:
        new = []
        for a in frontier:
            row = add[a]
            for b in list(members):
                c = row[b]
                if c not in members:
                    members.add(c)
                    new.append(c)
        frontier = new
    return frozenset(members)


def enumerate_subgroups(ring: FiniteRing) -> list[frozenset[int]]:
    """All additive subgroups, by breadth-first closure over generator extensions."""
    zero_grp = frozenset({0})
    seen = {zero_grp}
    frontier = [zero_grp]
    while frontier:
        nxt = []
        for grp in frontier:
            for x in ring.elements():
                if x in grp:
                    continue
                bigger = _additive_closure(ring, grp | {x})
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def enumerate_ideals(ring: FiniteRing, ideal_cap: int = DEFAULT_IDEAL_CAP) -> list[frozenset[int]]:
    """All two-sided ideals, smallest first; includes {0} and the whole ring."""
    if ring.order > ideal_cap:
        raise CapExceeded("ideal enumeration cap", ideal_cap, ring.order)
    mul = ring.mul_table
    elems = list(ring.elements())
    ideals = []
    for grp in enumerate_subgroups(ring):
        if all(mul[r][i] in grp and mul[i][r] in grp for i in grp for r in elems):
            ideals.append(grp)
    return ideals


@dataclass(frozen=True)
class RadicalReport:
    """Prime ideals and radicals of a finite ring."""

    prime_radical: frozenset[int]
    upper_nilradical: frozenset[int]
    minimal_primes: tuple[frozenset[int], ...]
    all_primes: tuple[frozenset[int], ...]


def _is_prime_ideal(ring: FiniteRing, P: frozenset[int]) -> bool:
    # Elementwise criterion: aRb inside P forces a in P or b in P.
    if len(P) == ring.order:
        return False
    mul = ring.mul_table
    outside = [a for a in ring.elements() if a not in P]
    for a in outside:
        rows = [mul[a][r] for r in ring.elements()]
        for b in outside:
            if all(mul[ar][b] in P for ar in rows):
                return False
    return True


def minimal_primes(ring: FiniteRing, ideal_cap: int = DEFAULT_IDEAL_CAP) -> RadicalReport:
    return radicals(ring, ideal_cap=ideal_cap)


def radicals(ring: FiniteRing, ideal_cap: int = DEFAULT_IDEAL_CAP) -> RadicalReport:
    """Prime ideals, minimal primes, prime radical, and upper nilradical."""
    ideals = enumerate_ideals(ring, ideal_cap=ideal_cap)
    primes = [P for P in ideals if _is_prime_ideal(ring, P)]
    minimal = [P for P in primes if not any(Q < P for Q in primes)]
    prime_radical = frozenset(ring.elements())
    for P in primes:
        prime_radical &= P
    sets = element_sets(ring)
    nil_ideals = [I for I in ideals if I <= sets.nil]
    union = set()
    for I in nil_ideals:
        union |= I
    upper = _additive_closure(ring, union)
    return RadicalReport(prime_radical=frozenset(prime_radical),
                         upper_nilradical=frozenset(upper),
                         minimal_primes=tuple(sorted(minimal, key=sorted)),
                         all_primes=tuple(sorted(primes, key=sorted)))


@dataclass(frozen=True)
class PropertyReport:
    """Structural predicates with counterexample witnesses for the failed ones.

    two_primal and ni are None when ideal enumeration was blocked by its cap.
    """

    reduced: bool
    reversible: bool
    symmetric: bool
    two_primal: bool | None
    ni: bool | None
    witnesses: dict = field(default_factory=dict)


def ring_properties(ring: FiniteRing, sets: ElementSets | None = None,
                    radical_report: RadicalReport | None = None,
                    ideal_cap: int = DEFAULT_IDEAL_CAP) -> PropertyReport:
    if sets is None:
        sets = element_sets(ring)
    witnesses: dict = {}

    reduced = sets.nil == frozenset({0})
    if not reduced:
        witnesses["reduced"] = (min(x for x in sets.nil if x != 0),)

    mul = np.array(ring.mul_table, dtype=np.int16)
    zero_prod = mul == 0
    rev_viol = zero_prod & ~zero_prod.T
    reversible = not rev_viol.any()
    if not reversible:
        a, b = np.argwhere(rev_viol)[0]
        witnesses["reversible"] = (int(a), int(b))

    abc_zero = mul[mul] == 0                      # [a, b, c] -> abc == 0
    acb_zero = abc_zero.transpose(0, 2, 1)        # [a, b, c] -> acb == 0
    sym_viol = abc_zero & ~acb_zero
    symmetric = not sym_viol.any()
    if not symmetric:
        a, b, c = np.argwhere(sym_viol)[0]
        witnesses["symmetric"] = (int(a), int(b), int(c))

    two_primal: bool | None
    ni: bool | None
    if radical_report is None:
        try:
            radical_report = radicals(ring, ideal_cap=ideal_cap)
        except CapExceeded:
            radical_report = None
    if radical_report is None:
        two_primal = None
        ni = None
    else:
        two_primal = radical_report.prime_radical == sets.nil
        ni = radical_report.upper_nilradical == sets.nil
        if not two_primal:
            witnesses["two_primal"] = tuple(sorted(sets.nil - radical_report.prime_radical))
        if not ni:
            witnesses["ni"] = tuple(sorted(sets.nil - radical_report.upper_nilradical))

    return PropertyReport(reduced=reduced, reversible=reversible, symmetric=symmetric,
                          two_primal=two_primal, ni=ni, witnesses=witnesses)


def find_isomorphism(r1: FiniteRing, r2: FiniteRing, max_order: int = 8) -> tuple[int, ...] | None:
    """Exhaustive ring-isomorphism search for small orders; None if not isomorphic."""
    if r1.order != r2.order:
        return None
    if r1.order > max_order:
        raise CapExceeded("isomorphism search cap", max_order, r1.order)
    n = r1.order
    rest = [x for x in range(n) if x not in (0, 1)]
    for images in itertools.permutations(rest):
        perm = [0, 1, *images]
        ok = True
        for a in range(n):
            pa = perm[a]
            for b in range(n):
                if perm[r1.add_table[a][b]] != r2.add_table[pa][perm[b]]:
                    ok = False
                    break
                if perm[r1.mul_table[a][b]] != r2.mul_table[pa][perm[b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return tuple(perm)
    return None
