"""Implicative filters, irreducible filters and the spectrum poset.

Subsets of the carrier are bitmask ints (see :mod:`hilbext.bits`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from hilbext import bits
from hilbext.algebra import FiniteHilbertAlgebra, FinitePoset
from hilbext.config import guards
from hilbext.errors import GuardExceeded, PreconditionError, SoundnessError


def is_filter(H: FiniteHilbertAlgebra, F: int) -> bool:
    """``1 in F`` and ``F`` is closed under modus ponens."""
    if not bits.has(F, H.one):
        return False
    mem = bits.members(F)
    for a in mem:
        row = H.imp[a]
        for b in range(H.n):
            if bits.has(F, row[b]) and not bits.has(F, b):
                return False
    return True


def generate_filter(H: FiniteHilbertAlgebra, X: int) -> int:
    """Least filter containing ``X``: close ``X | {1}`` under modus ponens."""
    F = X | (1 << H.one)
    changed = True
    while changed:
        changed = False
        for a in bits.members(F):
            row = H.imp[a]
            for b in range(H.n):
                if not bits.has(F, b) and bits.has(F, row[b]):
                    F |= 1 << b
                    changed = True
    return F


def generate_filter_by_chains(H: FiniteHilbertAlgebra, X: int) -> int:
    """Filter generated by ``X`` read off iterated implications.

    ``b`` belongs iff ``b = 1`` or ``a1 -> (a2 -> ... (ak -> b)...) = 1`` for
    some ``a1..ak`` in ``X``. Values of the nested term are explored
    breadth-first from ``b`` through the maps ``v -> (a -> v)``.
    """
    xs = bits.members(X)
    F = 1 << H.one
    for b in range(H.n):
        frontier = {H.imp[a][b] for a in xs}
        reached = set(frontier)
        while frontier:
            frontier = {H.imp[a][v] for a in xs for v in frontier} - reached
            reached |= frontier
        if H.one in reached:
            F |= 1 << b
    return F


def _check_scan(H):
    bound = guards().max_filter_scan
    if H.n > bound:
        raise GuardExceeded("filter scan over 2**n subsets", H.n, bound)


@lru_cache(maxsize=4096)
def all_filters(H: FiniteHilbertAlgebra) -> tuple:
    """Every implicative filter, ordered by (cardinality, bitset value); includes ``H`` itself."""
    _check_scan(H)
    out = [F for F in range(1 << H.n) if bits.has(F, H.one) and is_filter(H, F)]
    out.sort(key=bits.subset_key)
    return tuple(out)


def _require_filter(H, F):
    if not is_filter(H, F):
        raise PreconditionError(f"{bits.fmt(F)} is not an implicative filter")


def is_irreducible(H: FiniteHilbertAlgebra, F: int) -> bool:
    """``F`` is proper and is not the intersection of two strictly larger filters."""
    _require_filter(H, F)
    if F == H.full:
        return False
    above = [G for G in all_filters(H) if G != F and G & F == F]
    return not any(G1 & G2 == F for G1, G2 in itertools.combinations(above, 2))


def is_irreducible_by_upper_bounds(H: FiniteHilbertAlgebra, F: int) -> bool:
    """Proper ``F`` such that any two elements outside ``F`` share an upper bound outside ``F``."""
    _require_filter(H, F)
    if F == H.full:
        return False
    outside = [x for x in range(H.n) if not bits.has(F, x)]
    return all(
        any(H.leq(a, c) and H.leq(b, c) for c in outside) for a, b in itertools.product(outside, repeat=2)
    )


@dataclass(frozen=True)
class SpectrumPoset:
    """The irreducible filters of ``source`` ordered by inclusion.

    ``filters[i]`` is the bitmask of the ``i``-th irreducible filter (in
    :func:`all_filters` order); ``order`` is inclusion on these indices.
    """

    source: FiniteHilbertAlgebra
    filters: tuple
    order: FinitePoset

    @property
    def size(self):
        return len(self.filters)

    @property
    def full(self):
        return bits.full(len(self.filters))

    def containing(self, a):
        """Bitmask of spectrum indices whose filter contains element ``a``."""
        return bits.from_iter(i for i, P in enumerate(self.filters) if bits.has(P, a))

    def above(self, F):
        """Bitmask of spectrum indices whose filter includes the subset ``F``."""
        return bits.from_iter(i for i, P in enumerate(self.filters) if P & F == F)


@lru_cache(maxsize=4096)
def spectrum(H: FiniteHilbertAlgebra) -> SpectrumPoset:
    Xs = tuple(F for F in all_filters(H) if is_irreducible(H, F))
    m = len(Xs)
    order = FinitePoset(tuple(tuple(Xs[i] & Xs[j] == Xs[i] for j in range(m)) for i in range(m)))
    return SpectrumPoset(H, Xs, order)


def is_order_ideal(H: FiniteHilbertAlgebra, I: int) -> bool:
    """Nonempty downset of the natural order in which any two members have an upper bound inside."""
    if I == 0:
        return False
    order = H.order
    if not order.is_downset(I):
        return False
    mem = bits.members(I)
    return all(any(H.leq(a, c) and H.leq(b, c) for c in mem) for a, b in itertools.product(mem, repeat=2))


def separate(H: FiniteHilbertAlgebra, F: int, I: int) -> int:
    """First irreducible filter (spectrum order) containing ``F`` and missing ``I``."""
    _require_filter(H, F)
    if I == 0:
        raise PreconditionError("order-ideals are nonempty; use separate_element to avoid a single element")
    if not is_order_ideal(H, I):
        raise PreconditionError(f"{bits.fmt(I)} is not an order-ideal")
    if F & I:
        raise PreconditionError(f"filter {bits.fmt(F)} meets ideal {bits.fmt(I)}")
    for P in spectrum(H).filters:
        if P & F == F and not P & I:
            return P
    raise SoundnessError(f"no irreducible filter separates {bits.fmt(F)} from {bits.fmt(I)}")


def separate_element(H: FiniteHilbertAlgebra, F: int, a: int) -> int:
    """First irreducible filter containing ``F`` and not ``a`` (requires ``a`` outside ``F``)."""
    _require_filter(H, F)
    if bits.has(F, a):
        raise PreconditionError(f"{a} lies in the filter")
    return separate(H, F, H.order.down[a])


def preimage(f, F: int) -> int:
    """``f^-1[F]`` for a map given as a sequence of indices."""
    return bits.from_iter(a for a, fa in enumerate(f) if bits.has(F, fa))


def principal_filter(H: FiniteHilbertAlgebra, a: int) -> int:
    return H.order.up[a]
