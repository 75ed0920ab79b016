"""The free implicative semilattice extension ``L(H)`` of a finite Hilbert algebra.

``L(H)`` lives inside the upsets of the spectrum ``X(H)``: its elements are the
finite intersections of the sets ``phi(a) = {P in X(H) : a in P}``. Upsets are
bitmasks over spectrum indices, so equality of elements is equality of ints
and no representative choice can leak into a result.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from typing import Optional

from hilbext import bits
from hilbext.algebra import (
    SIG_HIL,
    SIG_IS,
    FiniteHilbertAlgebra,
    FinitePoset,
    Homomorphism,
    assert_hilbert,
    check_axioms,
    check_homomorphism,
    enumerate_homomorphisms,
)
from hilbext.config import guards
from hilbext.errors import AxiomViolation, GuardExceeded, MalformedTableError, PreconditionError, SoundnessError
from hilbext.filters import SpectrumPoset, spectrum


def _require_upset(P, U, name):
    if U & ~P.full or not P.is_upset(U):
        raise PreconditionError(f"{name} = {bits.fmt(U)} is not an upset")


def up_implication(P: FinitePoset, U: int, V: int) -> int:
    """Heyting implication on upsets: the complement of the downset generated by ``U \\ V``."""
    _require_upset(P, U, "U")
    _require_upset(P, V, "V")
    return P.full & ~P.downset_of(U & ~V)


def up_implication_pointwise(P: FinitePoset, U: int, V: int) -> int:
    """``x`` is in the result iff every ``y >= x`` lying in ``U`` lies in ``V``."""
    out = 0
    for x in range(P.n):
        if all(not bits.has(U, y) or bits.has(V, y) for y in bits.members(P.up[x])):
            out |= 1 << x
    return out


def up_negation(P: FinitePoset, U: int) -> int:
    return up_implication(P, U, 0)


def phi(H: FiniteHilbertAlgebra, a: int) -> int:
    """Spectrum indices of the irreducible filters containing ``a``."""
    if not 0 <= a < H.n:
        raise MalformedTableError(f"element {a} is not an index in 0..{H.n - 1}")
    return spectrum(H).containing(a)


@dataclass(frozen=True)
class Extension:
    """``L(H)`` with its bookkeeping.

    ``elements[i]`` is an upset of ``spectrum.order``; ``gens[i]`` is a
    minimum-size, lexicographically first tuple of elements of ``H`` whose
    ``phi``-images intersect to it. ``phi_index[a]`` is the position of
    ``phi(a)`` in ``elements``. ``algebra`` is ``L(H)`` as a table algebra.
    """

    source: FiniteHilbertAlgebra
    spectrum: SpectrumPoset
    phi: tuple
    elements: tuple
    gens: tuple
    meet: tuple
    imp: tuple
    one: int
    zero: Optional[int]
    phi_index: tuple
    algebra: FiniteHilbertAlgebra

    @property
    def poset(self) -> FinitePoset:
        return self.spectrum.order

    @property
    def size(self):
        return len(self.elements)

    def index_of(self, U):
        try:
            return self._index[U]
        except KeyError:
            raise PreconditionError(f"{bits.fmt(U)} is not an element of L(H)") from None

    @cached_property
    def _index(self):
        return {U: i for i, U in enumerate(self.elements)}

    def element_label(self, i):
        g = self.gens[i]
        H = self.source
        return "^".join(H.label(a) for a in g)

    def meet_of_phis(self, gens):
        return reduce(lambda x, y: x & y, (self.phi[a] for a in gens), self.spectrum.full)

    def saturated_gens(self, i):
        """Every ``a`` with ``elements[i] <= phi(a)``; their images also intersect to ``elements[i]``."""
        U = self.elements[i]
        return tuple(a for a in range(self.source.n) if U & self.phi[a] == U)

    def phi_hom(self) -> Homomorphism:
        sig = SIG_HIL | ({"zero"} if self.zero is not None else set())
        return Homomorphism(self.source, self.algebra, self.phi_index, sig)


@lru_cache(maxsize=4096)
def build_extension(H: FiniteHilbertAlgebra) -> Extension:
    """Build ``L(H)`` and establish every invariant before returning it."""
    assert_hilbert(H)
    X = spectrum(H)
    P = X.order
    n = H.n
    phis = tuple(X.containing(a) for a in range(n))
    limit = guards().max_closure

    elems = set(phis) | {X.full}
    frontier = set(elems)
    while frontier:
        new = {U & V for U in frontier for V in elems} - elems
        elems |= new
        frontier = new
        if len(elems) > limit:
            raise GuardExceeded("L(H) closure", len(elems), limit)

    gens = {}
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(n), k):
            U = reduce(lambda x, y: x & y, (phis[a] for a in combo))
            gens.setdefault(U, combo)
        if len(gens) == len(elems):
            break
    if set(gens) != elems:
        raise SoundnessError("intersection closure and generator scan disagree")

    elements = tuple(sorted(elems, key=bits.subset_key))
    index = {U: i for i, U in enumerate(elements)}
    m = len(elements)
    meet = tuple(tuple(index[elements[i] & elements[j]] for j in range(m)) for i in range(m))
    imp_rows = []
    for i in range(m):
        row = []
        for j in range(m):
            W = up_implication(P, elements[i], elements[j])
            if W not in index:
                raise SoundnessError(f"{bits.fmt(W)} = U => V escapes L(H)")
            row.append(index[W])
        imp_rows.append(tuple(row))
    one = index[X.full]
    zero = None
    if H.zero is not None:
        if phis[H.zero] != 0:
            raise SoundnessError("phi(0) is not empty")
        zero = index[0]
    phi_index = tuple(index[U] for U in phis)
    labels = tuple("^".join(H.label(a) for a in gens[U]) for U in elements)
    alg = FiniteHilbertAlgebra(tuple(imp_rows), one, zero, meet, labels)
    E = Extension(H, X, phis, elements, tuple(gens[U] for U in elements), meet, tuple(imp_rows), one, zero, phi_index, alg)
    cls = "bounded_is" if zero is not None else "is"
    report = check_axioms(alg, cls)
    if not report.ok:
        raise SoundnessError(f"L(H) fails {cls}: {report.violations[0]}")
    if len(set(phis)) != n:
        raise SoundnessError("phi is not injective")
    return E


def _require_hil_hom(h: Homomorphism):
    g = Homomorphism(h.source, h.target, h.map, SIG_HIL)
    if not check_homomorphism(g):
        raise PreconditionError("map does not preserve -> and 1")


def lift_hom(h: Homomorphism, E1: Optional[Extension] = None, E2: Optional[Extension] = None) -> Homomorphism:
    """The unique implicative-semilattice map ``L(H1) -> L(H2)`` extending ``h`` along ``phi``.

    Each element is sent through its recorded generators; the image computed
    from the saturated generator set must agree.
    """
    _require_hil_hom(h)
    E1 = build_extension(h.source) if E1 is None else E1
    E2 = build_extension(h.target) if E2 is None else E2
    if E1.source != h.source or E2.source != h.target:
        raise PreconditionError("extensions do not match the homomorphism's source and target")

    def image(gs):
        return reduce(lambda x, y: x & y, (E2.phi[h.map[a]] for a in gs), E2.spectrum.full)

    out = []
    for i in range(E1.size):
        U = image(E1.gens[i])
        if image(E1.saturated_gens(i)) != U:
            raise SoundnessError(f"lift of element {i} depends on the generators chosen")
        out.append(E2.index_of(U))
    sig = SIG_IS
    if "zero" in h.signature and E1.zero is not None and E2.zero is not None:
        sig = sig | {"zero"}
    lifted = Homomorphism(E1.algebra, E2.algebra, tuple(out), sig)
    if not check_homomorphism(lifted):
        raise SoundnessError("lifted map is not an implicative-semilattice homomorphism")
    return lifted


def universal_factor(H: FiniteHilbertAlgebra, A: FiniteHilbertAlgebra, h: Homomorphism, E: Optional[Extension] = None) -> Homomorphism:
    """The implicative-semilattice map ``f: L(H) -> A`` with ``f o phi = h``.

    ``f`` sends an intersection of ``phi(a_i)`` to the meet of the ``h(a_i)`` in ``A``.
    """
    report = check_axioms(A, "is")
    if not report.ok:
        raise AxiomViolation(f"target is not an implicative semilattice: {report.violations[0]}", report)
    if h.source != H or len(h.map) != H.n:
        raise PreconditionError("homomorphism source is not H")
    if any(not 0 <= x < A.n for x in h.map):
        raise PreconditionError("homomorphism does not land in A")
    _require_hil_hom(Homomorphism(H, A.reduct(), h.map, SIG_HIL))
    E = build_extension(H) if E is None else E
    out = []
    for g in E.gens:
        out.append(reduce(lambda x, y: A.meet[x][y], (h.map[a] for a in g)))
    sig = SIG_IS
    if "zero" in h.signature and E.zero is not None and A.zero is not None:
        sig = sig | {"zero"}
    f = Homomorphism(E.algebra, A, tuple(out), sig)
    if not check_homomorphism(f):
        raise SoundnessError("factor map is not an implicative-semilattice homomorphism")
    if any(f.map[E.phi_index[a]] != h.map[a] for a in range(H.n)):
        raise SoundnessError("factor map does not restrict to h along phi")
    return f


def factorizations(H: FiniteHilbertAlgebra, A: FiniteHilbertAlgebra, h: Homomorphism, E: Optional[Extension] = None) -> list:
    """Every implicative-semilattice map ``L(H) -> A`` restricting to ``h`` along ``phi`` (exhaustive)."""
    E = build_extension(H) if E is None else E
    homs = enumerate_homomorphisms(E.algebra, A, SIG_IS)
    return [f for f in homs if all(f.map[E.phi_index[a]] == h.map[a] for a in range(H.n))]
