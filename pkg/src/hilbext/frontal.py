"""Frontal operators, their extension to the spectrum upsets, and the minimum-defined operators.

Three operators are defined pointwise as minima of subsets of ``H``:

* gamma:     ``gamma(a) = min {b : not b <= b and a <= b}`` (needs a bottom)
* successor: ``S(a)     = min {b : b -> a <= b}``
* Gabbay:    ``G(a)     = min {b : b -> a <= not not a -> b}`` (needs a bottom)

On upsets of the spectrum each has a closed form, evaluated by
:func:`gamma_pi`, :func:`s_pi` and :func:`g_pi`; :func:`tau_pi` is the
general definition those forms are checked against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from hilbext import bits
from hilbext.algebra import FiniteHilbertAlgebra, FinitePoset, Report, UnaryMap, join_table
from hilbext.errors import AxiomViolation, PreconditionError, SoundnessError
from hilbext.extension import Extension, up_implication
from hilbext.filters import preimage

FLAVORS = ("hilbert", "semilattice", "heyting_f")
OPERATORS = ("succ", "gamma", "gabbay")


def check_frontal(H: FiniteHilbertAlgebra, t, flavor: str = "hilbert") -> Report:
    """Check a unary map against the frontal axioms in one of three presentations.

    ``hilbert``: (i1) t(a->b) <= t(a)->t(b), (i2) a <= t(a), (i3) t(a) <= ((b->a)->b)->b.
    ``semilattice``: (i2), (i3) and t(a^b) = t(a)^t(b).
    ``heyting_f``: t(a^b) = t(a)^t(b), a <= t(a), t(a) <= b v (b->a).
    """
    if flavor not in FLAVORS:
        raise PreconditionError(f"unknown flavor {flavor!r}")
    t = UnaryMap(tuple(t)).validate(H.n)
    if flavor != "hilbert" and H.meet is None:
        raise PreconditionError(f"flavor {flavor} needs a meet table")
    join = None
    if flavor == "heyting_f":
        join = join_table(H)
        if join is None:
            raise PreconditionError("flavor heyting_f needs joins, and some pair has no least upper bound")
    imp, meet, R = H.imp, H.meet, range(H.n)
    le = H.leq
    report = Report(f"frontal/{flavor}")
    for a in R:
        if not le(a, t[a]):
            report.add("i2" if flavor != "heyting_f" else "f2", (a,), "a </= t(a)")
    for a, b in itertools.product(R, repeat=2):
        if flavor == "hilbert" and not le(t[imp[a][b]], imp[t[a]][t[b]]):
            report.add("i1", (a, b), "t(a->b) </= t(a)->t(b)")
        if flavor != "hilbert" and t[meet[a][b]] != meet[t[a]][t[b]]:
            report.add("meet" if flavor == "semilattice" else "f1", (a, b), "t(a^b) != t(a)^t(b)")
        if flavor != "heyting_f" and not le(t[a], imp[imp[imp[b][a]][b]][b]):
            report.add("i3", (a, b), "t(a) </= ((b->a)->b)->b")
        if flavor == "heyting_f" and not le(t[a], join[b][imp[b][a]]):
            report.add("f3", (a, b), "t(a) </= b v (b->a)")
    return report


@dataclass(frozen=True)
class FrontalAlgebra:
    """A Hilbert algebra with a frontal operator; the axioms are checked on construction."""

    base: FiniteHilbertAlgebra
    tau: UnaryMap

    def __post_init__(self):
        tau = self.tau if isinstance(self.tau, UnaryMap) else UnaryMap(tuple(self.tau))
        object.__setattr__(self, "tau", tau.validate(self.base.n))
        report = check_frontal(self.base, tau)
        if not report.ok:
            raise AxiomViolation(f"not a frontal operator: {report.violations[0]}", report)


# ---------------------------------------------------------------------------
# Poset operators


def maximal_elements(P: FinitePoset, S: int) -> int:
    """Members of ``S`` with nothing of ``S`` strictly above them."""
    return bits.from_iter(x for x in bits.members(S) if P.up[x] & S == 1 << x)


def coderivative(P: FinitePoset, U: int) -> int:
    """``U`` together with the maximal points of its complement."""
    if not P.is_upset(U):
        raise PreconditionError(f"{bits.fmt(U)} is not an upset")
    return U | maximal_elements(P, P.full & ~U)


def coderivative_by_neighbourhoods(P: FinitePoset, U: int) -> int:
    """Frontal points of ``U`` in the upset topology.

    ``x`` qualifies iff some open neighbourhood ``V`` of ``x`` has ``V <= U | {x}``;
    the smallest neighbourhood of ``x`` is ``[x)``.
    """
    return bits.from_iter(x for x in range(P.n) if P.up[x] & ~(U | 1 << x) == 0)


def poset_successor(P: FinitePoset) -> Callable[[int], int]:
    """Successor on the upsets of a finite poset, as a per-upset evaluator."""

    def successor(U: int) -> int:
        return coderivative(P, U)

    return successor


def poset_successor_by_search(P: FinitePoset, U: int, upsets=None) -> Optional[int]:
    """Least upset ``V`` with ``V => U <= V``, found by scanning every upset."""
    ups = P.upsets() if upsets is None else upsets
    cands = [V for V in ups if up_implication(P, V, U) & ~V == 0]
    least = [V for V in cands if all(V & W == V for W in cands)]
    return least[0] if least else None


# ---------------------------------------------------------------------------
# The extension of a frontal operator to spectrum upsets


@lru_cache(maxsize=4096)
def _tau_reach(E: Extension, tau: UnaryMap) -> tuple:
    """For each spectrum point ``P``, the points whose filter contains ``tau^-1[P]``."""
    X = E.spectrum
    return tuple(X.above(preimage(tau, P)) for P in X.filters)


def _tau_pi(E, tau, U):
    return bits.from_iter(p for p, reach in enumerate(_tau_reach(E, tau)) if reach & ~U == 0)


def tau_pi(E: Extension, F: FrontalAlgebra, U: int) -> int:
    """``P`` is in the result iff every irreducible filter containing ``tau^-1[P]`` lies in ``U``."""
    if F.base != E.source:
        raise PreconditionError("frontal algebra and extension have different carriers")
    if not E.poset.is_upset(U) or U & ~E.poset.full:
        raise PreconditionError(f"{bits.fmt(U)} is not an upset of the spectrum")
    return _tau_pi(E, F.tau, U)


def extend_frontal(E: Extension, F: FrontalAlgebra) -> UnaryMap:
    """The operator induced on ``L(H)``: intersect ``phi(tau(a_i))`` over each element's generators."""
    if F.base != E.source:
        raise PreconditionError("frontal algebra and extension have different carriers")
    out = []
    for i, g in enumerate(E.gens):
        W = E.meet_of_phis(F.tau[a] for a in g)
        if W != _tau_pi(E, F.tau, E.elements[i]):
            raise SoundnessError(f"generator formula and definition disagree at element {i}")
        out.append(E.index_of(W))
    ext = UnaryMap(tuple(out))
    report = check_frontal(E.algebra, ext, "semilattice")
    if not report.ok:
        raise SoundnessError(f"extended operator is not frontal on L(H): {report.violations[0]}")
    return ext


# ---------------------------------------------------------------------------
# Operators defined by minima


def _neg(H, a):
    return H.imp[a][H.zero]


def _require_bounded(H, what):
    if H.zero is None:
        raise PreconditionError(f"{what} needs a bounded algebra (declare zero)")


def gamma_set(H: FiniteHilbertAlgebra, a: int) -> int:
    _require_bounded(H, "gamma")
    return bits.from_iter(b for b in range(H.n) if H.leq(_neg(H, b), b) and H.leq(a, b))


def successor_set(H: FiniteHilbertAlgebra, a: int) -> int:
    return bits.from_iter(b for b in range(H.n) if H.leq(H.imp[b][a], b))


def gabbay_set(H: FiniteHilbertAlgebra, a: int) -> int:
    _require_bounded(H, "Gabbay function")
    nna = _neg(H, _neg(H, a))
    return bits.from_iter(b for b in range(H.n) if H.leq(H.imp[b][a], H.imp[nna][b]))


OPERATOR_SETS = {"succ": successor_set, "gamma": gamma_set, "gabbay": gabbay_set}


def minimal_in(H: FiniteHilbertAlgebra, S: int) -> tuple:
    order = H.order
    return tuple(bits.members(maximal_elements_dual(order, S)))


def maximal_elements_dual(P: FinitePoset, S: int) -> int:
    return bits.from_iter(x for x in bits.members(S) if P.down[x] & S == 1 << x)


@dataclass(frozen=True)
class OperatorSearch:
    """Result of looking for a minimum-defined operator.

    ``values`` is ``None`` when some ``a`` has no minimum; ``missing`` then maps
    each such ``a`` to the minimal elements of its candidate set.
    """

    name: str
    values: Optional[UnaryMap]
    missing: dict = field(default_factory=dict)

    @property
    def exists(self):
        return self.values is not None


def search_operator(H: FiniteHilbertAlgebra, name: str) -> OperatorSearch:
    if name not in OPERATOR_SETS:
        raise PreconditionError(f"unknown operator {name!r}; expected one of {', '.join(OPERATORS)}")
    values, missing = [], {}
    for a in range(H.n):
        mins = minimal_in(H, OPERATOR_SETS[name](H, a))
        if len(mins) == 1:
            values.append(mins[0])
        else:
            missing[a] = mins
    if missing:
        return OperatorSearch(name, None, missing)
    op = UnaryMap(tuple(values))
    report = classify(H, op)[name]
    if not report.ok:
        raise SoundnessError(f"minimum-defined {name} fails its axioms: {report.violations[0]}")
    return OperatorSearch(name, op)


def find_successor(H: FiniteHilbertAlgebra) -> Optional[UnaryMap]:
    return search_operator(H, "succ").values


def find_gamma(H: FiniteHilbertAlgebra) -> Optional[UnaryMap]:
    _require_bounded(H, "gamma")
    return search_operator(H, "gamma").values


def find_gabbay(H: FiniteHilbertAlgebra) -> Optional[UnaryMap]:
    _require_bounded(H, "Gabbay function")
    return search_operator(H, "gabbay").values


def check_successor(H: FiniteHilbertAlgebra, t) -> Report:
    """(S1) t(a) <= ((b->a)->b)->b and (S2) t(a)->a <= t(a); also reports t(a)->a != a."""
    R = range(H.n)
    report = Report("successor")
    for a in R:
        if not H.leq(H.imp[t[a]][a], t[a]):
            report.add("S2", (a,), "t(a)->a </= t(a)")
        if H.imp[t[a]][a] != a:
            report.add("S-eq", (a,), "t(a)->a != a")
        for b in R:
            if not H.leq(t[a], H.imp[H.imp[H.imp[b][a]][b]][b]):
                report.add("S1", (a, b), "t(a) </= ((b->a)->b)->b")
    return report


def check_gamma(H: FiniteHilbertAlgebra, t) -> Report:
    """Frontal plus (g4) not t(a) <= t(a) and (g5) t(a) <= (a->b)->((not b->b)->b)."""
    _require_bounded(H, "gamma")
    report = check_frontal(H, t)
    report.subject = "gamma"
    R = range(H.n)
    for a in R:
        if not H.leq(_neg(H, t[a]), t[a]):
            report.add("g4", (a,), "not t(a) </= t(a)")
        for b in R:
            rhs = H.imp[H.imp[a][b]][H.imp[H.imp[_neg(H, b)][b]][b]]
            if not H.leq(t[a], rhs):
                report.add("g5", (a, b), "t(a) </= (a->b)->((not b->b)->b)")
    return report


def check_gabbay(H: FiniteHilbertAlgebra, t) -> Report:
    """Frontal plus (G4) t(a) <= not not a and (G5) t(a)->a <= not not a -> a."""
    _require_bounded(H, "Gabbay function")
    report = check_frontal(H, t)
    report.subject = "gabbay"
    for a in range(H.n):
        nna = _neg(H, _neg(H, a))
        if not H.leq(t[a], nna):
            report.add("G4", (a,), "t(a) </= not not a")
        if not H.leq(H.imp[t[a]][a], H.imp[nna][a]):
            report.add("G5", (a,), "t(a)->a </= not not a -> a")
    return report


def classify(H: FiniteHilbertAlgebra, t) -> dict:
    """Reports for frontal, then successor, gamma and Gabbay (the last two only when bounded)."""
    t = UnaryMap(tuple(t)).validate(H.n)
    frontal = check_frontal(H, t)
    succ = check_successor(H, t)
    out = {"frontal": frontal, "succ": succ}
    if H.zero is not None:
        out["gamma"] = check_gamma(H, t)
        out["gabbay"] = check_gabbay(H, t)
    return out


# ---------------------------------------------------------------------------
# Closed forms on spectrum upsets


def _require_operator(E, op, name, finder):
    found = finder(E.source)
    if found is None or tuple(op) != tuple(found):
        raise PreconditionError(f"the given map is not the {name} of the source algebra")


def gamma_pi(E: Extension, op, U: int) -> int:
    """``U`` together with the maximal points of the whole spectrum."""
    _require_operator(E, op, "gamma", find_gamma)
    P = E.poset
    return U | maximal_elements(P, P.full)


def s_pi(E: Extension, op, U: int) -> int:
    """``U`` together with the maximal points of its complement."""
    _require_operator(E, op, "successor", find_successor)
    return coderivative(E.poset, U)


def g_pi(E: Extension, op, U: int) -> int:
    """``U`` together with those maximal points of its complement lying in ``not not U``."""
    _require_operator(E, op, "Gabbay function", find_gabbay)
    P = E.poset
    nnU = up_implication(P, up_implication(P, U, 0), 0)
    return U | (nnU & maximal_elements(P, P.full & ~U))
