"""Invariant suite for a single algebra, used by ``hilbext verify``.

Every check recomputes its claim by brute force over the finite carrier and
returns a :class:`Check`; nothing here raises on a failed property.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import reduce
from typing import Optional

from hilbext import bits
from hilbext.algebra import (
    SIG_HIL,
    FiniteHilbertAlgebra,
    FinitePoset,
    Homomorphism,
    UnaryMap,
    check_axioms,
    identity_hom,
    with_meet,
)
from hilbext.config import guards
from hilbext.documents import declared_class
from hilbext.extension import build_extension, lift_hom, universal_factor, up_implication, up_implication_pointwise
from hilbext.filters import (
    all_filters,
    generate_filter,
    generate_filter_by_chains,
    is_irreducible,
    is_irreducible_by_upper_bounds,
    spectrum,
)
from hilbext.frontal import (
    FrontalAlgebra,
    _tau_pi,
    check_frontal,
    coderivative,
    extend_frontal,
    g_pi,
    gamma_pi,
    maximal_elements,
    s_pi,
    search_operator,
)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _first(items):
    for x in items:
        return x
    return None


def upsets_or_sample(P: FinitePoset, rng=None):
    """Every upset when ``2**|P|`` is within the scan guard, else a seeded sample."""
    g = guards()
    if P.n <= g.max_filter_scan:
        return P.upsets()
    rng = rng or random.Random(g.seed)
    out = set()
    for _ in range(g.sample_size):
        out.add(P.upset_of(rng.getrandbits(P.n)))
    return sorted(out, key=bits.subset_key)


def check_basic_laws(H):
    R, imp, one = range(H.n), H.imp, H.one
    le = H.leq
    for a, b, c in itertools.product(R, repeat=3):
        if imp[a][a] != one or imp[one][a] != a:
            return Check("basic laws", False, f"a->a or 1->a fails at {a}")
        if imp[a][imp[b][c]] != imp[b][imp[a][c]]:
            return Check("basic laws", False, f"exchange fails at {(a, b, c)}")
        if imp[a][imp[b][c]] != imp[imp[a][b]][imp[a][c]]:
            return Check("basic laws", False, f"self-distributivity fails at {(a, b, c)}")
        if le(a, b) and not (le(imp[c][a], imp[c][b]) and le(imp[b][c], imp[a][c])):
            return Check("basic laws", False, f"monotonicity fails at {(a, b, c)}")
    return Check("basic laws", True)


def check_filter_generation(H):
    fils = all_filters(H)
    for X in range(1 << H.n):
        F = generate_filter(H, X)
        oracle = reduce(lambda x, y: x & y, (G for G in fils if G & X == X))
        if F != oracle or F != generate_filter_by_chains(H, X):
            return Check("filter generation", False, f"X = {bits.fmt(X)}")
    return Check("filter generation", True)


def check_filter_distributive(H):
    fils = all_filters(H)
    join = {(F, G): generate_filter(H, F | G) for F in fils for G in fils}
    for F, G, K in itertools.product(fils, repeat=3):
        if F & join[G, K] != join[F & G, F & K]:
            return Check("filter lattice distributive", False, f"{bits.fmt(F)}, {bits.fmt(G)}, {bits.fmt(K)}")
    return Check("filter lattice distributive", True)


def check_irreducibility_criteria(H):
    for F in all_filters(H):
        if is_irreducible(H, F) != is_irreducible_by_upper_bounds(H, F):
            return Check("irreducibility criteria agree", False, bits.fmt(F))
    return Check("irreducibility criteria agree", True)


def check_prime_filter_witnesses(H):
    X = spectrum(H).filters
    R = range(H.n)
    for F in all_filters(H):
        for a in R:
            if not bits.has(F, a) and not any(P & F == F and not bits.has(P, a) for P in X):
                return Check("prime filter witnesses", False, f"F = {bits.fmt(F)}, a = {a}")
            for b in R:
                lhs = not bits.has(F, H.imp[a][b])
                rhs = any(P & F == F and bits.has(P, a) and not bits.has(P, b) for P in X)
                if lhs != rhs:
                    return Check("prime filter witnesses", False, f"F = {bits.fmt(F)}, a->b with {(a, b)}")
    for a, b in itertools.product(R, repeat=2):
        if not H.leq(a, b) and not any(bits.has(P, a) and not bits.has(P, b) for P in X):
            return Check("prime filter witnesses", False, f"a = {a}, b = {b}")
    return Check("prime filter witnesses", True)


def check_phi(H):
    E = build_extension(H)
    P, phi = E.poset, E.phi
    R = range(H.n)
    if len(set(phi)) != H.n:
        return Check("phi embedding", False, "not injective")
    if phi[H.one] != P.full:
        return Check("phi embedding", False, "phi(1) is not the whole spectrum")
    for a, b in itertools.product(R, repeat=2):
        if phi[H.imp[a][b]] != up_implication(P, phi[a], phi[b]):
            return Check("phi embedding", False, f"phi(a->b) != phi(a) => phi(b) at {(a, b)}")
    for a1, a2, b in itertools.product(R, repeat=3):
        if up_implication(P, phi[a1] & phi[a2], phi[b]) != phi[H.imp[a1][H.imp[a2][b]]]:
            return Check("phi embedding", False, f"two-premise residuation fails at {(a1, a2, b)}")
    return Check("phi embedding", True)


def check_implication_forms(H):
    P = spectrum(H).order
    ups = upsets_or_sample(P)
    for U, V in itertools.product(ups, repeat=2):
        if up_implication(P, U, V) != up_implication_pointwise(P, U, V):
            return Check("upset implication forms agree", False, f"{bits.fmt(U)} => {bits.fmt(V)}")
    return Check("upset implication forms agree", True)


def check_extension(H):
    E = build_extension(H)
    cls = "bounded_is" if E.zero is not None else "is"
    report = check_axioms(E.algebra, cls)
    if not report.ok:
        return Check("L(H) axioms", False, str(report.violations[0]))
    ident = lift_hom(identity_hom(H), E, E)
    if ident.map != tuple(range(E.size)):
        return Check("L(H) axioms", False, "lift of the identity is not the identity")
    return Check("L(H) axioms", True, f"|L(H)| = {E.size}, |X(H)| = {E.spectrum.size}")


def check_meet_case(H):
    A = H if H.meet is not None else with_meet(H)
    if A is None:
        return None
    E = build_extension(H)
    if E.size != H.n:
        return Check("L(H) of a semilattice", False, f"|L(H)| = {E.size} != {H.n}")
    f = universal_factor(H, A, Homomorphism(H, A, tuple(range(H.n)), SIG_HIL), E)
    if len(set(f.map)) != H.n:
        return Check("L(H) of a semilattice", False, "factor of the identity is not bijective")
    return Check("L(H) of a semilattice", True)


def check_spectrum_downsets(H):
    """Complements of unions of phi-images are generated by their maximal points."""
    E = build_extension(H)
    P = E.poset
    # unions are idempotent, so generator sets stand in for all generator tuples
    for S in range(1, 1 << H.n):
        D = reduce(lambda x, y: x | y, (P.full & ~E.phi[a] for a in bits.members(S)))
        if D != P.downset_of(maximal_elements(P, D)):
            return Check("maximal points generate", False, f"generators {bits.fmt(S)}")
    return Check("maximal points generate", True)


def frontal_checks(H, tau):
    out = []
    report = check_frontal(H, tau)
    out.append(Check("tau frontal", report.ok, "" if report.ok else str(report.violations[0])))
    if not report.ok:
        return out
    F = FrontalAlgebra(H, tau)
    E = build_extension(H)
    P, phi = E.poset, E.phi
    X = E.spectrum
    # image of phi commutes with the extension
    bad = _first(a for a in range(H.n) if phi[tau[a]] != _tau_pi(E, F.tau, phi[a]))
    out.append(Check("tau_pi restricts to tau", bad is None, "" if bad is None else f"a = {bad}"))
    # frontal axioms of tau_pi over the spectrum upsets
    ups = upsets_or_sample(P)
    t = {U: _tau_pi(E, F.tau, U) for U in ups}
    bad = None
    for U, V in itertools.product(ups, repeat=2):
        tU = t[U]
        if U & ~tU or t[U & V] != tU & t[V] or tU & ~(V | up_implication(P, V, U)):
            bad = (U, V)
            break
    out.append(Check("tau_pi frontal on upsets", bad is None, "" if bad is None else f"at {bad}"))
    # prime filters and tau
    bad = None
    for p, a, b in itertools.product(range(X.size), range(H.n), range(H.n)):
        Q = X.filters[p]
        if bits.has(Q, tau[a]) and not bits.has(Q, b) and not bits.has(Q, H.imp[b][a]):
            bad = (p, a, b)
            break
    out.append(Check("prime filters absorb b->a", bad is None, "" if bad is None else f"at {bad}"))
    try:
        extend_frontal(E, F)
        out.append(Check("extended operator frontal on L(H)", True))
    except Exception as exc:  # noqa: BLE001
        out.append(Check("extended operator frontal on L(H)", False, str(exc)))
    return out


_CLOSED = {"succ": s_pi, "gamma": gamma_pi, "gabbay": g_pi}


def operator_checks(H):
    out = []
    E = build_extension(H)
    names = ["succ"] + (["gamma", "gabbay"] if H.zero is not None else [])
    for name in names:
        found = search_operator(H, name)
        if not found.exists:
            out.append(Check(f"{name} exists", True, f"no minimum for {sorted(found.missing)}"))
            continue
        op = found.values
        F = FrontalAlgebra(H, op)
        bad = _first(i for i, U in enumerate(E.elements) if _CLOSED[name](E, op, U) != _tau_pi(E, F.tau, U))
        out.append(Check(f"{name} closed form", bad is None, "" if bad is None else f"element {bad}"))
        bad = _first(a for a in range(H.n) if E.phi[op[a]] != _phi_image_form(E, name, a))
        out.append(Check(f"{name} on phi-images", bad is None, "" if bad is None else f"a = {bad}"))
    return out


def _phi_image_form(E, name, a):
    P, phi, H = E.poset, E.phi, E.source
    if name == "gamma":
        return phi[a] | maximal_elements(P, P.full)
    if name == "succ":
        return coderivative(P, phi[a])
    nna = H.imp[H.imp[a][H.zero]][H.zero]
    return phi[a] | (phi[nna] & maximal_elements(P, P.full & ~phi[a]))


def verify(H: FiniteHilbertAlgebra, tau: Optional[UnaryMap] = None) -> list:
    """Run the whole suite; stops early only if ``H`` is not a Hilbert algebra."""
    cls = declared_class(H)
    report = check_axioms(H, cls)
    out = [Check(f"axioms ({cls})", report.ok, "" if report.ok else str(report.violations[0]))]
    if not check_axioms(H, "hilbert").ok:
        return out
    order = H.order
    out.append(Check("natural order has maximum one", order.maximum() == H.one))
    out.append(check_basic_laws(H))
    out.append(check_filter_generation(H))
    out.append(check_filter_distributive(H))
    out.append(check_irreducibility_criteria(H))
    out.append(check_prime_filter_witnesses(H))
    out.append(check_phi(H))
    out.append(check_implication_forms(H))
    out.append(check_extension(H))
    meet_case = check_meet_case(H)
    if meet_case is not None:
        out.append(meet_case)
    out.append(check_spectrum_downsets(H))
    if tau is not None:
        out.extend(frontal_checks(H, tau))
    out.extend(operator_checks(H))
    return out
