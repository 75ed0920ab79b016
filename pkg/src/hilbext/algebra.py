"""Finite Hilbert algebras, posets, homomorphisms and exhaustive small-algebra search.

Elements are dense indices ``0..n-1``. Tables are tuples of tuples so every
value is hashable and immutable once built.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional, Sequence

import numpy as np

from hilbext import bits
from hilbext.config import guards
from hilbext.errors import (
    AxiomViolation,
    GuardExceeded,
    MalformedTableError,
    PreconditionError,
    SoundnessError,
)

CLASSES = ("hilbert", "bounded_hilbert", "is", "bounded_is", "heyting_upsets")

SIG_HIL = frozenset({"imp", "one"})
SIG_HIL0 = frozenset({"imp", "one", "zero"})
SIG_IS = frozenset({"meet", "imp", "one"})
SIG_IS0 = frozenset({"meet", "imp", "one", "zero"})


def _as_table(table, n, what):
    if len(table) != n or any(len(row) != n for row in table):
        raise MalformedTableError(f"{what} table must be {n}x{n}")
    out = tuple(tuple(int(x) for x in row) for row in table)
    for i, row in enumerate(out):
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise MalformedTableError(f"{what}[{i}][{j}] = {x} is not an index in 0..{n - 1}")
    return out


def _check_index(x, n, what):
    if not isinstance(x, (int, np.integer)) or not 0 <= x < n:
        raise MalformedTableError(f"{what} = {x!r} is not an index in 0..{n - 1}")
    return int(x)


# ---------------------------------------------------------------------------
# Posets


@dataclass(frozen=True)
class FinitePoset:
    """A partial order on ``0..n-1``; ``leq[i][j]`` is ``i <= j``."""

    leq: tuple

    def __post_init__(self):
        n = len(self.leq)
        if any(len(row) != n for row in self.leq):
            raise MalformedTableError("leq must be square")
        object.__setattr__(self, "leq", tuple(tuple(bool(x) for x in row) for row in self.leq))
        r = self.leq
        for i in range(n):
            if not r[i][i]:
                raise AxiomViolation(f"leq is not reflexive at {i}")
        for i, j in itertools.combinations(range(n), 2):
            if r[i][j] and r[j][i]:
                raise AxiomViolation(f"leq is not antisymmetric at ({i}, {j})")
        for i, j, k in itertools.product(range(n), repeat=3):
            if r[i][j] and r[j][k] and not r[i][k]:
                raise AxiomViolation(f"leq is not transitive at ({i}, {j}, {k})")

    @classmethod
    def from_pairs(cls, n, pairs):
        """Reflexive-transitive closure of ``pairs`` (covers or any generating relation)."""
        r = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            _check_index(a, n, "pair element")
            _check_index(b, n, "pair element")
            r[a][b] = True
        for k in range(n):
            for i in range(n):
                if r[i][k]:
                    for j in range(n):
                        if r[k][j]:
                            r[i][j] = True
        return cls(tuple(tuple(row) for row in r))

    @classmethod
    def chain(cls, n):
        return cls(tuple(tuple(i <= j for j in range(n)) for i in range(n)))

    @classmethod
    def antichain(cls, n):
        return cls(tuple(tuple(i == j for j in range(n)) for i in range(n)))

    @property
    def n(self):
        return len(self.leq)

    @property
    def full(self):
        return bits.full(self.n)

    @cached_property
    def up(self):
        """``up[x]`` is the bitmask of ``[x)``."""
        return tuple(bits.from_iter(j for j in range(self.n) if self.leq[x][j]) for x in range(self.n))

    @cached_property
    def down(self):
        return tuple(bits.from_iter(j for j in range(self.n) if self.leq[j][x]) for x in range(self.n))

    def upset_of(self, mask):
        out = 0
        for x in bits.members(mask):
            out |= self.up[x]
        return out

    def downset_of(self, mask):
        out = 0
        for x in bits.members(mask):
            out |= self.down[x]
        return out

    def is_upset(self, mask):
        return self.upset_of(mask) == mask

    def is_downset(self, mask):
        return self.downset_of(mask) == mask

    def upsets(self):
        """All upsets, sorted by (cardinality, bitset value)."""
        out = [m for m in range(1 << self.n) if self.is_upset(m)]
        out.sort(key=bits.subset_key)
        return out

    def maximum(self):
        for x in range(self.n):
            if self.down[x] == self.full:
                return x
        return None

    def minimum(self):
        for x in range(self.n):
            if self.up[x] == self.full:
                return x
        return None

    def hasse_edges(self):
        """Cover pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
        n = self.n
        out = []
        for x, y in itertools.product(range(n), repeat=2):
            if x != y and self.leq[x][y]:
                if not any(z not in (x, y) and self.leq[x][z] and self.leq[z][y] for z in range(n)):
                    out.append((x, y))
        return out

    def relabel(self, perm):
        """Poset with element ``i`` renamed ``perm[i]``."""
        n = self.n
        r = [[False] * n for _ in range(n)]
        for i, j in itertools.product(range(n), repeat=2):
            r[perm[i]][perm[j]] = self.leq[i][j]
        return FinitePoset(tuple(tuple(row) for row in r))

    def canonical_key(self):
        n = self.n
        best = None
        for perm in itertools.permutations(range(n)):
            inv = [0] * n
            for i, p in enumerate(perm):
                inv[p] = i
            key = tuple(self.leq[inv[i]][inv[j]] for i in range(n) for j in range(n))
            if best is None or key < best:
                best = key
        return best


def enumerate_posets(n):
    """One poset per isomorphism class on ``n`` points, in canonical-key order.

    Each class has a naturally labelled member (``i <= j`` implies ``i <= j`` as
    integers), so only upper-triangular relations are scanned.
    """
    if n > 6:
        raise GuardExceeded("poset enumeration", n, 6)
    pairs = list(itertools.combinations(range(n), 2))
    seen = {}
    for choice in range(1 << len(pairs)):
        r = [[i == j for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if (choice >> k) & 1:
                r[i][j] = True
        if any(r[i][j] and r[j][k] and not r[i][k] for i, j, k in itertools.product(range(n), repeat=3)):
            continue
        P = FinitePoset(tuple(tuple(row) for row in r))
        key = P.canonical_key()
        if key not in seen:
            seen[key] = FinitePoset(tuple(tuple(key[i * n:(i + 1) * n]) for i in range(n)))
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# Algebras


@dataclass(frozen=True)
class FiniteHilbertAlgebra:
    """A finite algebra ``(H, ->, 1)`` with optional bottom and meet.

    ``imp[a][b]`` is ``a -> b``. ``zero`` is declared, never inferred; ``meet``
    is present iff the algebra is presented as an implicative semilattice.
    Axioms are not checked on construction, only table shape and ranges.
    """

    imp: tuple
    one: int
    zero: Optional[int] = None
    meet: Optional[tuple] = None
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.imp)
        if n < 1:
            raise MalformedTableError("an algebra needs at least one element")
        object.__setattr__(self, "imp", _as_table(self.imp, n, "imp"))
        object.__setattr__(self, "one", _check_index(self.one, n, "one"))
        if self.zero is not None:
            object.__setattr__(self, "zero", _check_index(self.zero, n, "zero"))
        if self.meet is not None:
            object.__setattr__(self, "meet", _as_table(self.meet, n, "meet"))
        if self.labels is not None:
            if len(self.labels) != n:
                raise MalformedTableError(f"expected {n} labels, got {len(self.labels)}")
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))

    @property
    def n(self):
        return len(self.imp)

    @property
    def bounded(self):
        return self.zero is not None

    @property
    def full(self):
        return bits.full(self.n)

    def label(self, i):
        return self.labels[i] if self.labels is not None else str(i)

    def leq(self, a, b):
        return self.imp[a][b] == self.one

    def neg(self, a):
        if self.zero is None:
            raise PreconditionError("negation needs a declared zero")
        return self.imp[a][self.zero]

    @cached_property
    def order(self):
        return natural_order(self)

    def reduct(self):
        """The ``{->, 1}`` reduct (bottom kept, meet dropped)."""
        return FiniteHilbertAlgebra(self.imp, self.one, self.zero, None, self.labels)

    def without_zero(self):
        return FiniteHilbertAlgebra(self.imp, self.one, None, self.meet, self.labels)

    def with_zero(self, zero):
        return FiniteHilbertAlgebra(self.imp, self.one, zero, self.meet, self.labels)

    def with_labels(self, labels):
        return FiniteHilbertAlgebra(self.imp, self.one, self.zero, self.meet, labels)

    def relabel(self, perm):
        """Isomorphic copy with element ``i`` renamed ``perm[i]``."""
        n = self.n
        imp = [[0] * n for _ in range(n)]
        meet = None if self.meet is None else [[0] * n for _ in range(n)]
        for a, b in itertools.product(range(n), repeat=2):
            imp[perm[a]][perm[b]] = perm[self.imp[a][b]]
            if meet is not None:
                meet[perm[a]][perm[b]] = perm[self.meet[a][b]]
        labels = None
        if self.labels is not None:
            labels = [""] * n
            for a in range(n):
                labels[perm[a]] = self.labels[a]
        return FiniteHilbertAlgebra(
            imp, perm[self.one], None if self.zero is None else perm[self.zero], meet, labels
        )

    def canonical_key(self):
        """Lexicographically least flattened ``imp`` (then ``meet``) over all relabellings.

        The first entry of a relabelled table is the new name of ``one``, so the
        minimum always names ``one`` 0 and only those permutations are scanned.
        """
        n = self.n
        rest = [x for x in range(n) if x != self.one]
        best = None
        best_perm = None
        for tail in itertools.permutations(range(1, n)):
            perm = [0] * n
            for x, p in zip(rest, tail):
                perm[x] = p
            inv = [0] * n
            for x, p in enumerate(perm):
                inv[p] = x
            key = tuple(perm[self.imp[inv[i]][inv[j]]] for i in range(n) for j in range(n))
            if self.meet is not None:
                key += tuple(perm[self.meet[inv[i]][inv[j]]] for i in range(n) for j in range(n))
            if best is None or key < best:
                best, best_perm = key, perm
        return best, best_perm

    def canonical(self):
        _, perm = self.canonical_key()
        return self.relabel(perm)


@dataclass(frozen=True)
class UnaryMap:
    """A total unary function on ``0..n-1``."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def domain_size(self):
        return len(self.values)

    def __call__(self, a):
        return self.values[a]

    def __getitem__(self, a):
        return self.values[a]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def validate(self, n):
        if len(self.values) != n:
            raise MalformedTableError(f"unary map has {len(self.values)} entries, carrier has {n}")
        for a, v in enumerate(self.values):
            _check_index(v, n, f"map[{a}]")
        return self

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))


# ---------------------------------------------------------------------------
# Axiom checks


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        w = ", ".join(str(x) for x in self.witness)
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.axiom} at ({w}){tail}"


@dataclass
class Report:
    """Outcome of an axiom check: the class checked and every failing instance."""

    subject: str
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, axiom, witness, detail=""):
        self.violations.append(Violation(axiom, tuple(witness), detail))

    def extend(self, other):
        self.violations.extend(other.violations)

    def axioms_failed(self):
        return sorted({v.axiom for v in self.violations})

    def summary(self, limit=5):
        if self.ok:
            return f"{self.subject}: pass"
        lines = [f"{self.subject}: FAIL ({len(self.violations)} violations)"]
        lines += [f"  {v}" for v in self.violations[:limit]]
        if len(self.violations) > limit:
            lines.append(f"  ... {len(self.violations) - limit} more")
        return "\n".join(lines)

    def as_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail} for v in self.violations
            ],
        }


def _hilbert_violations(H, report):
    imp, one, R = H.imp, H.one, range(H.n)
    for a, b in itertools.product(R, repeat=2):
        if imp[a][imp[b][a]] != one:
            report.add("H1", (a, b), "a->(b->a) != 1")
        if a < b and imp[a][b] == one and imp[b][a] == one:
            report.add("H3", (a, b), "a->b = b->a = 1 but a != b")
    for a, b, c in itertools.product(R, repeat=3):
        if imp[imp[a][imp[b][c]]][imp[imp[a][b]][imp[a][c]]] != one:
            report.add("H2", (a, b, c), "(a->(b->c))->((a->b)->(a->c)) != 1")


def _zero_violations(H, report):
    if H.zero is None:
        report.add("zero-declared", (), "class requires a declared zero")
        return
    for a in range(H.n):
        if H.imp[H.zero][a] != H.one:
            report.add("B", (a,), "0 -> a != 1")


def _is_violations(H, report):
    if H.meet is None:
        report.add("meet-declared", (), "class requires a meet table")
        return
    imp, meet, one, R = H.imp, H.meet, H.one, range(H.n)
    le = lambda x, y: imp[x][y] == one  # noqa: E731
    for a in R:
        if meet[a][a] != a:
            report.add("SL-idem", (a,))
    for a, b in itertools.product(R, repeat=2):
        if meet[a][b] != meet[b][a]:
            report.add("SL-comm", (a, b))
        m = meet[a][b]
        if not (le(m, a) and le(m, b)) or any(le(c, a) and le(c, b) and not le(c, m) for c in R):
            report.add("SL-order", (a, b), "meet is not the glb of the natural order")
    for a, b, c in itertools.product(R, repeat=3):
        if meet[meet[a][b]][c] != meet[a][meet[b][c]]:
            report.add("SL-assoc", (a, b, c))
        if le(meet[a][b], c) != le(a, imp[b][c]):
            report.add("RES", (a, b, c), "a^b <= c  <=/=>  a <= b->c")
        if imp[meet[a][b]][c] != imp[a][imp[b][c]]:
            report.add("IS-E1", (a, b, c), "(a^b)->c != a->(b->c)")
        if imp[a][meet[b][c]] != meet[imp[a][b]][imp[a][c]]:
            report.add("IS-E2", (a, b, c), "a->(b^c) != (a->b)^(a->c)")


def join_table(H):
    """Least upper bounds in the natural order, or ``None`` if some pair lacks one."""
    n, R = H.n, range(H.n)
    le = lambda x, y: H.imp[x][y] == H.one  # noqa: E731
    out = [[0] * n for _ in R]
    for a, b in itertools.product(R, repeat=2):
        ubs = [c for c in R if le(a, c) and le(b, c)]
        least = [c for c in ubs if all(le(c, d) for d in ubs)]
        if not least:
            return None
        out[a][b] = least[0]
    return tuple(tuple(row) for row in out)


def check_axioms(alg: FiniteHilbertAlgebra, cls: str = "hilbert") -> Report:
    """Check ``alg`` against one of :data:`CLASSES` and list every failing instance.

    Malformed tables never reach here: construction raises
    :class:`MalformedTableError` first.
    """
    if cls not in CLASSES:
        raise PreconditionError(f"unknown class {cls!r}; expected one of {', '.join(CLASSES)}")
    report = Report(cls)
    _hilbert_violations(alg, report)
    if cls in ("bounded_hilbert", "bounded_is", "heyting_upsets"):
        _zero_violations(alg, report)
    if cls in ("is", "bounded_is", "heyting_upsets"):
        _is_violations(alg, report)
    if cls == "heyting_upsets" and report.ok:
        join = join_table(alg)
        if join is None:
            report.add("JOIN", (), "some pair has no least upper bound")
        else:
            R = range(alg.n)
            for a, b, c in itertools.product(R, repeat=3):
                if alg.meet[a][join[b][c]] != join[alg.meet[a][b]][alg.meet[a][c]]:
                    report.add("DIST", (a, b, c), "a^(bvc) != (a^b)v(a^c)")
    return report


def natural_order(H: FiniteHilbertAlgebra) -> FinitePoset:
    """``a <= b`` iff ``a -> b = 1``; raises with the failing instances if ``H`` is not Hilbert."""
    report = check_axioms(H, "hilbert")
    if not report.ok:
        raise AxiomViolation(f"not a Hilbert algebra: {report.violations[0]}", report)
    return FinitePoset(tuple(tuple(H.imp[a][b] == H.one for b in range(H.n)) for a in range(H.n)))


def with_meet(H: FiniteHilbertAlgebra) -> Optional[FiniteHilbertAlgebra]:
    """``H`` with its meet table if it is the reduct of an implicative semilattice, else ``None``."""
    n, R = H.n, range(H.n)
    le = lambda x, y: H.imp[x][y] == H.one  # noqa: E731
    meet = [[0] * n for _ in R]
    for a, b in itertools.product(R, repeat=2):
        lbs = [c for c in R if le(c, a) and le(c, b)]
        greatest = [c for c in lbs if all(le(d, c) for d in lbs)]
        if not greatest:
            return None
        meet[a][b] = greatest[0]
    out = FiniteHilbertAlgebra(H.imp, H.one, H.zero, meet, H.labels)
    return out if check_axioms(out, "is").ok else None


# ---------------------------------------------------------------------------
# Homomorphisms

_OPS = ("imp", "one", "meet", "zero", "tau")


@dataclass(frozen=True)
class Homomorphism:
    """A map ``source -> target`` claimed to preserve the operations in ``signature``.

    ``source_op``/``target_op`` carry the unary operators when ``"tau"`` is in
    the signature.
    """

    source: FiniteHilbertAlgebra
    target: FiniteHilbertAlgebra
    map: tuple
    signature: frozenset = SIG_HIL
    source_op: Optional[UnaryMap] = None
    target_op: Optional[UnaryMap] = None

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(x) for x in self.map))
        object.__setattr__(self, "signature", frozenset(self.signature))

    def __call__(self, a):
        return self.map[a]

    def then(self, g: "Homomorphism") -> "Homomorphism":
        """``g o self``: apply ``self`` first."""
        return Homomorphism(
            self.source,
            g.target,
            tuple(g.map[x] for x in self.map),
            self.signature & g.signature,
            self.source_op,
            g.target_op,
        )


def identity_hom(H, signature=SIG_HIL, op=None):
    return Homomorphism(H, H, tuple(range(H.n)), signature, op, op)


def _require_signature(source, target, signature, source_op, target_op):
    unknown = set(signature) - set(_OPS)
    if unknown:
        raise PreconditionError(f"unknown operations in signature: {sorted(unknown)}")
    for alg, side in ((source, "source"), (target, "target")):
        if "meet" in signature and alg.meet is None:
            raise PreconditionError(f"signature has meet but the {side} has no meet table")
        if "zero" in signature and alg.zero is None:
            raise PreconditionError(f"signature has zero but the {side} has no declared zero")
    if "tau" in signature and (source_op is None or target_op is None):
        raise PreconditionError("signature has tau but an operator is missing")


def check_homomorphism(h: Homomorphism) -> bool:
    """True iff every operation of ``h.signature`` is preserved pointwise."""
    src, tgt, f, sig = h.source, h.target, h.map, h.signature
    if len(f) != src.n:
        raise PreconditionError(f"map has {len(f)} entries, source has {src.n} elements")
    _require_signature(src, tgt, sig, h.source_op, h.target_op)
    if any(not 0 <= x < tgt.n for x in f):
        return False
    if "one" in sig and f[src.one] != tgt.one:
        return False
    if "zero" in sig and f[src.zero] != tgt.zero:
        return False
    R = range(src.n)
    for a, b in itertools.product(R, repeat=2):
        if "imp" in sig and f[src.imp[a][b]] != tgt.imp[f[a]][f[b]]:
            return False
        if "meet" in sig and f[src.meet[a][b]] != tgt.meet[f[a]][f[b]]:
            return False
    if "tau" in sig:
        s, t = h.source_op, h.target_op
        if any(f[s[a]] != t[f[a]] for a in R):
            return False
    return True


def enumerate_homomorphisms(
    source: FiniteHilbertAlgebra,
    target: FiniteHilbertAlgebra,
    signature=SIG_HIL,
    source_op: Optional[UnaryMap] = None,
    target_op: Optional[UnaryMap] = None,
    max_maps: Optional[int] = None,
) -> list:
    """Every homomorphism for ``signature``, in lexicographic order of the map arrays.

    Depth-first over ``map[0], map[1], ...`` with values in increasing order, so
    the output order matches a filtered scan of all maps; constraints are
    checked as soon as every index they mention is assigned.
    """
    signature = frozenset(signature)
    _require_signature(source, target, signature, source_op, target_op)
    bound = guards().max_maps if max_maps is None else max_maps
    space = target.n ** source.n
    if space > bound:
        raise GuardExceeded("homomorphism enumeration", space, bound)

    n = source.n
    # constraints keyed by the largest source index they mention
    binary = [[] for _ in range(n)]
    fixed = {}
    for a, b in itertools.product(range(n), repeat=2):
        if "imp" in signature:
            c = source.imp[a][b]
            binary[max(a, b, c)].append((a, b, c, target.imp))
        if "meet" in signature:
            c = source.meet[a][b]
            binary[max(a, b, c)].append((a, b, c, target.meet))
    unary = [[] for _ in range(n)]
    if "tau" in signature:
        for a in range(n):
            c = source_op[a]
            unary[max(a, c)].append((a, c))
    if "one" in signature:
        fixed[source.one] = target.one
    if "zero" in signature:
        if fixed.get(source.zero, target.zero) != target.zero:
            return []
        fixed[source.zero] = target.zero

    out = []
    f = [0] * n

    def consistent(k):
        for a, b, c, table in binary[k]:
            if f[c] != table[f[a]][f[b]]:
                return False
        for a, c in unary[k]:
            if f[c] != target_op[f[a]]:
                return False
        return True

    def extend(k):
        if k == n:
            out.append(Homomorphism(source, target, tuple(f), signature, source_op, target_op))
            return
        choices = (fixed[k],) if k in fixed else range(target.n)
        for v in choices:
            f[k] = v
            if consistent(k):
                extend(k + 1)

    extend(0)
    return out


# ---------------------------------------------------------------------------
# Exhaustive search for small Hilbert algebras


def trivial_algebra():
    return FiniteHilbertAlgebra(((0,),), 0, 0)


def _search_tables(le, top, max_nodes):
    """All Hilbert implication tables whose natural order is exactly ``le``.

    Cells with ``a <= b`` are forced to ``top`` and ``top -> b`` to ``b``; each
    remaining cell ranges over ``c >= b`` with ``c != top`` and ``a </= c``.
    Partial tables are pruned with identities true in every Hilbert algebra,
    evaluated wherever all the lookups they need are already filled in.
    """
    n = len(le)
    U = n  # sentinel for an unfilled cell; lookups through it stay unfilled
    T = np.full((n + 1, n + 1), U, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            if le[a][b]:
                T[a, b] = top
    for b in range(n):
        T[top, b] = b
    cells = [(a, b) for a in range(n) for b in range(n) if a != top and not le[a][b]]
    # fill by rows of increasing height so nested lookups resolve early
    height = [sum(le[x]) for x in range(n)]
    cells.sort(key=lambda ab: (-height[ab[0]], ab[0], -height[ab[1]], ab[1]))
    domains = [[c for c in range(n) if le[b][c] and c != top and not le[a][c]] for a, b in cells]

    A, B, C = (x.ravel() for x in np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij"))
    # order with the sentinel comparable to everything, so unfilled lookups pass
    leU = np.ones((n + 1, n + 1), dtype=bool)
    leU[:n, :n] = np.array(le, dtype=bool)
    lower, upper = (np.array(x, dtype=np.int64) for x in zip(*[(p, q) for p in range(n) for q in range(n) if p != q and le[p][q]]))
    col = np.arange(n)

    def agree(x, y):
        return bool(np.all((x == y) | (x == U) | (y == U)))

    def feasible():
        bc, ab, ac = T[B, C], T[A, B], T[A, C]
        a_bc = T[A, bc]
        # a->(b->c) = (a->b)->(a->c) and a->(b->c) = b->(a->c)
        if not agree(a_bc, T[ab, ac]) or not agree(a_bc, T[B, ac]):
            return False
        # monotone in the second argument, antitone in the first
        if not np.all(leU[T[:n, lower], T[:n, upper]]):
            return False
        if not np.all(leU[T[upper, :n], T[lower, :n]]):
            return False
        # a <= (a->b)->b
        return bool(np.all(leU[col[:, None], T[T[:n, :n], col[None, :]]]))

    found = []
    nodes = [0]

    def extend(k):
        nodes[0] += 1
        if nodes[0] > max_nodes:
            raise GuardExceeded("Hilbert table search", nodes[0], max_nodes)
        if k == len(cells):
            found.append(tuple(tuple(int(T[a, b]) for b in range(n)) for a in range(n)))
            return
        a, b = cells[k]
        for c in domains[k]:
            T[a, b] = c
            if feasible():
                extend(k + 1)
        T[a, b] = U

    if feasible():
        extend(0)
    return found


def _hilbert_class_members(n, max_tables):
    """Canonical representative of every Hilbert algebra of size ``n``."""
    if n == 1:
        return [FiniteHilbertAlgebra(((0,),), 0)]
    top = n - 1
    reps = {}
    for P in enumerate_posets(n - 1):
        le = [list(P.leq[i]) + [True] for i in range(n - 1)] + [[False] * (n - 1) + [True]]
        for table in _search_tables(le, top, max_tables):
            H = FiniteHilbertAlgebra(table, top)
            if not check_axioms(H, "hilbert").ok:
                raise SoundnessError("table search produced a non-Hilbert table")
            key, perm = H.canonical_key()
            if key not in reps:
                reps[key] = H.relabel(perm)
    return [reps[k] for k in sorted(reps)]


def enumerate_algebras(n: int, cls: str = "hilbert", max_size: Optional[int] = None) -> Iterator[FiniteHilbertAlgebra]:
    """Yield one algebra per isomorphism class of size ``n``.

    ``cls`` is ``"hilbert"`` or ``"bounded_hilbert"`` (the latter keeps only
    algebras with a least element and declares it as ``zero``). Representatives
    carry the canonical table and come out in canonical-key order.
    """
    if cls not in ("hilbert", "bounded_hilbert"):
        raise PreconditionError(f"enumerate_algebras supports hilbert and bounded_hilbert, not {cls!r}")
    g = guards()
    bound = g.max_algebra_size if max_size is None else max_size
    if n < 1:
        raise PreconditionError("size must be at least 1")
    if n > bound:
        raise GuardExceeded("algebra enumeration size", n, bound)
    for H in _cached_members(n, g.max_tables):
        if cls == "hilbert":
            yield H
        else:
            bottom = H.order.minimum()
            if bottom is not None:
                yield H.with_zero(bottom)


_MEMBERS = {}


def _cached_members(n, max_tables):
    if n not in _MEMBERS:
        _MEMBERS[n] = _hilbert_class_members(n, max_tables)
    return _MEMBERS[n]


def enumerate_implicative_semilattices(n, bounded=False, max_size=None):
    """Implicative semilattices of size ``n`` (meet tables attached), one per class."""
    cls = "bounded_hilbert" if bounded else "hilbert"
    for H in enumerate_algebras(n, cls, max_size):
        A = with_meet(H)
        if A is not None:
            yield A


def all_unary_maps(n) -> Iterator[UnaryMap]:
    bound = guards().max_unary_maps
    if n**n > bound:
        raise GuardExceeded("unary map scan", n**n, bound)
    for values in itertools.product(range(n), repeat=n):
        yield UnaryMap(values)


def assert_hilbert(H: FiniteHilbertAlgebra, cls: str = "hilbert") -> None:
    report = check_axioms(H, cls)
    if not report.ok:
        raise AxiomViolation(f"not in class {cls}: {report.violations[0]}", report)


def table_from_order(le: Sequence[Sequence[bool]]):
    return tuple(tuple(bool(x) for x in row) for row in le)
