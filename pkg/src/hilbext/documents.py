"""JSON documents for algebras, posets and maps.

Algebra document::

    {"name": "H3", "elements": ["0", "a", "1"],
     "imp": [[2, 2, 2], [0, 2, 2], [0, 1, 2]], "one": 2, "zero": 0,
     "meet": [[0, 0, 0], [0, 1, 1], [0, 1, 2]], "tau": [1, 2, 2]}

``elements`` is a count or a list of labels; ``zero``, ``meet``, ``tau`` and
``name`` are optional. Poset documents carry ``elements`` and exactly one of
``leq`` or ``covers`` (lists of ``[a, b]`` pairs meaning ``a <= b``). Map
documents are ``{"map": [...]}``. Unknown fields are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from hilbext.algebra import FiniteHilbertAlgebra, FinitePoset, UnaryMap, check_axioms
from hilbext.errors import AxiomViolation, HilbextError, MalformedTableError
from hilbext.frontal import check_frontal

ALGEBRA_FIELDS = {"name", "elements", "imp", "one", "zero", "meet", "tau"}
POSET_FIELDS = {"name", "elements", "leq", "covers"}
MAP_FIELDS = {"name", "map"}


class DocumentError(HilbextError, ValueError):
    """The text is not a well-formed document (bad JSON, fields or types)."""


@dataclass(frozen=True)
class AlgebraDocument:
    algebra: FiniteHilbertAlgebra
    tau: Optional[UnaryMap] = None
    name: Optional[str] = None
    warnings: tuple = ()


def _load(text, what):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{what}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError(f"{what}: expected a JSON object")
    return doc


def _fields(doc, allowed, required, what):
    unknown = set(doc) - allowed
    if unknown:
        raise DocumentError(f"{what}: unknown fields {sorted(unknown)}")
    missing = [f for f in required if f not in doc]
    if missing:
        raise DocumentError(f"{what}: missing fields {missing}")


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError(f"{what}: expected an integer, got {x!r}")
    return x


def _int_table(rows, what):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DocumentError(f"{what}: expected a list of lists")
    return [[_int(x, what) for x in r] for r in rows]


def _elements(value, what):
    if isinstance(value, list):
        if not all(isinstance(x, str) for x in value):
            raise DocumentError(f"{what}: element labels must be strings")
        return len(value), tuple(value)
    return _int(value, what), None


def parse_algebra(text: str, allow_invalid_tau: bool = False, validate: bool = True) -> AlgebraDocument:
    """Parse and validate an algebra document.

    The algebra must pass the axioms of its declared class (hilbert, plus
    bounded when ``zero`` is given, plus implicative semilattice when ``meet``
    is given). A ``tau`` that is not frontal is rejected unless
    ``allow_invalid_tau``, in which case it is kept and a warning recorded.
    With ``validate=False`` only shape and ranges are checked.
    """
    doc = _load(text, "algebra")
    _fields(doc, ALGEBRA_FIELDS, ("elements", "imp", "one"), "algebra")
    n, labels = _elements(doc["elements"], "elements")
    imp = _int_table(doc["imp"], "imp")
    meet = _int_table(doc["meet"], "meet") if "meet" in doc else None
    zero = _int(doc["zero"], "zero") if "zero" in doc else None
    if len(imp) != n:
        raise MalformedTableError(f"imp has {len(imp)} rows for {n} elements")
    H = FiniteHilbertAlgebra(imp, _int(doc["one"], "one"), zero, meet, labels)
    cls = declared_class(H)
    report = check_axioms(H, cls) if validate else None
    if validate and not report.ok:
        raise AxiomViolation(f"algebra fails {cls}: {report.violations[0]}", report)
    tau = None
    warnings = []
    if "tau" in doc:
        if not isinstance(doc["tau"], list):
            raise DocumentError("tau: expected a list")
        tau = UnaryMap(tuple(_int(x, "tau") for x in doc["tau"])).validate(n)
        fr = check_frontal(H, tau) if validate else None
        if validate and not fr.ok:
            if not allow_invalid_tau:
                raise AxiomViolation(f"tau is not frontal: {fr.violations[0]}", fr)
            warnings.append(f"tau is not frontal: {fr.violations[0]}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("name: expected a string")
    return AlgebraDocument(H, tau, name, tuple(warnings))


def declared_class(H: FiniteHilbertAlgebra) -> str:
    """Class implied by the structure present: ``meet`` makes an IS, ``zero`` makes it bounded."""
    if H.meet is not None:
        return "bounded_is" if H.zero is not None else "is"
    return "bounded_hilbert" if H.zero is not None else "hilbert"


def emit_algebra(H: FiniteHilbertAlgebra, tau=None, name=None) -> dict:
    doc = {}
    if name is not None:
        doc["name"] = name
    doc["elements"] = list(H.labels) if H.labels is not None else H.n
    doc["imp"] = [list(r) for r in H.imp]
    doc["one"] = H.one
    if H.zero is not None:
        doc["zero"] = H.zero
    if H.meet is not None:
        doc["meet"] = [list(r) for r in H.meet]
    if tau is not None:
        doc["tau"] = list(tau)
    return doc


def dump(doc) -> str:
    return json.dumps(doc, indent=None, separators=(", ", ": "))


def parse_poset(text: str) -> FinitePoset:
    doc = _load(text, "poset")
    _fields(doc, POSET_FIELDS, ("elements",), "poset")
    n, _ = _elements(doc["elements"], "elements")
    if ("leq" in doc) == ("covers" in doc):
        raise DocumentError("poset: give exactly one of leq or covers")
    pairs = doc.get("leq", doc.get("covers"))
    pairs = _int_table(pairs, "pairs")
    if any(len(p) != 2 for p in pairs):
        raise DocumentError("pairs: each entry must be [a, b]")
    return FinitePoset.from_pairs(n, [tuple(p) for p in pairs])


def poset_labels(text: str):
    doc = _load(text, "poset")
    _, labels = _elements(doc.get("elements", 0), "elements")
    return labels


def parse_map(text: str) -> tuple:
    doc = _load(text, "map")
    _fields(doc, MAP_FIELDS, ("map",), "map")
    if not isinstance(doc["map"], list):
        raise DocumentError("map: expected a list")
    return tuple(_int(x, "map") for x in doc["map"])


def read(path) -> str:
    return Path(path).read_text()
