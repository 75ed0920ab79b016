import io
import json
import subprocess
import sys

import pytest
from conftest import FIXTURES, small_algebras
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbext.algebra import with_meet
from hilbext.cli import run_command
from hilbext.documents import (
    DocumentError,
    dump,
    emit_algebra,
    parse_algebra,
    parse_map,
    parse_poset,
)
from hilbext.errors import AxiomViolation, MalformedTableError
from hilbext.frontal import find_successor

H3_DOC = (FIXTURES / "H3.alg").read_text()


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code, _ = run_command([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def fx(name):
    return FIXTURES / name


# documents


def test_parse_two_element():
    doc = parse_algebra('{"elements": 2, "imp": [[1, 1], [0, 1]], "one": 1}')
    assert doc.algebra.n == 2 and doc.tau is None


def test_parse_meet_document():
    doc = parse_algebra((FIXTURES / "H3_meet.alg").read_text())
    assert doc.algebra.meet is not None and doc.algebra.zero == 0
    assert doc.name.startswith("H3")


def test_out_of_range_is_range_error():
    with pytest.raises(MalformedTableError):
        parse_algebra('{"elements": 2, "imp": [[1, 1], [5, 1]], "one": 1}')


def test_unknown_field_rejected():
    with pytest.raises(DocumentError):
        parse_algebra('{"elements": 2, "imp": [[1, 1], [0, 1]], "one": 1, "colour": "red"}')


def test_bad_json_reports_position():
    with pytest.raises(DocumentError, match="line 1"):
        parse_algebra('{"elements": 2,, }')


def test_axiom_failure_carries_witness():
    with pytest.raises(AxiomViolation) as info:
        parse_algebra('{"elements": 2, "imp": [[1, 0], [0, 1]], "one": 1}')
    assert info.value.report.violations


def test_non_frontal_tau():
    text = H3_DOC.rstrip().rstrip("}") + ', "tau": [0, 0, 2]}'
    with pytest.raises(AxiomViolation):
        parse_algebra(text)
    doc = parse_algebra(text, allow_invalid_tau=True)
    assert doc.warnings


def test_poset_documents():
    assert parse_poset('{"elements": 2, "covers": [[0, 1]]}').leq == ((True, True), (False, True))
    assert parse_poset('{"elements": 3, "covers": []}').hasse_edges() == []
    with pytest.raises(AxiomViolation):
        parse_poset('{"elements": 2, "covers": [[0, 1], [1, 0]]}')
    with pytest.raises(DocumentError):
        parse_poset('{"elements": 2, "covers": [], "leq": []}')


def test_map_document():
    assert parse_map('{"map": [0, 2]}') == (0, 2)
    with pytest.raises(DocumentError):
        parse_map('{"map": [0, true]}')


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(small_algebras(5) + small_algebras(5, "bounded_hilbert")), st.booleans(), st.booleans())
def test_round_trip(H, meet, tau):
    if meet and with_meet(H) is not None:
        H = with_meet(H)
    t = find_successor(H) if tau else None
    doc = parse_algebra(dump(emit_algebra(H, t, "x")))
    assert doc.algebra == H
    assert doc.tau == t


# commands


def test_find_successor_on_chain():
    code, out, _ = run("frontal", "find", fx("H3.alg"), "--op", "succ")
    assert code == 0
    assert out.strip() == "S = (0↦a, a↦1, 1↦1)"


def test_find_missing_operator(tmp_path):
    code, out, _ = run("search", "--size", 4, "--class", "hilbert", "--without", "succ")
    line = out.splitlines()[0]
    p = tmp_path / "h.alg"
    p.write_text(line)
    code, out, _ = run("frontal", "find", p, "--op", "succ")
    assert code == 0 and out.startswith("no succ")


def test_extend_vee():
    code, out, _ = run("extend", fx("Hprime.alg"))
    assert code == 0
    assert "L(H): 4 elements" in out
    assert "[0] x^y = {}" in out
    code, out, _ = run("--format", "structured", "extend", fx("Hprime.alg"))
    doc = json.loads(out)
    assert doc["format_version"] == 1
    assert doc["elements"][0]["upset"] == []
    assert len(doc["elements"]) == 4


def test_extend_with_tau():
    code, out, _ = run("extend", fx("H3_succ.alg"))
    assert code == 0 and "tau on L(H): (0↦a, a↦1, 1↦1)" in out


def test_spectrum_command():
    code, out, _ = run("spectrum", fx("H3.alg"))
    assert code == 0 and "P0 < P1" in out


def test_check_pass_and_fail(tmp_path):
    assert run("check", fx("H3_meet.alg"))[0] == 0
    assert run("check", fx("H3.alg"), "--class", "is")[0] == 1
    bad = tmp_path / "bad.alg"
    bad.write_text('{"elements": 2, "imp": [[1, 0], [0, 1]], "one": 1}')
    code, out, _ = run("check", bad)
    assert code == 1 and "H1" in out


def test_lift_and_factor():
    code, out, _ = run("lift", fx("H2.alg"), fx("H3.alg"), "--hom", fx("H2_into_H3.map"))
    assert code == 0 and out.startswith("lift:")
    code, out, _ = run("factor", fx("Hprime.alg"), "--into", fx("H2.alg"), "--hom", fx("Hprime_to_H2.map"))
    assert code == 0 and "factorizations found by exhaustive search: 1" in out


def test_lift_non_hom_fails(tmp_path):
    m = tmp_path / "m.map"
    m.write_text('{"map": [0, 0, 1]}')
    code, out, _ = run("lift", fx("H3.alg"), fx("H2.alg"), "--hom", m)
    assert code == 1


def test_classify():
    code, out, _ = run("frontal", "classify", fx("H3_succ.alg"))
    assert code == 0 and "successor: pass" in out
    assert run("frontal", "classify", fx("H3.alg"))[0] == 2


def test_poset_ops():
    code, out, _ = run("poset", "ops", fx("vee.poset"))
    assert code == 0 and "{} -> {t}" in out
    code, out, _ = run("poset", "ops", fx("chain3.poset"), "--upset", "2")
    assert code == 0 and out.strip() == "{2} -> {1,2}"
    assert run("poset", "ops", fx("chain3.poset"), "--upset", "0")[0] == 2


def test_search_without_gamma():
    code, out, _ = run("search", "--size", 4, "--class", "bounded_hilbert", "--without", "gamma")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "# 1 algebras"
    assert run("search", "--size", 4, "--class", "hilbert", "--without", "gamma")[0] == 2


def test_search_is_deterministic():
    a = run("--format", "structured", "search", "--size", 5, "--class", "bounded_hilbert")
    b = run("--format", "structured", "search", "--size", 5, "--class", "bounded_hilbert")
    assert a == b
    assert json.loads(a[1])["count"] == 8


@pytest.mark.parametrize("name", sorted(p.name for p in FIXTURES.glob("*.alg")))
def test_verify_every_fixture(name):
    code, out, _ = run("verify", fx(name))
    assert code == 0, out


def test_invalid_tau_override(tmp_path):
    p = tmp_path / "bad_tau.alg"
    p.write_text(H3_DOC.rstrip().rstrip("}") + ', "tau": [0, 0, 2]}')
    assert run("verify", p)[0] == 2
    code, out, _ = run("--allow-invalid-tau", "verify", p)
    assert code == 1 and "warning: tau is not frontal" in out and "FAIL tau frontal" in out
    code, out, _ = run("--allow-invalid-tau", "extend", p)
    assert code == 0 and "tau on L(H)" not in out


def test_usage_errors():
    assert run()[0] == 2
    assert run("bogus")[0] == 2
    assert run("verify", fx("missing.alg"))[0] == 2
    code, out, _ = run("--format", "structured", "verify", fx("missing.alg"))
    assert code == 2 and json.loads(out)["error"]["kind"] == "usage"


def test_console_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "hilbext.cli", "frontal", "find", str(fx("H3.alg")), "--op", "gamma"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0 and r.stdout.strip() == "γ = (0↦a, a↦a, 1↦1)"
