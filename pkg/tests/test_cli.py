import io
import json
import os
import subprocess
import sys

import pytest

from strengthlab.cli import load_instance, main, parse_instance
from strengthlab.errors import ParseError, ValidationFailed

FIX = os.path.join(os.path.dirname(__file__), "fixtures")


def fx(name):
    return os.path.join(FIX, name)


def cli(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def cli_json(*argv):
    code, text = cli(*argv, "--json", "--no-timing")
    return code, json.loads(text)


def test_report_schema():
    code, doc = cli_json("classify", "finset")
    assert code == 0
    assert set(doc) == {"command", "window", "verdicts", "counterexamples", "elapsed_ms"}
    assert doc["command"][:3] == ["strengthlab", "classify", "finset"]
    assert doc["window"] == ["0", "1", "2"]
    assert doc["elapsed_ms"] == 0
    vals = {v["check"]: (v["passed"], v.get("value")) for v in doc["verdicts"]}
    assert vals == {"well-pointed": (True, None), "functionally complete": (True, None),
                    "WFC count": (True, 1)}


def test_human_text_comes_with_the_json():
    code, text = cli("classify", "finset", "--no-timing")
    head, _, tail = text.partition("{")
    assert "WFC count = 1" in head
    assert json.loads("{" + tail)["command"][1] == "classify"


def test_no_timing_output_is_reproducible():
    a = cli("enumerate-strengths", "finset", "--functor", "square", "--no-timing")
    b = cli("enumerate-strengths", "finset", "--functor", "square", "--no-timing")
    assert a == b


def test_classification_findings_do_not_fail_the_run():
    code, doc = cli_json("classify", "finsetpt-cartesian")
    assert code == 0
    verdicts = {v["check"]: v["passed"] for v in doc["verdicts"]}
    assert verdicts["well-pointed"] is False
    assert verdicts["functionally complete"] is False
    assert {c["check"] for c in doc["counterexamples"]} == {"well-pointed", "functionally complete"}


def test_disc_has_no_strength_and_a_blocking_pair():
    code, doc = cli_json("enumerate-strengths", "finpos", "--functor", "disc")
    assert code == 0
    count = next(v for v in doc["verdicts"] if v["check"] == "strengths for disc")
    assert count["value"] == 0
    block = next(c for c in doc["counterexamples"] if c["check"] == "blocking pair")
    assert block["witness"] == {"Γ": "chain2", "X": "chain2"}


def test_square_strength_is_unique_and_forced():
    code, text = cli("enumerate-strengths", "finset", "--functor", "square", "--no-timing")
    assert code == 0
    assert "strengths for square = 1" in text


def test_table_category_file():
    code, doc = cli_json("check", fx("two_objects.inst"))
    assert code == 0
    assert doc["window"] == ["A", "B"]
    assert all(v["passed"] for v in doc["verdicts"])


def test_mutant_table_fails_with_triple():
    code, doc = cli_json("check", fx("two_objects_mutant.inst"))
    assert code == 1
    (cx,) = doc["counterexamples"]
    assert cx["check"] == "input: associativity"
    assert cx["witness"] == {"h": "g", "g": "e", "f": "e"}


def test_load_instance_raises_on_invalid_tables():
    with pytest.raises(ValidationFailed) as e:
        load_instance(fx("two_objects_mutant.inst"))
    assert e.value.report.failed_laws() == ["associativity"]


def test_builtin_instance_file():
    b = load_instance(fx("writer.inst"))
    assert b.params == {"modulus": 2}
    assert set(b.monads) >= {"str", "strprime"}


@pytest.mark.parametrize("text", [
    "object A\nmorph f : A -> Q\n",
    "object A\nfrobnicate\n",
    "object A elem a\nmorph f : A -> A map a->zz\n",
    "object A\nobject B\nmonoidal table\n",
])
def test_parse_errors(text):
    with pytest.raises((ParseError, ValidationFailed)):
        parse_instance(text)


def test_parse_error_exit_code(tmp_path):
    p = tmp_path / "bad.inst"
    p.write_text("object A\nfrobnicate\n")
    assert cli("check", str(p))[0] == 2


def test_usage_errors_exit_2():
    assert cli("check", "nosuch")[0] == 2
    assert cli("check", "finset", "--monad", "nosuch")[0] == 2
    assert cli("frobnicate")[0] == 2
    assert cli("check", "finset", "--commutative")[0] == 2
    assert cli("check", "finset", "--param", "E=9")[0] == 2


def test_law_failure_exits_1():
    code, doc = cli_json("check", "finset", "--monad", "exc", "--commutative")
    assert code == 1
    cx = next(c for c in doc["counterexamples"] if c["check"].startswith("commutative"))
    assert cx["witness"]["law"] == "Kock square"


def test_writer_is_commutative():
    code, doc = cli_json("check", fx("writer.inst"), "--monad", "str", "--commutative")
    assert code == 0
    assert any(v["check"] == "lax monoidal: associativity" for v in doc["verdicts"])


def test_report_file(tmp_path):
    dest = tmp_path / "r.json"
    code, text = cli("classify", "bool2", "--no-timing", "--report", str(dest))
    assert code == 0
    assert json.loads(dest.read_text()) == json.loads(text[text.index("{"):])


def test_run_compare_reports_the_difference():
    code, doc = cli_json("run", fx("emit.let"), "--instance", "writer-z2", "--monad", "str",
                         "--compare", "strprime")
    assert code == 1
    (cx,) = doc["counterexamples"]
    assert cx["witness"]["str"] == "(0, 1)"
    assert cx["witness"]["strprime"] == "(1, 1)"


def test_run_with_signature_and_context(tmp_path):
    prog = tmp_path / "tick.let"
    prog.write_text("let u = tick(()) in return c\n")
    code, text = cli("run", str(prog), "--instance", "writer-z2", "--monad", "strprime",
                     "--sig", fx("writer.sig"), "--ctx", "c:Z2", "--no-timing")
    assert code == 0
    assert "{'c': 0} -> (1, 1)" in text


def test_let_syntax_error_exit_2(tmp_path):
    prog = tmp_path / "bad.let"
    prog.write_text("let x = in x")
    assert cli("run", str(prog), "--instance", "finset", "--monad", "exc")[0] == 2


def test_convert_round_trip():
    code, doc = cli_json("convert", "writer-z2", "--monad", "strprime", "--from", "kleisli",
                         "--to", "strength")
    assert code == 0
    checks = {v["check"]: v["passed"] for v in doc["verdicts"]}
    assert checks["round trip is the identity"]
    assert checks["underlying monad preserved"]


def test_enumerate_wfc():
    code, text = cli("enumerate-wfc", "klexc", "--param", "E=1", "--no-timing")
    assert code == 0
    assert "WFC structures on the window = 1" in text
    # with two exceptions the registered sections are not natural in the context
    code, text = cli("enumerate-wfc", "klexc", "--no-timing")
    assert code == 1
    assert "WFC structures on the window = 0" in text
    assert "FAIL e0: naturality in Γ" in text


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "strengthlab", "classify", "bool2", "--json",
                        "--no-timing"], capture_output=True, text=True, timeout=120)
    assert r.returncode == 0
    assert json.loads(r.stdout)["command"][1] == "classify"
