import contextlib
import io
import json
import pathlib
import sys

import pytest

from composites import parse_element, parse_ring
from composites.cli import main

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
sys.path.insert(0, str(FIXTURES))

from cases import CASES  # noqa: E402


def run(argv):
    buf, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, buf.getvalue(), err.getvalue()


def test_fixture_corpus_byte_identical():
    assert len(CASES) >= 20
    for name, argv in CASES:
        code, out, _ = run(argv)
        assert code == 0, (name, argv)
        golden = (FIXTURES / f"{name}.json").read_text()
        assert out == golden, name


def test_json_is_valid_and_shaped():
    for name, argv in CASES:
        doc = json.loads((FIXTURES / f"{name}.json").read_text())
        assert doc["ring"] == argv[argv.index("--ring") + 1]
        assert "text" not in doc


def test_cli_element_round_trip():
    for name, argv in CASES:
        doc = json.loads((FIXTURES / f"{name}.json").read_text())
        pair = parse_ring(doc["ring"])
        for key in ("gcd", "lcm"):
            if key in doc:
                e = parse_element(doc[key], pair)
                assert str(e) == doc[key]


def test_text_mode():
    code, out, _ = run(["gcd", "--ring", "Z + X*Q[X]", "2*X", "3*X"])
    assert code == 0 and out == "X\n"
    code, out, _ = run(["dim", "--ring", "Z_(2) + X*Q[X]"])
    assert code == 0 and out.startswith("2\n")


def test_exit_codes():
    code, out, err = run(["props", "--ring", "nonsense"])
    assert code == 2 and out == "" and "parse error" in err
    code, out, err = run(["dim", "--ring", "Q + X*Q(sqrt(-1))[X]"])
    assert code == 3 and out == "" and "NotQuotientField" in err
    code, out, err = run(["gcd", "--ring", "Q + X*Q(sqrt(-1))[X]", "X", "X"])
    assert code == 3 and "NotGCDConfiguration" in err
    code, out, err = run(["gcd", "--ring", "Z + X*Q[X]", "0", "X"])
    assert code == 3 and "ZeroInput" in err


def test_no_partial_output_on_error():
    code, out, _ = run(["classify-prime", "--ring", "Z + X*Q[X]", "prime:K(6)"])
    assert code == 3 and out == ""
