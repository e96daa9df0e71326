import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from monomial_lab.cli import run_command


@pytest.fixture(scope="module")
def schema():
    text = resources.files("monomial_lab").joinpath("report.schema.json").read_text()
    return json.loads(text)


def run(*argv, stdin_text=None):
    out, err = io.StringIO(), io.StringIO()
    stdin = io.StringIO(stdin_text) if stdin_text is not None else None
    code = run_command(list(argv), stdout=out, stderr=err, stdin=stdin)
    return code, out.getvalue(), err.getvalue()


def test_closure_text():
    code, out, _ = run("closure", "--ideal", "x1^2, x2^3", "--format", "text")
    assert code == 0
    assert out == "x1^2, x1*x2^2, x2^3\n"


def test_hilbert_json(schema):
    code, out, _ = run("hilbert", "--n", "3", "--upto", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["results"]["H"] == [1, 3, 6, 10]
    assert doc["results"]["Q"] == [1]
    assert doc["results"]["multiplicity"] == 1
    assert any("n-r" in note for note in doc["results"]["decisions"])


def test_verify_family(schema):
    code, out, _ = run("verify-family", "--n", "3", "--t", "2")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    claims = {c["claim"]: c for c in doc["checks"]}
    for claim in ("closure", "hilbert_function", "series_numerator", "multiplicity",
                  "freiman", "unmixed", "closure_embedded_primes", "astab"):
        assert claims[claim]["passed"], claim
    assert claims["astab"]["witness"]["stabilization_index"] == 2
    assert doc["results"]["overall"] is True


def test_verify_family_t1_records_observation(schema):
    code, out, _ = run("verify-family", "--n", "3", "--t", "1")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert "closure_embedded_primes" not in {c["claim"] for c in doc["checks"]}
    assert doc["results"]["observations"]["closure_embedded_primes"] is False


def test_verify_family_failing_check_exit_code():
    # a window of one power cannot show stabilization at k = 2
    code, out, _ = run("verify-family", "--n", "3", "--t", "2", "--kmax", "1", "--format", "text")
    assert code == 1
    assert "FAIL astab" in out


def test_output_is_deterministic():
    a = run("verify-family", "--n", "3", "--t", "2")
    b = run("verify-family", "--n", "3", "--t", "2")
    assert a == b


def test_power(schema):
    code, out, _ = run("power", "-k", "2", "--ideal", "x1, x2")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["results"]["text"] == "x1^2, x1*x2, x2^2"


def test_ass_plain_and_powers(schema):
    code, out, _ = run("ass", "--ideal", "x1*x2, x1*x3, x2*x3")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["results"]["associated_primes"] == [[1, 2], [1, 3], [2, 3]]
    assert doc["results"]["unmixed"] is True

    code, out, _ = run("ass", "--powers", "3", "--ideal", "x2^2*x3^2, x1^2*x3^2, x1^2*x2^2")
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["results"]["stabilization_index"] == 2
    assert doc["results"]["per_power"][1][-1] == [1, 2, 3]
    assert doc["results"]["certified_beyond_window"] is False


def test_freiman(schema):
    code, out, _ = run("freiman", "--ideal", "x1^4, x1^3*x2, x2^4")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["results"]["is_freiman"] is False
    assert doc["results"]["mu_I2"] == 6


def test_freiman_rejects_mixed_degree():
    code, _, err = run("freiman", "--ideal", "x1^2, x2^3")
    assert code == 2
    assert "equigenerated" in err


def test_json_input_file(tmp_path):
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps({"n": 2, "gens": [[2, 0], [0, 3]]}))
    code, out, _ = run("closure", "--json", str(path), "--format", "text")
    assert code == 0 and out == "x1^2, x1*x2^2, x2^3\n"


def test_json_from_stdin():
    code, out, _ = run("closure", "--json", "-", "--format", "text",
                       stdin_text='{"n": 2, "gens": [[2, 0], [0, 3]]}')
    assert code == 0 and out == "x1^2, x1*x2^2, x2^3\n"


def test_nvars_flag():
    code, out, _ = run("power", "-k", "1", "--ideal", "x1", "--nvars", "3")
    assert json.loads(out)["results"]["ideal"] == {"n": 3, "gens": [[1, 0, 0]]}


@pytest.mark.parametrize(
    "argv",
    [
        ["closure", "--ideal", "x1^0"],
        ["closure"],
        ["bogus"],
        ["power", "--ideal", "x1"],
        ["closure", "--ideal", "x1", "--json", "f.json"],
        ["hilbert", "--n", "1"],
        ["closure", "--json", "/nonexistent/file.json"],
    ],
)
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_resource_cap():
    code, _, err = run("closure", "--ideal", "x1^50, x2^50, x3^50", "--box-cap", "1000")
    assert code == 3
    assert "cap" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "monomial_lab", "closure", "--ideal", "x1^2, x2^3", "--format", "text"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "x1^2, x1*x2^2, x2^3\n"
