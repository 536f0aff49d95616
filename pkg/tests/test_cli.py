import json
import subprocess
import sys

import jsonschema
import pytest

from nichols.cli import load_config, main, run
from nichols.fixtures import SPECS
from nichols.serialize import SCHEMAS, parse_braiding
from nichols.verify import golden_names, run_verify

JSON_RUNS = [
    ("hilbert", ["hilbert", "--input", "fixture:s3"]),
    ("hilbert", ["hilbert", "--input", "fixture:sl3_generic", "--kmax", "4"]),
    ("cartan", ["cartan", "--input", "fixture:d21alpha"]),
    ("reflect", ["reflect", "--input", "fixture:sl21", "--index", "2"]),
    ("weylgroupoid", ["weylgroupoid", "--input", "fixture:d21alpha"]),
    ("roots", ["roots", "--input", "fixture:sl21"]),
    ("relations", ["relations", "--input", "fixture:s3", "--degree", "2"]),
    ("relations", ["relations", "--input", "fixture:sl3_generic", "--degree", "3"]),
    ("rank2", ["rank2", "enumerate", "--max-length", "6"]),
    ("rank2", ["rank2", "check", "--seq", "2,2"]),
    ("rank2", ["rank2", "roots", "--seq", "3,1,2,2,1"]),
    ("rank2", ["rank2", "triangulation", "--seq", "1,2,1,2"]),
    ("rank2", ["rank2", "match", "--input", "fixture:b2_generic"]),
    ("verify", ["verify", "sl21"]),
]


@pytest.mark.parametrize("schema,argv", JSON_RUNS, ids=lambda v: v if isinstance(v, str) else "-".join(v[:3]))
def test_json_output_matches_schema_and_is_deterministic(schema, argv):
    out, code = run(argv)
    assert code == 0, out
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS[schema])
    assert run(argv) == (out, code)


@pytest.mark.parametrize("name", sorted(SPECS))
def test_braiding_specs_round_trip(name):
    jsonschema.validate(SPECS[name], SCHEMAS["braiding"])
    b = parse_braiding(SPECS[name])
    again = b.to_json()
    jsonschema.validate(again, SCHEMAS["braiding"])
    assert parse_braiding(json.dumps(again)).to_json() == again


def test_reflect_output_reparses():
    data = json.loads(run(["reflect", "--input", "fixture:sl21", "--index", "2"])[0])
    r = parse_braiding(data["braiding"])
    assert [list(x) for x in r.exponents] == [[3, 4], [4, 3]]


def test_workers_do_not_change_output():
    base = run(["hilbert", "--input", "fixture:sl3"])
    assert run(["hilbert", "--input", "fixture:sl3", "--workers", "3"]) == base


def test_text_outputs():
    assert run(["hilbert", "--input", "fixture:s3", "--format", "text"]) == \
        ("1 3 4 3 1, total 12, factors (1+t)^2(1+t+t^2)\n", 0)
    assert run(["hilbert", "--input", "fixture:rank1_z3", "--format", "text"])[0].startswith("1 1 1, total 3")
    assert run(["hilbert", "--input", "fixture:rank1_one", "--kmax", "5", "--format", "text"]) == \
        ("1 1 1 1 1 1, unterminated\n", 0)
    out, code = run(["rank2", "enumerate", "--max-length", "6", "--format", "text"])
    assert code == 0 and "n=6: 3 classes" in out


def test_dot_output():
    out, code = run(["weylgroupoid", "--input", "fixture:sl21", "--format", "dot"])
    assert code == 0
    assert out.startswith("digraph") and "R2" in out
    assert run(["cartan", "--input", "fixture:sl3", "--format", "dot"])[1] == 2


def test_exit_codes(tmp_path):
    assert run(["hilbert", "--input", '{"kind": "nope"}'])[1] == 2
    assert run(["hilbert", "--input", "{not json"])[1] == 2
    assert run(["hilbert", "--input", str(tmp_path / "missing.json")])[1] == 2
    assert run(["hilbert"])[1] == 2
    assert run(["bogus"])[1] == 2
    assert run(["hilbert", "--input", "fixture:sl3", "--block-cap", "10"])[1] == 3
    assert run(["cartan", "--input", '{"kind":"diagonal","mode":"root_of_unity","order":5,'
                                      '"exponents":[[0,1],[1,2]]}'])[1] == 1
    assert run(["rank2", "match", "--input", "fixture:a1xa1"])[1] == 1
    assert run(["rank2", "roots", "--seq", "2,2,2"])[1] == 2
    # unterminated or infinite results are data
    out, code = run(["weylgroupoid", "--input", "fixture:d21alpha", "--max-objects", "2"])
    assert code == 0 and json.loads(out)["status"] == "infinite"


def test_input_from_file_and_output_file(tmp_path, capsys):
    spec = tmp_path / "s3.json"
    spec.write_text(json.dumps(SPECS["s3"]))
    dest = tmp_path / "out.json"
    code = main(["hilbert", "--input", str(spec), "--output", str(dest)])
    assert code == 0
    assert json.loads(dest.read_text())["total"] == 12


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "nichols.cfg"
    cfg.write_text("k_max = 3\nblock_cap = 5000\n")
    assert load_config(str(cfg))["k_max"] == 3
    data = json.loads(run(["hilbert", "--input", "fixture:rank1_one", "--config", str(cfg)])[0])
    assert data["dims"] == [1, 1, 1, 1]
    data = json.loads(run(["hilbert", "--input", "fixture:rank1_one", "--config", str(cfg),
                           "--kmax", "5"])[0])
    assert data["dims"] == [1] * 6
    bad = tmp_path / "bad.cfg"
    bad.write_text("k_max = lots\n")
    assert run(["hilbert", "--input", "fixture:s3", "--config", str(bad)])[1] == 2


@pytest.mark.parametrize("name", golden_names())
def test_every_golden_fixture_verifies(name):
    report = run_verify(name)
    jsonschema.validate(report, SCHEMAS["verify"])
    assert report["passed"], [c for c in report["checks"] if not c["ok"]]


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "nichols.cli", "verify", "rank1_z3", "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("rank1_z3: pass")
