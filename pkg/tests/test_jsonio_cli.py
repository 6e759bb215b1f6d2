import json
import subprocess
import sys

import pytest

from semimod import jsonio
from semimod.catalogs import builtin_fixtures
from semimod.cli import main
from semimod.errors import SchemaError
from semimod.presets import kl_dihedral, preset
from semimod.semimodule import Congruence, FinMonoid, Semimodule, are_isomorphic, module_fixture

R3 = kl_dihedral(3)
S3 = dict(builtin_fixtures("s3-kl"))


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(jsonio.dumps(obj))
    return str(p)


@pytest.mark.parametrize("name", ["kl-dihedral:3", "kl-dihedral:5", "boolean", "nat:3", "group:s3",
                                  "kl-hat-s2", "nat-group:2:s2"])
def test_semiring_round_trip(name):
    R = preset(name)
    d = jsonio.semiring_to_dict(R)
    back = jsonio.semiring_from_dict(json.loads(jsonio.dumps(d)))
    assert back == R
    assert jsonio.dumps(jsonio.semiring_to_dict(back)) == jsonio.dumps(d)


@pytest.mark.parametrize("name", sorted(S3))
def test_semimodule_round_trip(name):
    M = S3[name]
    text = jsonio.dumps(jsonio.semimodule_to_dict(M))
    back = jsonio.semimodule_from_dict(json.loads(text))
    assert back == M
    assert jsonio.dumps(jsonio.semimodule_to_dict(back)) == text


def test_m7_actions_preserved():
    back = jsonio.semimodule_from_dict(json.loads(jsonio.dumps(jsonio.semimodule_to_dict(S3["M7"]))))
    assert back.action("s") == (0, 3, 0, 3) and back.action("t") == (0, 0, 3, 3)


def test_finite_semiring_module_round_trip():
    M = module_fixture("trivial-boolean", semiring=preset("nat:3"))
    assert jsonio.semimodule_from_dict(jsonio.semimodule_to_dict(M)) == M


def test_semiring_reference_by_path(tmp_path):
    write(tmp_path, "r.json", jsonio.semiring_to_dict(R3))
    p = write(tmp_path, "m.json", jsonio.semimodule_to_dict(S3["M4"], "r.json"))
    assert jsonio.load_semimodule(p) == S3["M4"]


def test_wrong_action_length_is_schema_error():
    d = jsonio.semimodule_to_dict(S3["M4"])
    d["actions"][1] = d["actions"][1][:3]
    with pytest.raises(SchemaError) as err:
        jsonio.semimodule_from_dict(d)
    assert err.value.path == "$.actions[1]"


def test_schema_errors():
    with pytest.raises(SchemaError):
        jsonio.semiring_from_dict({"kind": "tropical"})
    with pytest.raises(SchemaError):
        jsonio.semiring_from_dict({"kind": "finite", "elements": ["0"], "add": [[0]], "mul": [[0]], "zero": 0})
    d = jsonio.semimodule_to_dict(S3["M1"])
    d["add"][0][0] = 7
    with pytest.raises(SchemaError):
        jsonio.semimodule_from_dict(d)


def test_congruence_round_trip():
    c = Congruence(((0,), (1, 3), (2,)))
    assert jsonio.congruence_from_dict(jsonio.congruence_to_dict(c), 4) == c


def test_dot_m4():
    text = jsonio.export_dot(S3["M4"])
    assert text.startswith("digraph") and text.count("dir=none") == 4
    assert text.count("style=dashed") == 4 and text.count("style=dotted") == 4


def test_dot_m7_rows():
    text = jsonio.export_dot(S3["M7"])
    # s sends (1,0) to (1,1)
    assert 'n1 -> n3 [style=dashed, label="s"]' in text
    assert 'n2 -> n3 [style=dotted, label="t"]' in text


def test_dot_zero_module():
    Z = Semimodule(R3, FinMonoid(((0,),)), tuple((0,) for _ in range(6)))
    text = jsonio.export_dot(Z)
    assert "dir=none" not in text and "n0 -> n0" in text


def test_dot_rejects_non_idempotent():
    with pytest.raises(ValueError):
        jsonio.export_dot(module_fixture("cyclic", n=3))


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cli_build_and_validate(tmp_path, capsys):
    r = str(tmp_path / "r.json")
    assert run(capsys, "build", "--preset", "kl-dihedral:3", "-o", r)[0] == 0
    code, out = run(capsys, "validate", r)
    assert code == 0 and json.loads(out)["valid"]
    bad = jsonio.semiring_to_dict(R3)
    bad["mult"][1][1] = [0, 1, 0, 0, 0, 0]
    code, out = run(capsys, "validate", write(tmp_path, "bad.json", bad))
    assert code == 1 and json.loads(out)["violations"]


def test_cli_cells_and_cell_module(tmp_path, capsys):
    r = write(tmp_path, "r.json", jsonio.semiring_to_dict(kl_dihedral(4)))
    code, out = run(capsys, "cells", r)
    assert code == 0 and len(json.loads(out)["two_sided_cells"]) == 3
    code, out = run(capsys, "cells", r, "--dot")
    assert code == 0 and out.startswith("digraph cells")
    m = str(tmp_path / "c.json")
    assert run(capsys, "cell-module", r, "--left-cell", "s", "--reduced", "-o", m)[0] == 0
    code, out = run(capsys, "quotients", m)
    assert code == 0 and len(json.loads(out)) == 3


def test_cli_check(tmp_path, capsys):
    r = write(tmp_path, "r.json", jsonio.semiring_to_dict(R3))
    m = write(tmp_path, "m.json", jsonio.semimodule_to_dict(S3["M4"]))
    code, out = run(capsys, "check", r, m)
    flags = json.loads(out)
    assert code == 0 and flags["minimal"] and not flags["elementary"]
    assert flags["apex"] == ["s", "t", "st", "ts"]


def test_cli_iso_and_homs(tmp_path, capsys):
    m5 = write(tmp_path, "m5.json", jsonio.semimodule_to_dict(S3["M5"]))
    m6 = write(tmp_path, "m6.json", jsonio.semimodule_to_dict(S3["M6"]))
    assert run(capsys, "iso", m5, m5)[0] == 0
    assert run(capsys, "iso", m5, m6)[0] == 1
    a = write(tmp_path, "a.json", jsonio.semiring_to_dict(preset("nat:1")))
    b = write(tmp_path, "b.json", jsonio.semiring_to_dict(preset("boolean")))
    assert run(capsys, "iso", "--semiring", a, b)[0] == 0
    code, out = run(capsys, "homs", m5, m5)
    assert code == 0 and [0, 1, 2] in json.loads(out)


def test_cli_classify(tmp_path, capsys):
    r = write(tmp_path, "r.json", jsonio.semiring_to_dict(R3))
    out_dir = tmp_path / "out"
    code, out = run(capsys, "classify", r, "--max-size", "4", "--proper", "-o", str(out_dir))
    summary = json.loads(out)
    assert code == 0 and len(summary["minimal"]) == 6 and len(summary["elementary"]) == 6
    assert (out_dir / "summary.json").exists()
    assert len(list(out_dir.glob("simple-*.json"))) == 3


def test_cli_verify(capsys):
    code, out = run(capsys, "verify", "--suite", "s3-kl")
    assert code == 0 and json.loads(out)["pass"]


def test_cli_export_dot(tmp_path, capsys):
    m = write(tmp_path, "m.json", jsonio.semimodule_to_dict(S3["M4"]))
    code, out = run(capsys, "export-dot", m, "--generators", "s")
    assert code == 0 and "style=dashed" in out and "style=dotted" not in out


def test_cli_input_errors(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "missing.json")]) == 2
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    assert main(["validate", str(p)]) == 2
    assert main(["verify", "--suite", "tropical"]) == 2
    assert main(["build", "--preset", "tropical"]) == 2


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "semimod", "build", "--preset", "boolean"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert jsonio.semiring_from_dict(json.loads(proc.stdout)) == preset("boolean")


def test_cell_module_iso_to_catalog(tmp_path, capsys):
    r = write(tmp_path, "r.json", jsonio.semiring_to_dict(R3))
    m = str(tmp_path / "c.json")
    assert run(capsys, "cell-module", r, "--left-cell", "s,ts", "-o", m)[0] == 0
    assert are_isomorphic(jsonio.load_semimodule(m), S3["M4"])
