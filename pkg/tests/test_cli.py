import json
import subprocess
import sys

from hopfhomology.cli import run


def run_capture(argv, capsys):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def test_instances_list(capsys):
    code, out = run_capture(["instances", "list"], capsys)
    assert code == 0
    data = json.loads(out)
    names = {row["name"] for row in data["instances"]}
    assert "sweedler" in names and "monoid01" in names


def test_verify_hopf_sweedler(capsys):
    code, out = run_capture(["verify-hopf", "sweedler"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["galois_invertible"] is True
    assert all(data["checks"].values())
    assert all(data["schauenburg"].values())


def test_verify_hopf_negative_control_exit_one(capsys):
    code, out = run_capture(["verify-hopf", "monoid01"], capsys)
    assert code == 1
    data = json.loads(out)
    assert data["galois_invertible"] is False
    assert data["witnesses"]


def test_verify_hopf_lie(capsys):
    code, out = run_capture(["verify-hopf", "lie-nonabelian2"], capsys)
    assert code == 0
    data = json.loads(out)
    assert all(data["checks"].values())


def test_unknown_instance_usage_error(capsys):
    code = run(["verify-hopf", "nope"])
    assert code == 2


def test_verify_hopf_exit_one_only_for_negative_control(capsys):
    from hopfhomology.instances import builtin_instances

    for name, inst in sorted(builtin_instances().items()):
        code, _ = run_capture(["verify-hopf", name], capsys)
        expected = 0 if inst.expect_hopf else 1
        assert code == expected, name


def test_ext_qs3(capsys):
    code, out = run_capture(["ext", "qs3", "--module", "trivial", "--max-degree", "3"], capsys)
    assert code == 0
    data = json.loads(out)
    assert [row["dim"] for row in data["rows"]] == [1, 0, 0, 0]


def test_ext_window_exceeded_exit_three(capsys):
    code = run(["ext", "env-qeps", "--module", "A", "--max-degree", "3", "--depth", "2"])
    assert code == 3


def test_tor_lie(capsys):
    code, out = run_capture(["tor", "lie-abelian2", "--module", "trivial", "--max-degree", "2"], capsys)
    assert code == 0
    data = json.loads(out)
    assert [row["dim"] for row in data["rows"]] == [1, 2, 1]


def test_cup_table_lie(capsys):
    code, out = run_capture(["cup", "lie-abelian2", "--max-total", "2"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["tables"]


def test_cap_table_lie(capsys):
    code, out = run_capture(["cap", "lie-nonabelian2", "--max-degree", "2"], capsys)
    assert code == 0


def test_duality_nonabelian(capsys):
    code, out = run_capture(["duality", "lie-nonabelian2", "--module", "trivial"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["d"] == 2
    assert data["Astar_dim"] == 1
    assert data["Astar_weights"] == ["1", "0"]
    dims = [(row["ext_dim"], row["tor_dim"], row["bijective"]) for row in data["table"]]
    assert dims == [(1, 1, True), (1, 1, True), (0, 0, True)]


def test_duality_semisimple_findim(capsys):
    code, out = run_capture(["duality", "qs3", "--module", "trivial"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["d"] == 0


def test_oracle_hochschild(capsys):
    code, out = run_capture(["oracle", "hochschild", "qeps", "--max-degree", "3"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["cohomology"] == [2, 1, 1, 1]
    assert data["homology"] == [2, 1, 1, 1]


def test_oracle_unknown_algebra_usage_error(capsys):
    assert run(["oracle", "hochschild", "nope"]) == 2


def test_instances_export_and_load_by_path(tmp_path, capsys):
    code, out = run_capture(["instances", "export", "sweedler"], capsys)
    assert code == 0
    path = tmp_path / "sweedler.json"
    path.write_text(out)
    code, out2 = run_capture(["verify-hopf", str(path)], capsys)
    assert code == 0
    data = json.loads(out2)
    assert data["galois_invertible"] is True
    # ext over the loaded instance works through the same surface
    code, out3 = run_capture(
        ["ext", str(path), "--module", "A", "--max-degree", "1", "--depth", "2"], capsys
    )
    assert code == 0


def test_entry_point_subprocess_determinism():
    cmd = [sys.executable, "-m", "hopfhomology.cli", "verify-hopf", "sweedler"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
