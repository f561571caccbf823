"""CLI subcommands, file formats, and exit codes."""

import numpy as np

from sstwalk.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_period_k2m(capsys):
    rc, out, _ = run(capsys, "period", "--family", "k2m", "--m", "3")
    assert rc == 0
    assert out.splitlines()[0] == "PERIODIC min_period=4 L={1,2,4}"


def test_period_circulant(capsys):
    rc, out, _ = run(capsys, "period", "--family", "circulant",
                     "--m", "3", "--c", "1", "--d", "2")
    assert rc == 0
    assert "PERIODIC min_period=8" in out


def test_transfer_gp(capsys):
    rc, out, _ = run(capsys, "transfer", "--family", "gp", "--k", "2", "--n", "4")
    assert rc == 0
    assert out.strip() == "TRANSFER time=3 gamma=+1"


def test_transfer_report_split(capsys):
    rc, out, _ = run(capsys, "transfer", "--family", "circulant",
                     "--m", "3", "--c", "1", "--d", "2", "--report-split")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "TRANSFER time=4 gamma=-1"
    assert lines[1] == "SPLIT plus=[-1/2 0 1] minus=[0 1] gamma=+1"


def test_dump_h(capsys):
    rc, out, _ = run(capsys, "psi", "--family", "k2m", "--m", "2", "--dump-H")
    assert rc == 0
    assert any(line.startswith("H_rat ") for line in out.splitlines())
    assert any(line.startswith("delta_sq ") for line in out.splitlines())
    assert any(line.startswith("PSI ") for line in out.splitlines())
    assert any(line.startswith("POLE_FACTOR ") for line in out.splitlines())


def test_simulate_circulant_figures(capsys):
    """The t=0 and t=4 amplitude tables land on the sender/receiver arcs with
    a single flipped sign (the gamma = -1 transfer)."""
    rc, out, _ = run(capsys, "simulate", "--family", "circulant",
                     "--m", "3", "--c", "1", "--d", "2",
                     "--state", "w1", "--times", "0,4")
    assert rc == 0
    blocks = {}
    current = None
    for line in out.splitlines():
        if line.startswith("t="):
            current = int(line[2:])
            blocks[current] = {}
        elif line.strip():
            arc, re_s, im_s = line.split()
            blocks[current][arc] = complex(float(re_s), float(im_s))
    r = 1 / np.sqrt(2)
    assert abs(blocks[0]["(0,1)"] - r) < 1e-9
    assert abs(blocks[0]["(0,4)"] + r) < 1e-9
    assert abs(blocks[4]["(3,1)"] + r) < 1e-9
    assert abs(blocks[4]["(3,4)"] - r) < 1e-9
    assert set(blocks[4]) == {"(3,1)", "(3,4)"}


def test_simulate_octahedron_t6(capsys):
    rc, out, _ = run(capsys, "simulate", "--family", "circulant",
                     "--m", "3", "--c", "1", "--d", "2",
                     "--state", "uniform", "--times", "6", "--coins", "/dev/null")
    assert rc == 0
    lines = [line for line in out.splitlines() if line.startswith("  (3,")]
    assert len(lines) == 4
    for line in lines:
        assert abs(float(line.split()[1]) - 0.5) < 1e-9


def test_graph_file_roundtrip(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text("n 3\n0 1\n1 2\n")
    rc, out, _ = run(capsys, "transfer", "--graph", str(path), "--a", "0", "--b", "2")
    assert rc == 0
    assert out.strip() == "TRANSFER time=2 gamma=+1"


def test_subspace_file(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_text("1 0 -1 0\n0 1 0 -1\n")
    coins = tmp_path / "c.txt"
    coins.write_text("coin 0 basis 2 1 0 -1 0 0 1 0 -1\n"
                     "coin 3 basis 2 1 0 -1 0 0 1 0 -1\n")
    rc, out, _ = run(capsys, "transfer", "--family", "circulant",
                     "--m", "3", "--c", "1", "--d", "2",
                     "--coins", str(coins), "--subspace", str(path))
    assert rc == 0
    assert out.strip() == "TRANSFER time=4 gamma=-1"


def test_family_battery(capsys, monkeypatch):
    monkeypatch.setenv("SST_SEED", "5")
    rc, out, _ = run(capsys, "family", "--family", "k2m", "--m", "3")
    assert rc == 0
    for line in out.splitlines():
        assert line.startswith("CASE") and line.endswith("status=PASS")


def test_missing_file_exit_2(capsys):
    rc, _, err = run(capsys, "period", "--graph", "/does/not/exist")
    assert rc == 2 and "not found" in err


def test_missing_coin_file_exit_2(capsys):
    rc, _, err = run(capsys, "period", "--family", "k2m", "--m", "3",
                     "--coins", "/does/not/exist")
    assert rc == 2 and "coin file" in err


def test_bad_family_args_exit_2(capsys):
    rc, _, err = run(capsys, "period", "--family", "circulant", "--m", "3")
    assert rc == 2


def test_no_source_exit_2(capsys):
    rc, _, err = run(capsys, "period")
    assert rc == 2 and "graph source" in err


def test_not_periodic_still_exit_0(tmp_path, capsys):
    path = tmp_path / "kite.txt"
    path.write_text("n 5\n0 1\n0 2\n1 2\n2 3\n3 4\n")
    rc, out, _ = run(capsys, "period", "--graph", str(path), "--a", "0", "--b", "1")
    assert rc == 0
    assert out.strip() == "NOT_PERIODIC reason=support-not-cyclotomic"


def test_unknown_clone_selector_rejected(capsys):
    rc, _, err = run(capsys, "psi", "--family", "k2m", "--m", "2", "--S", "all")
    assert rc == 2 and "auto-a" in err


def test_human_format(capsys):
    rc, out, _ = run(capsys, "transfer", "--family", "gp", "--k", "2", "--n", "4",
                     "--format", "human")
    assert rc == 0
    assert "occurs at step 3" in out and "TRANSFER time=3" in out


def test_family_default_battery(capsys, monkeypatch):
    monkeypatch.setenv("SST_SEED", "0")
    rc, out, _ = run(capsys, "family")
    assert rc == 0
    lines = [line for line in out.splitlines() if line.startswith("CASE")]
    assert len(lines) >= 8
    assert all(line.endswith("status=PASS") for line in lines)
