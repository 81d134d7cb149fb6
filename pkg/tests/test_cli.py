from fractions import Fraction

from modlab import find_witness, natural_value_g
from modlab.cli import main
from modlab.report import format_fixed


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_writes_expected_files(tmp_path, capsys):
    code, out, _ = run(
        capsys,
        "generate", "--family", "G", "--K", "3", "--N1", "3", "--N2", "48",
        "--J", "12", "--out", str(tmp_path),
    )
    assert code == 0
    stem = "G_K3_N1-3_N2-48"
    edges = tmp_path / f"{stem}.edges"
    natural = tmp_path / f"{stem}_V.clusters"
    balanced = tmp_path / f"{stem}_U12.clusters"
    assert str(edges) in out and str(natural) in out and str(balanced) in out
    assert edges.read_text().splitlines()[0] == "153 147"
    assert natural.read_text().splitlines()[0] == "153 6"
    assert balanced.read_text().splitlines()[0] == "153 13"


def test_generate_is_byte_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for out_dir in (a, b):
        run(capsys, "generate", "--family", "H", "--K", "2", "--N1", "5", "--N2", "9",
            "--J", "4", "--out", str(out_dir))
    for name in ("H_K2_N1-5_N2-9.edges", "H_K2_N1-5_N2-9_V.clusters", "H_K2_N1-5_N2-9_U4.clusters"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_generate_connected_family_edge_count(tmp_path, capsys):
    code, _, _ = run(capsys, "generate", "--family", "H", "--K", "3", "--N1", "6",
                     "--N2", "108", "--out", str(tmp_path))
    assert code == 0
    header = (tmp_path / "H_K3_N1-6_N2-108.edges").read_text().splitlines()[0]
    n, m = map(int, header.split())
    assert n == 342
    assert 2 * 3 * (6 + 108 - 4) < m < 2 * 3 * (6 + 108 - 2)


def test_generate_rejects_bad_parameters(tmp_path, capsys):
    code, _, err = run(capsys, "generate", "--family", "G", "--K", "1", "--N1", "2",
                       "--N2", "3", "--out", str(tmp_path))
    assert code == 3
    assert "error" in err


def _write_instance(tmp_path, capsys, *extra):
    run(capsys, "generate", "--family", "G", "--K", "3", "--N1", "3", "--N2", "48",
        "--J", "12", "--out", str(tmp_path), *extra)
    stem = "G_K3_N1-3_N2-48"
    return (
        tmp_path / f"{stem}.edges",
        tmp_path / f"{stem}_V.clusters",
        tmp_path / f"{stem}_U12.clusters",
    )


def test_score_reference_instance(tmp_path, capsys):
    edges, natural, _ = _write_instance(tmp_path, capsys)
    code, out, _ = run(capsys, "score", str(edges), str(natural))
    assert code == 0
    header, row = out.splitlines()
    cells = dict(zip(header.split(","), row.split(",")))
    assert abs(float(cells["q_n"]) - float(natural_value_g(3, 3, 48))) < 1e-12
    assert cells["q_n_exact"] == str(natural_value_g(3, 3, 48))
    assert cells["m"] == "147"
    assert cells["K"] == "6"
    assert cells["q_gamma"] == ""


def test_score_single_cluster_is_zero(tmp_path, capsys):
    edges, _, _ = _write_instance(tmp_path, capsys)
    whole = tmp_path / "whole.clusters"
    whole.write_text("153 1\n" + "".join(f"{v} 1\n" for v in range(1, 154)))
    code, out, _ = run(capsys, "score", str(edges), str(whole))
    assert code == 0
    cells = dict(zip(*[line.split(",") for line in out.splitlines()]))
    assert cells["q_n"] == "0.0"
    assert cells["q_n_exact"] == "0"


def test_score_with_gamma(tmp_path, capsys):
    edges, natural, _ = _write_instance(tmp_path, capsys)
    code, out, _ = run(capsys, "score", str(edges), str(natural), "--gamma", "0.5")
    cells = dict(zip(*[line.split(",") for line in out.splitlines()]))
    assert code == 0
    assert cells["q_gamma"] != ""
    assert float(cells["q_gamma"]) > float(cells["q_n"])


def test_score_mismatched_files(tmp_path, capsys):
    edges, _, _ = _write_instance(tmp_path, capsys)
    other = tmp_path / "other.clusters"
    other.write_text("4 1\n1 1\n2 1\n3 1\n4 1\n")
    code, _, err = run(capsys, "score", str(edges), str(other))
    assert code == 3
    assert "error" in err


def test_score_parse_failure_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_text("3 2\n1 junk\n")
    good = tmp_path / "c.clusters"
    good.write_text("3 1\n1 1\n2 1\n3 1\n")
    code, _, err = run(capsys, "score", str(bad), str(good))
    assert code == 2
    assert "line 2" in err


def test_table_one_stdout(capsys):
    code, out, _ = run(capsys, "table", "1")
    assert code == 0
    lines = out.splitlines()
    header = lines[0].split(",")
    assert len(lines) == 5
    by_x = {int(line.split(",")[5]): line.split(",") for line in lines[1:]}
    assert by_x[10][header.index("qn_balanced")] == "0.9340"
    assert by_x[10][header.index("similarity")] == "0.0967"
    assert by_x[4][header.index("chain_break")] == "3-4"


def test_table_two_values(capsys):
    code, out, _ = run(capsys, "table", "2", "--x", "8")
    assert code == 0
    header, row = (line.split(",") for line in out.splitlines())
    cells = dict(zip(header, row))
    assert cells["qn_natural"] == "0.6787"
    assert cells["qn_balanced"] == "0.8986"


def test_table_writes_csv_and_figures(tmp_path, capsys):
    out_csv = tmp_path / "table1.csv"
    figdir = tmp_path / "figs"
    code, _, err = run(capsys, "table", "1", "--out", str(out_csv),
                       "--figures", str(figdir))
    assert code == 0
    assert out_csv.exists()
    bounds_png = figdir / "table1_bounds.png"
    similarity_png = figdir / "table1_similarity.png"
    assert bounds_png.exists() and bounds_png.stat().st_size > 0
    assert similarity_png.exists() and similarity_png.stat().st_size > 0
    assert str(bounds_png) in err


def test_table_byte_determinism(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        run(capsys, "table", "2", "--out", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_sweep_similarity_strictly_decreasing(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "G", "--K", "3", "--x-range", "4..12")
    assert code == 0
    lines = out.splitlines()
    idx = lines[0].split(",").index("similarity_exact")
    values = [Fraction(line.split(",")[idx]) for line in lines[1:]]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_sweep_balanced_column(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "H", "--K", "3", "--x", "6,8,10")
    lines = out.splitlines()
    idx = lines[0].split(",").index("qn_balanced")
    assert [line.split(",")[idx] for line in lines[1:]] == ["0.8743", "0.8986", "0.9182"]


def test_sweep_with_epsilon_reports_witness(capsys):
    code, out, err = run(capsys, "sweep", "--family", "G", "--K", "3",
                         "--x-range", "4..8", "--epsilon", "0.15")
    assert code == 0
    expected = find_witness(3, 0.15, "G")
    assert f"witness: x={expected.x}" in err
    header = out.splitlines()[0].split(",")
    first_ok = next(
        int(line.split(",")[2])
        for line in out.splitlines()[1:]
        if line.split(",")[header.index("witness_ok")] == "true"
    )
    assert first_ok == expected.x


def test_sweep_needs_a_range(capsys):
    code, _, err = run(capsys, "sweep", "--family", "G", "--K", "3")
    assert code == 3
    assert "error" in err


def test_maximize_exhaustive_two_triangles(tmp_path, capsys):
    edges = tmp_path / "tt.edges"
    edges.write_text("6 7\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n3 4\n")
    out_path = tmp_path / "best.clusters"
    code, out, _ = run(capsys, "maximize", str(edges), "--method", "exhaustive",
                       "--quality", "qn", "--out", str(out_path))
    assert code == 0
    header, row = (line.split(",") for line in out.splitlines())
    cells = dict(zip(header, row))
    assert cells["clusters"] == "2"
    assert cells["evaluations"] == "203"
    assert abs(float(cells["score"]) - 5 / 14) < 1e-12
    assert out_path.read_text().splitlines()[0] == "6 2"


def test_maximize_fixed_k_edge_fraction(tmp_path, capsys):
    edges = tmp_path / "p5.edges"
    edges.write_text("5 4\n1 2\n2 3\n3 4\n4 5\n")
    code, out, _ = run(capsys, "maximize", str(edges), "--quality", "qf", "--K", "1")
    cells = dict(zip(*[line.split(",") for line in out.splitlines()]))
    assert code == 0
    assert cells["score"] == "1.0"
    assert cells["f_g_k"] == "1"


def test_maximize_greedy_reference_instance(tmp_path, capsys):
    edges, _, _ = _write_instance(tmp_path, capsys)
    code, out, _ = run(capsys, "maximize", str(edges), "--method", "greedy")
    cells = dict(zip(*[line.split(",") for line in out.splitlines()]))
    assert code == 0
    assert float(cells["score"]) >= float(natural_value_g(3, 3, 48)) - 1e-12
    assert int(cells["clusters"]) >= 1


def test_maximize_guard_exit_code(tmp_path, capsys):
    edges = tmp_path / "big.edges"
    n = 15
    lines = [f"{n} {n - 1}"] + [f"{i} {i + 1}" for i in range(1, n)]
    edges.write_text("\n".join(lines) + "\n")
    code, _, err = run(capsys, "maximize", str(edges), "--method", "exhaustive")
    assert code == 4
    assert "error" in err


def test_generate_unwritable_target(tmp_path, capsys):
    blocker = tmp_path / "occupied"
    blocker.write_text("not a directory\n")
    code, _, err = run(capsys, "generate", "--family", "G", "--K", "1", "--N1", "3",
                       "--N2", "3", "--out", str(blocker))
    assert code == 6
    assert "error" in err


def test_version_flag(capsys):
    try:
        main(["--version"])
    except SystemExit as exc:
        assert exc.code == 0
    assert "modlab" in capsys.readouterr().out
