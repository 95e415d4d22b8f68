import json

from riordan.cli import main
from riordan.families import reference_B20, robbins


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_matrix_table(capsys):
    rc, out = run(capsys, "matrix", "R:1", "6")
    assert rc == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert rows[5] == ["351", "175", "76", "27", "7", "1"]


def test_matrix_csv_pascal(capsys):
    rc, out = run(capsys, "matrix", "pascal", "4", "--format", "csv")
    assert rc == 0
    assert out.strip().splitlines() == ["1,0,0,0", "1,1,0,0", "1,2,1,0", "1,3,3,1"]


def test_matrix_json_roundtrip(capsys):
    rc, out = run(capsys, "minors", "R:1", "11", "--symmetrize", "--format", "json")
    assert rc == 0
    values = [int(s) for s in json.loads(out)]
    assert values == [robbins(n + 1) for n in range(11)]
    assert values[-1] == 31095744852375  # exceeds 2**53; decimal text survives


def test_matrix_vertex20_json(capsys):
    rc, out = run(capsys, "matrix", "vertex20", "3", "--format", "json")
    assert rc == 0
    from riordan.bivar import expand
    from riordan.families import twenty_vertex_gf

    expected = expand(twenty_vertex_gf(), 3)
    assert [[int(v) for v in row] for row in json.loads(out)] == [
        [int(v) for v in row] for row in expected.rows
    ]


def test_verify_seed_flag(capsys):
    rc, _ = run(capsys, "verify", "group-laws", "--seed", "7")
    assert rc == 0


def test_symmetrize_matches_display(capsys):
    rc, out = run(capsys, "symmetrize", "R:1", "6", "--format", "csv")
    assert rc == 0
    assert out.strip().splitlines()[1] == "1,3,4,5,6,7"


def test_minors_vertex20(capsys):
    rc, out = run(capsys, "minors", "R:2", "9", "--symmetrize")
    assert rc == 0
    assert [int(v) for v in out.split()] == reference_B20()
    rc, out = run(capsys, "minors", "vertex20", "9")
    assert rc == 0
    assert [int(v) for v in out.split()] == reference_B20()


def test_minors_inverse_family(capsys):
    rc, out = run(capsys, "minors", "Rinv:0", "9", "--symmetrize")
    assert rc == 0
    assert [int(v) for v in out.split()] == [1, -3, -13, 81, 144, -2017, -1757, 79513, 22704]


def test_usage_errors(capsys):
    rc, _ = run(capsys, "matrix", "nosuch", "4")
    assert rc == 2
    rc, _ = run(capsys, "matrix", "R:x", "4")
    assert rc == 2
    rc, _ = run(capsys, "symmetrize", "vertex20", "4")
    assert rc == 2
    rc, _ = run(capsys, "minors", "asm-classical", "4", "--symmetrize")
    assert rc == 2
    rc, _ = run(capsys, "nosuchcommand")
    assert rc == 2


def test_precision_exit_code(capsys):
    rc, _ = run(capsys, "matrix", "R:1", "8", "--order", "4")
    assert rc == 3


def test_output_determinism(capsys):
    rc1, out1 = run(capsys, "verify", "group-laws", "--json")
    rc2, out2 = run(capsys, "verify", "group-laws", "--json")
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_verify_robbins(capsys):
    rc, out = run(capsys, "verify", "robbins")
    assert rc == 0
    lines = out.strip().splitlines()
    minors = [l for l in lines if l.split()[1].startswith("robbins/minor-")]
    assert len(minors) == 11
    assert all(l.startswith("PASS") for l in minors)


def test_verify_all_json(capsys):
    rc, out = run(capsys, "verify", "all", "--json")
    assert rc == 0
    report = json.loads(out)
    assert report["exit_status"] == 0
    suites = {s["suite"] for s in report["suites"]}
    assert suites == {
        "robbins", "vertex20", "table6", "inverse6", "tilde",
        "closed-forms", "factorization", "gf-identities", "group-laws",
    }
    gf = next(s for s in report["suites"] if s["suite"] == "gf-identities")
    conjecture = [c for c in gf["checks"] if c["id"].startswith("conjecture/")]
    assert len(conjecture) == 6
    assert all(c["status"] == "reported" for c in conjecture)
    assert gf["counts"]["fail"] == 0
    # every numeric field round-trips through the JSON as decimal text
    rob = next(s for s in report["suites"] if s["suite"] == "robbins")
    big = next(c for c in rob["checks"] if c["id"] == "robbins/minor-10")
    assert int(big["actual"]) == 31095744852375


def test_oeis_check_robbins(capsys, tmp_path):
    lines = "\n".join(f"{n} {robbins(n)}" for n in range(12)) + "\n"
    (tmp_path / "b005130.txt").write_text(lines)
    rc, out = run(
        capsys, "oeis", "A005130", "--check", "robbins",
        "--offline", "--cache-dir", str(tmp_path),
    )
    assert rc == 0
    assert "match" in out


def test_oeis_print_values(capsys, tmp_path):
    (tmp_path / "b358069.txt").write_text(
        "\n".join(f"{n + 1} {v}" for n, v in enumerate(reference_B20())) + "\n"
    )
    rc, out = run(
        capsys, "oeis", "A358069", "--offline", "--cache-dir", str(tmp_path),
        "--format", "csv",
    )
    assert rc == 0
    assert out.strip() == ",".join(str(v) for v in reference_B20())


def test_oeis_check_catalan_triangle(capsys, tmp_path):
    # first rows of the Catalan matrix, built here from the ballot recurrence
    # T(n,k) = T(n-1,k-1) + T(n,k+1), independent of the series machinery
    rows = [[0] * 11 for _ in range(10)]
    rows[0][0] = 1
    for n in range(1, 10):
        for k in range(n, 0, -1):
            rows[n][k] = rows[n - 1][k - 1] + rows[n][k + 1]
        rows[n][0] = rows[n][1]
    flat = [rows[n][k] for n in range(10) for k in range(n + 1)]
    assert flat[:15] == [1, 1, 1, 2, 2, 1, 5, 5, 3, 1, 14, 14, 9, 4, 1]
    (tmp_path / "b033184.txt").write_text(
        "\n".join(f"{i + 1} {v}" for i, v in enumerate(flat)) + "\n"
    )
    rc, out = run(
        capsys, "oeis", "A033184", "--check", "catalan",
        "--offline", "--cache-dir", str(tmp_path),
    )
    assert rc == 0
    assert "match" in out


def test_oeis_exit_codes(capsys, tmp_path):
    rc, _ = run(capsys, "oeis", "nonsense")
    assert rc == 2
    rc, _ = run(capsys, "oeis", "A005130", "--offline", "--cache-dir", str(tmp_path))
    assert rc == 4
    (tmp_path / "b005130.txt").write_text("0 1\nbroken line here\n")
    rc, _ = run(capsys, "oeis", "A005130", "--offline", "--cache-dir", str(tmp_path))
    assert rc == 5


def test_oeis_mismatch_fails(capsys, tmp_path):
    (tmp_path / "b005130.txt").write_text("0 1\n1 1\n2 2\n3 99\n")
    rc, out = run(
        capsys, "oeis", "A005130", "--check", "robbins",
        "--offline", "--cache-dir", str(tmp_path),
    )
    assert rc == 1
    assert "MISMATCH" in out
