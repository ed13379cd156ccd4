import json

import pytest

from hyperfaces.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_plain(capsys):
    assert run(capsys, "poly", "--n", "6", "--beta", "3,3", "--format", "plain") == (0, "21*x^2 + 9*x^4\n", "")


def test_poly_special(capsys):
    code, out, _ = run(capsys, "poly", "--n", "5", "--beta", "2,3")
    assert code == 0 and out.strip() == "6*x + 13*x^3 + x^5"


def test_poly_latex_and_json(capsys):
    _, out, _ = run(capsys, "poly", "--n", "6", "--beta", "2,4", "--format", "latex")
    assert out.strip() == r"20 x^2 + \frac{29}{3} x^4 + \frac{1}{3} x^6"
    _, out, _ = run(capsys, "poly", "--n", "6", "--beta", "[3^2]", "--format", "json")
    d = json.loads(out)
    assert d["schema"] == 1 and d["method"] == "closed-form" and d["coefficients"][0] == [2, "21/1"]


def test_poly_unsupported(capsys):
    code, out, err = run(capsys, "poly", "--n", "7", "--beta", "1,2,4")
    assert code == 2 and "--oracle" in err and out == ""


def test_poly_oracle_fallback(capsys):
    code, out, _ = run(capsys, "poly", "--n", "7", "--beta", "1,2,4", "--oracle")
    assert code == 0 and out.strip() == "88/3*x^2 + 37/3*x^4 + 1/3*x^6"


def test_bad_partition_is_usage_error(capsys):
    assert run(capsys, "poly", "--n", "7", "--beta", "3,3")[0] == 2
    assert run(capsys, "poly", "--n", "6", "--beta", "3,,3")[0] == 2


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "6", "--beta", "3,3")
    assert code == 0
    assert "counts: 2:28, 4:12" in out and "agreement: pass" in out
    code, out, _ = run(capsys, "oracle", "--n", "5", "--beta", "1,4", "--format", "json")
    assert json.loads(out)["agreement"] == "pass"


def test_oracle_other_alpha(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "5", "--beta", "5", "--alpha", "1,4")
    assert code == 0 and "agreement: n/a" in out


def test_oracle_bound(capsys, monkeypatch):
    monkeypatch.delenv("HYPERFACES_MAX_N", raising=False)
    assert run(capsys, "oracle", "--n", "12", "--beta", "3,9")[0] == 3
    monkeypatch.setenv("HYPERFACES_MAX_N", "4")
    assert run(capsys, "oracle", "--n", "6", "--beta", "3,3")[0] == 3
    # flag wins over the environment
    assert run(capsys, "oracle", "--n", "6", "--beta", "3,3", "--max-n", "6")[0] == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "7")
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["schema"] == 1


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "8", "--suite", "zeros")
    assert code == 0 and list(json.loads(out)["suites"]) == ["zeros"]


def test_verify_corruption(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "6", "--inject-corruption")
    assert code == 1 and not json.loads(out)["ok"]


def test_table(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert run(capsys, "table", "--n-max", "7", "--out", str(a))[0] == 0
    assert run(capsys, "table", "--n-max", "7", "--out", str(b))[0] == 0
    raw = a.read_bytes()
    assert raw == b.read_bytes()
    assert b"\r" not in raw and raw.endswith(b"\n")
    recs = [json.loads(line) for line in raw.decode().splitlines()]
    keys = [(r["n"], r["beta"]) for r in recs]
    assert keys == [
        (5, "5"), (5, "4,1"), (5, "3,2"),
        (6, "6"), (6, "5,1"), (6, "4,2"), (6, "3,3"),
        (7, "7"), (7, "6,1"), (7, "5,2"), (7, "4,3"),
    ]
    r33 = recs[keys.index((6, "3,3"))]
    assert r33["genus"] == {"2": 1, "4": 0}
    assert r33["checks"]["imaginary_zeros"] == "pass"
    r24 = recs[keys.index((6, "4,2"))]
    assert r24["checks"]["imaginary_zeros"] == "reported"


def test_table_min_part(tmp_path, capsys):
    out = tmp_path / "t.jsonl"
    run(capsys, "table", "--n-max", "8", "--min-part", "3", "--out", str(out))
    betas = [json.loads(l)["beta"] for l in out.read_text().splitlines()]
    assert betas == ["5", "6", "3,3", "7", "4,3", "8", "5,3", "4,4"]


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "6", "--beta", "3,3")
    assert code == 0
    assert out.splitlines()[0].startswith("a = (0, 9/5, 0, -1, 0, 1/5)")
    assert "reconstruction: pass" in out


def test_zeros(capsys):
    code, out, _ = run(capsys, "zeros", "--n", "7", "--beta", "3,4")
    assert code == 0 and "pure_imaginary: true" in out
    _, out, _ = run(capsys, "zeros", "--n", "7", "--beta", "3,4", "--format", "json")
    assert json.loads(out)["pure_imaginary"] is True


def test_xi(capsys):
    assert run(capsys, "xi", "--n", "6", "--classes", "2,4;3,3", "--m", "2") == (0, "28\n", "")
    assert run(capsys, "xi", "--n", "6", "--classes", "2,4;3,3", "--m", "2", "--tuples")[1] == "2520\n"


def test_missing_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run(
        [sys.executable, "-m", "hyperfaces", "poly", "--n", "6", "--beta", "3,3"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and res.stdout == "21*x^2 + 9*x^4\n"
