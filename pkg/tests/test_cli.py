import json
import subprocess
import sys

import pytest
from mpmath import mp, mpf

from arcsine_moments.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_integral_at_one(capsys):
    code, out = run(capsys, "integral", "--n", "0", "--q", "1", "--x", "1")
    lines = out.splitlines()
    assert code == 0
    assert lines[:2] == ["x*a + s - 1", "pi/2 - 1"]
    assert lines[2] == "0.570796326794896619231321691640"


def test_integral_symbolic_only(capsys):
    code, out = run(capsys, "integral", "--n", "0", "--q", "1")
    assert out.strip() == "x*a + s - 1"


def test_integral_sqrt2_point_json(capsys):
    code, out = run(capsys, "integral", "--n", "0", "--q", "1", "--x", "sqrt2/2", "--format", "json")
    body = json.loads(out)
    assert body["exact"] == "sqrt2*pi/8 - 1 + sqrt2/2"
    assert {"terms", "exact_terms", "value"} <= set(body)


def test_integral_latex(capsys):
    _, out = run(capsys, "integral", "--n", "1", "--q", "2", "--format", "latex")
    assert "\\arcsin" in out or "a^{2}" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("integral", "--n", "2", "--q", "0"),
        ("integral", "--n", "0", "--q", "1", "--x", "1.5"),
        ("series",),
        ("series", "--id", "9.99"),
        ("series", "--id", "2.18", "--p", "0"),
        ("pi", "--family", "even", "--p", "0"),
        ("pi", "--family", "odd", "--p", "1", "--n", "0"),
        ("verify", "--suite", "nosuch"),
        ("integral", "--n", "0", "--q", "1", "--prec", "20"),
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as e:
        main(list(argv))
    assert e.value.code == 2


def test_series_sqrt2_point(capsys):
    code, out = run(capsys, "series", "--id", "2.17", "--p", "0", "--format", "json")
    body = json.loads(out)
    assert body["rhs_exact"] == "2 - sqrt2"
    assert body["within_tail"] is True and body["converged"] is True


def test_series_partial_fraction_at_one(capsys):
    _, out = run(capsys, "series", "--id", "5.2", "--p", "1", "--n", "1", "--m", "2", "--x", "1",
                 "--terms", "100000", "--format", "json")
    body = json.loads(out)
    assert body["within_tail"] is True
    with mp.workprec(128):
        assert abs(mpf(body["rhs"]) - (mp.pi**3 / 96 - 47 * mp.pi / 144 + mpf(20) / 27)) < mpf(10) ** -28


def test_series_zero_terms(capsys):
    code, out = run(capsys, "series", "--id", "2.18", "--p", "1", "--terms", "0", "--format", "json")
    body = json.loads(out)
    assert code == 0 and body["converged"] is False and body["terms_used"] == 0


def test_series_list(capsys):
    _, out = run(capsys, "series", "--list", "--format", "csv")
    rows = out.splitlines()
    assert rows[0] == "id,params,description"
    assert any(r.startswith("2.17,p,") for r in rows)


def test_pi_table_csv_default(capsys):
    _, out = run(capsys, "pi", "--family", "even", "--p", "1", "--n", "16,64,256")
    rows = out.splitlines()
    assert rows[0] == "n,value,abs_error"
    errs = [float(r.split(",")[2]) for r in rows[1:]]
    assert errs == sorted(errs, reverse=True)


def test_pi_odd_p0_is_pi_everywhere(capsys):
    _, out = run(capsys, "pi", "--family", "odd", "--p", "0", "--n", "16,256,4096", "--format", "json")
    rows = json.loads(out)["rows"]
    assert all(r["value"] == "3.14159265358979323846264338328" for r in rows)


def test_pi_even_near_square(capsys):
    _, out = run(capsys, "pi", "--family", "even", "--p", "1", "--n", "64", "--format", "json")
    v = float(json.loads(out)["rows"][0]["value"])
    assert abs(v - 9.8696) < 1


def test_verify_exit_status(capsys):
    code, out = run(capsys, "verify", "--suite", "lemma43", "--pmax", "50")
    assert code == 0 and out.splitlines()[-1] == "lemma43: 200/200 passed"
    code, _ = run(capsys, "verify", "--suite", "cor54", "--lmax", "200")
    assert code == 0


def test_tables(capsys):
    _, out = run(capsys, "tables", "--kind", "G", "--pmax", "1", "--kmax", "2")
    assert "1,2,10,9" in out.splitlines()
    _, out = run(capsys, "tables", "--kind", "H", "--pmax", "2", "--kmax", "3", "--format", "json")
    assert {"p": 2, "k": 3, "num": "5", "den": "16"} in json.loads(out)


def _cli(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "arcsine_moments.cli", *argv], capture_output=True, env=env, check=False)


@pytest.mark.parametrize(
    "argv",
    [
        ("series", "--id", "2.19", "--p", "2", "--format", "json"),
        ("pi", "--family", "odd", "--p", "2", "--n", "16,64"),
        ("integral", "--n", "3", "--q", "4", "--x", "0.3", "--format", "csv"),
    ],
)
def test_byte_identical_reruns(argv):
    a, b = _cli(*argv), _cli(*argv)
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_more_digits_extend_the_same_number(capsys):
    for D in (10, 25, 40):
        _, short = run(capsys, "integral", "--n", "2", "--q", "3", "--x", "0.77", "--digits", str(D), "--format", "json")
        _, long = run(capsys, "integral", "--n", "2", "--q", "3", "--x", "0.77", "--digits", str(D + 10), "--format", "json")
        s, l = json.loads(short)["value"], json.loads(long)["value"]
        with mp.workprec(256):
            # the short string is the long one rounded to D significant digits
            assert abs(mpf(s) - mpf(l)) <= abs(mpf(l)) * mpf(10) ** (1 - D) / 2


def test_environment_default_precision():
    import os

    env = dict(os.environ, ARCSINE_MOMENTS_PREC="64")
    low = _cli("integral", "--n", "0", "--q", "3", "--x", "0.9", "--digits", "40", env=env).stdout
    flag = _cli("integral", "--n", "0", "--q", "3", "--x", "0.9", "--digits", "40", "--prec", "64").stdout
    high = _cli("integral", "--n", "0", "--q", "3", "--x", "0.9", "--digits", "40", "--prec", "256", env=env).stdout
    assert low == flag
    assert low != high
