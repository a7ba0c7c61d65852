import json
import subprocess
import sys

import pytest

from macdaha import cli
from macdaha.report import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_apply_examples(capsys):
    assert run(capsys, "apply", "--N", "2", "--op", "M:1:2", "--f", "1")[:2] == (0, "t*s[2] - s[1,1]")
    assert run(capsys, "apply", "--N", "3", "--op", "Mtinf:3:1", "--f", "1", "--basis", "x")[1] == "x1*x2*x3"
    code, out, err = run(capsys, "apply", "--N", "2", "--op", "M:3:0", "--f", "p1")
    assert (code, out) == (0, "0") and "exceeds" in err


def test_apply_monomial_basis(capsys):
    assert run(capsys, "apply", "--N", "2", "--op", "M:1:2", "--basis", "m")[1] == "t*m[2] + (t - 1)*m[1,1]"


def test_apply_other_constructors(capsys):
    code, a, _ = run(capsys, "apply", "--N", "2", "--op", "Mschur:1,1", "--f", "s[1]")
    code2, b, _ = run(capsys, "apply", "--N", "2", "--op", "M:2:1", "--f", "m[1]")
    assert code == code2 == 0 and a == b
    code, out, _ = run(capsys, "apply", "--N", "2", "--op", "D:1:x^[2]", "--f", "e[1]^2 - 2*e[2]")
    from macdaha.coeff import x
    from macdaha.macops import build_D
    from macdaha.polyx import power_sum
    assert code == 0 and out == cli.render_result(build_D(1, x(1) ** 2, 2).act(power_sum(2, 2)), 2, "s")
    assert run(capsys, "apply", "--N", "2", "--op", "dual:1:0", "--f", "p[-1]")[0] == 0


@pytest.mark.parametrize("argv", [
    ["apply", "--N", "2", "--op", "Q:1"],
    ["apply", "--N", "2", "--op", "M:1:2", "--f", "e[1"],
    ["apply", "--N", "2", "--op", "M:1:2", "--f", "y[1]"],
    ["apply", "--N", "2", "--op", "M:1:2", "--f", "m[1,2]"],
    ["apply", "--N", "9", "--op", "M:1:2"],
    ["suite", "nosuch"],
    ["suite", "asm", "--window", "3:1"],
    ["suite", "asm", "--window", "x"],
    ["suite", "daha", "--N", "1"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_suite_asm_reports_seven(capsys):
    code, out, _ = run(capsys, "suite", "asm", "--n", "3", "--output", "json")
    assert code == 0
    (rep,) = json.loads(out)
    assert {"name": "asm-count-3: 7", "status": "pass", "witness": None} in rep["checks"]


def test_json_round_trip_and_ordering(capsys):
    code, out, _ = run(capsys, "suite", "lambdadet", "asm", "--n", "3", "--output", "json")
    assert code == 0
    data = json.loads(out)
    for d in data:
        assert d["schema"] == 1
        rep = Report.from_dict(d)
        assert rep.to_dict() == d
        names = [c["name"] for c in d["checks"]]
        assert names == sorted(names)


def test_failing_suite_exits_1(capsys):
    code, out, _ = run(capsys, "suite", "morphism", "--N", "2")
    assert code == 1 and "morphism-full" in out


def test_probabilistic_mode_agrees_on_exchange(capsys):
    args = ["suite", "exchange", "--N", "2", "--window", "-1:2", "--output", "json"]
    exact = json.loads(run(capsys, *args)[1])
    prob = json.loads(run(capsys, *args, "--mode", "probabilistic", "--seed", "7")[1])
    status = lambda d: [(c["name"], c["status"]) for r in d for c in r["checks"]]  # noqa: E731
    assert status(exact) == status(prob)
    assert prob[0]["params"]["mode"] == "probabilistic"


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv(cli.SEED_ENV, "11")
    cfg_seen = {}
    real = cli.run_suites

    def spy(names, cfg):
        cfg_seen["seed"] = cfg.seed
        return real(names, cfg)

    monkeypatch.setattr(cli, "run_suites", spy)
    assert cli.main(["suite", "asm", "--n", "2"]) == 0
    assert cfg_seen["seed"] == 11


def test_parse_expr_arithmetic():
    from macdaha.polyx import elementary, power_sum
    f = cli.parse_expr("3*e[2] - p[1]^2 + 2", 3)
    assert f == 3 * elementary(2, 3) - power_sum(1, 3) ** 2 + 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "macdaha", "apply", "--N", "2", "--op", "M:1:0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() != ""


def test_every_suite_is_registered():
    expected = {"daha", "genmac", "exchange", "ef", "psi-e", "psi-f", "psi-pf", "serre", "plethysm",
                "commuting", "shuffle", "morphism", "mtwopol", "quadratic", "eha", "asm", "lambdadet",
                "qdet", "msystem", "dofm", "eigen"}
    assert set(cli.SUITES) == expected
