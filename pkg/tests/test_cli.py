import json

import pytest

from siegeltrace import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def cache(tmp_path):
    return str(tmp_path / "cache")


def test_census_builds_and_is_idempotent(capsys, cache):
    code, out, err = run(capsys, "census", "--primes", "3", "--cache", cache)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("census,")
    assert len(lines) == 4
    assert all(",built," in line for line in lines[1:])
    assert "building" in err

    code, out2, _ = run(capsys, "census", "--primes", "3", "--cache", cache)
    assert code == 0
    body = [line.replace(",cached,", ",built,") for line in out2.strip().splitlines()]
    assert body == lines  # identical content, only the status flips
    assert all(",cached," in line for line in out2.strip().splitlines()[1:])


def test_census_rejects_even_prime(capsys, cache):
    with pytest.raises(SystemExit) as exc:
        cli.main(["census", "--primes", "2", "--cache", cache])
    assert exc.value.code == 2


def test_census_requires_cache_dir(capsys, monkeypatch):
    monkeypatch.delenv(cli.CACHE_ENV_VAR, raising=False)
    parser = cli.build_parser()
    args = parser.parse_args(["census", "--primes", "3"])
    assert cli.cmd_census(args) == cli.EXIT_USAGE


def test_trace_csv_output(capsys, cache):
    run(capsys, "census", "--primes", "3,5", "--cache", cache)
    code, out, _ = run(capsys, "trace", "--k1", "8", "--k2", "6",
                       "--primes", "3,5", "--cache", cache)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k1,k2,p,traceA2,secondRow,endoTerm,fourTimesTrace,heckeTrace,checksPassed"
    assert len(lines) == 3
    assert lines[1].startswith("8,6,3,") and lines[1].endswith(",0,True")


def test_trace_json_output(capsys, cache):
    code, out, _ = run(capsys, "trace", "--k1", "6", "--k2", "4",
                       "--primes", "3", "--cache", cache, "--auto-census",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 1
    assert payload[0]["heckeTrace"] == 0
    assert payload[0]["fourTimesTrace"] == 0
    assert payload[0]["checksPassed"] is True


def test_trace_weight_grid(capsys, cache):
    code, out, _ = run(capsys, "trace", "--max-weight-sum", "12",
                       "--primes", "3", "--cache", cache, "--auto-census")
    assert code == 0
    lines = out.strip().splitlines()
    # (6,4), (7,5), (8,4): every regular even-sum weight with k1+k2 <= 12
    assert len(lines) == 4


def test_trace_rejects_odd_parity(capsys, cache):
    with pytest.raises(SystemExit) as exc:
        cli.main(["trace", "--k1", "7", "--k2", "4", "--primes", "3",
                  "--cache", cache])
    assert exc.value.code == 2
    err = capsys.readouterr().err
    assert "even" in err


def test_trace_missing_cache_exits_3(capsys, cache):
    code, _, err = run(capsys, "trace", "--k1", "6", "--k2", "4",
                       "--primes", "3", "--cache", cache)
    assert code == cli.EXIT_CACHE
    assert "not cached" in err


def test_trace_divisibility_failure_exits_4(capsys, cache):
    code, out, _ = run(capsys, "trace", "--k1", "14", "--k2", "8",
                       "--primes", "3", "--cache", cache, "--auto-census",
                       "--normalization", "7")
    assert code == cli.EXIT_CHECK
    assert "False" in out


def test_cache_env_var_default(capsys, monkeypatch, cache):
    monkeypatch.setenv(cli.CACHE_ENV_VAR, cache)
    parser = cli.build_parser()
    args = parser.parse_args(["census", "--primes", "3"])
    assert args.cache == cache


def test_selftest_command(capsys, cache):
    code, out, _ = run(capsys, "selftest", "--cache", cache)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1].endswith("9/9 suites passed")
    assert all(line.startswith("[PASS]") for line in lines[:-1])


def test_selftest_detects_corrupted_cache(capsys, cache):
    import pathlib

    run(capsys, "census", "--primes", "3", "--cache", cache)
    victim = pathlib.Path(cache) / "genus2-p3.csv"
    text = victim.read_text()
    victim.write_text(text.replace("-4,8,6", "-4,8,7", 1))
    code, out, _ = run(capsys, "selftest", "--cache", cache)
    assert code == cli.EXIT_CHECK
    assert "[FAIL] genus2-masses" in out
