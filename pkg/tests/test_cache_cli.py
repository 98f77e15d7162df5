"""Cache roundtrips and the command-line surface."""

import json
import logging

from rootwald import cache, cli
from rootwald.field import FieldElement
from rootwald.poly import Polynomial


def test_group_roundtrip_is_byte_identical(f4_group, tmp_path):
    a = cache.save_group(f4_group, tmp_path / "one", key="F4")
    b = cache.save_group(f4_group, tmp_path / "two", key="F4")
    assert a.read_bytes() == b.read_bytes()
    loaded = cache.load_group("F4", tmp_path / "one")
    assert loaded is not None
    assert loaded.name == "W(F4)"
    assert loaded.order == 1152
    assert loaded.elements == f4_group.elements


def test_group_cache_miss_and_corruption(tmp_path, caplog):
    assert cache.load_group("F4", tmp_path) is None
    bad = tmp_path / "group-F4.txt"
    bad.write_text("rootwald-group\t1\tW(F4)\t4\t1152\nnot a matrix row\n")
    with caplog.at_level(logging.WARNING, logger="rootwald.cache"):
        assert cache.load_group("F4", tmp_path) is None
    assert "discarding unreadable" in caplog.text


def test_polynomial_roundtrip(tmp_path):
    p = (Polynomial.monomial((2, 0, 0, 0), FieldElement(1, 1))
         + Polynomial.monomial((0, 0, 1, 1), FieldElement(-3)))
    cache.save_polynomial("probe", p, tmp_path)
    assert cache.load_polynomial("probe", tmp_path) == p
    assert cache.load_polynomial("missing", tmp_path) is None


def test_polynomial_cache_rejects_wrong_name(tmp_path, caplog):
    p = Polynomial.one()
    path = cache.save_polynomial("first", p, tmp_path)
    path.rename(tmp_path / "poly-second.txt")
    with caplog.at_level(logging.WARNING, logger="rootwald.cache"):
        assert cache.load_polynomial("second", tmp_path) is None
    assert "discarding unreadable" in caplog.text


def test_default_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv("ROOTWALD_CACHE_DIR", str(tmp_path / "elsewhere"))
    assert cache.default_cache_dir() == tmp_path / "elsewhere"


def test_store_reload_skips_rebuild(f4_group, tmp_path):
    store = cache.InvariantStore(tmp_path)
    built = store.group("F4")
    again = store.group("F4")
    assert built.elements == again.elements == f4_group.elements


# ---------------------------------------------------------------------------
# the CLI proper, run in process against the warm session cache

def _run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_group(capsys, cache_dir, chain):
    code, out, _ = _run(capsys, ["--cache-dir", str(cache_dir),
                                 "--format", "json", "group", "F4"])
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 1152 and payload["generators"] == 4


def test_cli_config_formats(capsys, cache_dir):
    code, out, _ = _run(capsys, ["config", "D4"])
    assert code == 0
    assert out.splitlines()[0].startswith("| index | point |")
    code, out, _ = _run(capsys, ["--format", "csv", "config", "D4"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,point" and len(lines) == 13
    code, out, _ = _run(capsys, ["--format", "json", "config", "F4"])
    payload = json.loads(out)
    assert payload["points"] == 24
    assert payload["lines"] == {"3": 32, "4": 18}
    assert payload["dual_planes_per_point"] == 9


def test_cli_invariants_verify(capsys, cache_dir, chain):
    code, out, _ = _run(capsys, ["--cache-dir", str(cache_dir),
                                 "--format", "json",
                                 "invariants", "verify-table1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["all_ok"] is True
    assert payload["rows"]["f36"]["degree"] == 36


def test_cli_invariants_show(capsys, cache_dir, chain):
    code, out, _ = _run(capsys, ["--cache-dir", str(cache_dir),
                                 "invariants", "show", "f2"])
    assert code == 0
    assert len(out.splitlines()) == 4
    code, _, err = _run(capsys, ["--cache-dir", str(cache_dir),
                                 "invariants", "show", "nosuch"])
    assert code == 2 and "unknown polynomial" in err


def test_cli_table2(capsys, cache_dir, chain):
    code, out, _ = _run(capsys, ["--cache-dir", str(cache_dir),
                                 "--format", "json",
                                 "gradedring", "table2", "--mmax", "6"])
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"]["6"] == [24, 30]
    assert payload["generator_flags"]["4"] == [True]


def test_cli_ledger(capsys, cache_dir):
    code, out, _ = _run(capsys, ["--format", "json",
                                 "waldschmidt", "ledger", "f4"])
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True and len(payload["steps"]) == 17
    code, _, err = _run(capsys, ["waldschmidt", "ledger", "D4"])
    assert code == 2 and "only the F4 ledger" in err


def test_cli_alpha(capsys, cache_dir):
    code, out, _ = _run(capsys, ["--format", "json", "waldschmidt", "alpha",
                                 "D4", "--m", "2", "--dmax", "4"])
    assert code == 0
    payload = json.loads(out)
    assert payload["alpha"] == 4 and payload["kernel_dim"] == 2
    code, _, err = _run(capsys, ["waldschmidt", "alpha", "D4"])
    assert code == 2 and "needs --m" in err
    code, _, err = _run(capsys, ["waldschmidt", "alpha", "E8", "--m", "1"])
    assert code == 2 and "unknown configuration" in err


def test_cli_alpha_workers_flag_placement(capsys, cache_dir):
    # the flag is honored both before and after the subcommand
    for argv in (["--workers", "2", "--format", "json", "waldschmidt",
                  "alpha", "D4", "--m", "1", "--dmax", "3"],
                 ["--format", "json", "waldschmidt", "alpha", "D4",
                  "--m", "1", "--dmax", "3", "--workers", "2"]):
        code, out, _ = _run(capsys, argv)
        assert code == 0
        assert json.loads(out)["alpha"] == 3


def test_cli_certify(capsys, cache_dir):
    code, out, _ = _run(capsys, ["waldschmidt", "certify", "D4",
                                 "--m-check", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert (payload["value_num"], payload["value_den"]) == (2, 1)
    code, _, err = _run(capsys, ["waldschmidt", "certify", "E8"])
    assert code == 2 and "unknown configuration" in err


def test_format_env_override(monkeypatch, capsys):
    monkeypatch.setenv("ROOTWALD_FORMAT", "csv")
    code, out, _ = _run(capsys, ["config", "D4"])
    assert code == 0
    assert out.splitlines()[0] == "index,point"
    # an explicit flag still beats the environment
    code, out, _ = _run(capsys, ["--format", "json", "config", "D4"])
    assert json.loads(out)["points"] == 12


def test_workers_env_override(monkeypatch):
    monkeypatch.setenv("ROOTWALD_WORKERS", "5")
    args = cli.build_parser().parse_args(["waldschmidt", "alpha", "D4", "--m", "1"])
    assert args.workers == 5
    monkeypatch.setenv("ROOTWALD_WORKERS", "junk")
    args = cli.build_parser().parse_args(["config", "D4"])
    assert args.workers == 1
