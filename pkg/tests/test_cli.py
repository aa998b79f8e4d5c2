"""Driver-level checks: spec parsing, exit codes, output formats, bounds."""

import json

import pytest

from fscat import config
from fscat.cli import GroupSpec, main, parse_group_spec


@pytest.fixture(autouse=True)
def restore_bounds():
    """main() applies bound flags to the config module; undo after each test."""
    enum_bound, index_bound = config.ENUMERATION_BOUND, config.INDEX_BOUND
    yield
    config.ENUMERATION_BOUND = enum_bound
    config.INDEX_BOUND = index_bound


def test_group_specs_round_trip():
    texts = ["sym:6", "alt:7", "cyclic:12", "tilde-sym:7", "sym-embed:3,6",
             "alt-embed:5,7", "sym-prime:2,6", "gens:(1,2)(3,4);(1,3)@4"]
    for text in texts:
        spec = parse_group_spec(text)
        assert spec.to_text() == text
        assert parse_group_spec(spec.to_text()) == spec


def test_group_specs_build_the_right_groups():
    assert parse_group_spec("cyclic:12").build().order() == 12
    assert parse_group_spec("tilde-sym:7").build().order() == 120
    klein = parse_group_spec("gens:(1,2)(3,4);(1,3)(2,4)@4").build()
    assert klein.order() == 4
    assert parse_group_spec("gens:@3").build().order() == 1


def test_gens_specs_are_canonicalized():
    spec = parse_group_spec("gens:( 1 , 2 );(1,3)@4")
    assert spec == GroupSpec("gens", cycles=("(1,2)", "(1,3)"), degree=4)


@pytest.mark.parametrize("bad", [
    "sym",              # no colon
    "blah:5",           # unknown family
    "sym:3,4",          # wrong arity
    "sym-embed:3",      # wrong arity
    "sym:x",            # not an integer
    "gens:(1,2)",       # no degree
    "gens:(1,2)@x",     # bad degree
    "gens:(1,5)@3",     # letter out of range
])
def test_bad_group_specs_are_rejected(bad):
    with pytest.raises(ValueError):
        parse_group_spec(bad)


def test_census_output_and_exit_code(capsys):
    assert main(["census", "--l", "3", "--n", "6"]) == 0
    assert capsys.readouterr().out == "34,20\n"


def test_census_rejects_bad_range(capsys):
    assert main(["census", "--l", "9", "--n", "3"]) == 2
    assert "1 <= l <= n" in capsys.readouterr().err


def test_indicators_human_output(capsys):
    assert main(["indicators", "--G", "sym:6", "--H", "alt:6"]) == 0
    out = capsys.readouterr().out
    assert "C(sym:6, alt:6)" in out
    assert "simples: 14" in out
    assert "-1" not in out


def test_indicators_pads_the_subgroup_degree(capsys):
    assert main(["indicators", "--G", "sym:6", "--H", "tilde-sym:5"]) == 0
    out = capsys.readouterr().out
    assert "-1 at rep" in out  # the even flip coset of this category


def test_indicators_json_matches_csv_row_count(capsys):
    assert main(["indicators", "--G", "sym:5", "--H", "sym-embed:2,5",
                 "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["category"] == {"G_spec": "sym:5", "H_spec": "sym-embed:2,5"}
    assert main(["indicators", "--G", "sym:5", "--H", "sym-embed:2,5",
                 "--csv"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert len(rows) - 1 == len(payload["entries"])


def test_identical_runs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["indicators", "--G", "sym:6", "--H", "cyclic:6", "--json"]
    assert main(["--out", str(a)] + argv) == 0
    assert main(["--out", str(b)] + argv) == 0
    assert a.read_bytes() == b.read_bytes()


def test_not_a_subgroup_is_a_usage_error(capsys):
    assert main(["indicators", "--G", "alt:4", "--H", "cyclic:4"]) == 2
    assert "not a subgroup" in capsys.readouterr().err


def test_double_cosets_listing(capsys):
    assert main(["double-cosets", "--G", "sym:4",
                 "--H", "gens:(1,2)(3,4);(1,3)(2,4)@4"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "6 double cosets"
    assert all("size 4" in line for line in out[1:])


def test_verify_pass_fail_and_unknown(capsys):
    assert main(["verify", "--claim", "thm-tilde", "--n", "6"]) == 0
    assert main(["verify", "--claim", "census", "--l", "4", "--n", "8"]) == 1
    out = capsys.readouterr().out
    assert "(209, 166)" in out
    assert main(["verify", "--claim", "no-such"]) == 2
    assert main(["verify", "--claim", "ex-nu-p", "--n", "5"]) == 2
    err = capsys.readouterr().err
    assert "unknown claim" in err
    assert "wrong parameters" in err


def test_verify_json_has_no_runtime(capsys):
    assert main(["verify", "--claim", "thm-Cn", "--n", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "pass"
    assert "runtime" not in payload


def test_verify_all_quick_passes(capsys):
    assert main(["verify-all", "--profile", "quick", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload) >= 12
    assert {r["status"] for r in payload} == {"pass"}


def test_examples_print_their_facts(capsys):
    assert main(["example", "--id", "ex-minus-one"]) == 0
    out = capsys.readouterr().out
    assert "nu_2 = -1" in out
    assert "g^2 equals t^6: True" in out
    assert main(["example", "--id", "ex-nu-p"]) == 0
    assert "all degree-7 indicators vanish" in capsys.readouterr().out


def test_index_bound_flag_shrinks_the_reach(capsys):
    assert main(["--index-bound", "10", "double-cosets",
                 "--G", "sym:5", "--H", "sym-embed:2,5"]) == 2
    assert "index bound" in capsys.readouterr().err


def test_config_file_sets_bounds(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"index_bound": 10}')
    assert main(["--config", str(cfg), "double-cosets",
                 "--G", "sym:5", "--H", "sym-embed:2,5"]) == 2
    assert "index bound" in capsys.readouterr().err


def test_config_env_var_is_honored(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"index_bound": 10}')
    monkeypatch.setenv("FSCAT_CONFIG", str(cfg))
    assert main(["double-cosets", "--G", "sym:5",
                 "--H", "sym-embed:2,5"]) == 2
    assert "index bound" in capsys.readouterr().err


def test_bad_config_keys_are_rejected(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"max_cosets": 7}')
    assert main(["--config", str(cfg), "census", "--l", "2", "--n", "4"]) == 2
    assert "unknown config keys" in capsys.readouterr().err


def test_nonpositive_m_is_rejected(capsys):
    assert main(["indicators", "--G", "sym:4", "--H", "alt:4",
                 "--m", "0"]) == 2
    assert "positive" in capsys.readouterr().err
