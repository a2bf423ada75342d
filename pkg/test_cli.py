"""
Tests for the command line: output, exit codes and determinism
"""

import json

import pytest

from cli import run


def _json_without_elapsed(text):
    document = json.loads(text)
    documents = document if isinstance(document, list) else [document]
    for report in documents:
        report.pop('elapsed_seconds', None)
    return documents


def test_sort(capsys):
    assert run(["sort", "471836952"]) == 0
    assert capsys.readouterr().out == "4,1,7,3,8,6,2,5,9\n"


def test_trace_with_motions(capsys):
    assert run(["trace", "312", "--motions"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['steps'] == ["3,1,2", "1,3,2", "1,2,3"]
    assert [table['t'] for table in document['motions']] == [1, 2]


def test_verify_finds_boundary_gap(capsys):
    code = run(["verify", "--claim", "obs-3.2", "--n-max", "6", "--mode", "strict", "--threads", "1"])
    assert code == 1
    document = json.loads(capsys.readouterr().out)
    assert any(
        c['permutation'] == "3,1,2" and c['t'] == 2 and c['value'] == 2
        for c in document['counterexamples']
    )


def test_verify_weak_holds(capsys):
    code = run(["verify", "--claim", "obs-3.2", "--n-max", "6", "--mode", "weak", "--threads", "1"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)['counterexamples'] == []


def test_verify_both_modes(capsys):
    code = run(["verify", "--claim", "obs-3.2", "--n-max", "4", "--mode", "both", "--threads", "1"])
    assert code == 1
    documents = json.loads(capsys.readouterr().out)
    assert [d['parameters']['mode'] for d in documents] == ['strict', 'weak']


def test_verify_single_permutation(capsys):
    assert run(["verify", "--claim", "obs-2.1", "--perm", "471836952"]) == 0
    assert json.loads(capsys.readouterr().out)['checked_count'] == 1


def test_verify_all(capsys):
    assert run(["verify", "--claim", "all", "--n-max", "4", "--threads", "1"]) == 0
    documents = json.loads(capsys.readouterr().out)
    assert len(documents) == 8


def test_verify_output_is_deterministic_across_threads(capsys):
    argv = ["verify", "--claim", "obs-3.2", "--n-max", "6", "--mode", "strict"]
    run(argv + ["--threads", "1"])
    first = capsys.readouterr().out
    run(argv + ["--threads", "2"])
    second = capsys.readouterr().out
    assert _json_without_elapsed(first) == _json_without_elapsed(second)


def test_bound(capsys):
    assert run(["bound", "561234"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['t_star'] == 5
    assert document['best_bound'] == {'i': 1, 'k': 3, 'bound': 3}
    assert {'i': 2, 'k': 1, 'bound': 2} in document['bounds']


def test_dn_exact(capsys):
    assert run(["dn", "--n", "3", "--exact", "--threads", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,method,samples,seed,mean_t_star,ratio,std_error,exact_mean"
    assert lines[1].startswith("3,exact,,,")
    assert lines[1].endswith(",7/6")


def test_dn_sampled_is_deterministic(capsys):
    run(["dn", "--n", "12", "--samples", "200", "--seed", "3", "--threads", "1"])
    first = capsys.readouterr().out
    run(["dn", "--n", "12", "--samples", "200", "--seed", "3", "--threads", "2"])
    assert capsys.readouterr().out == first


def test_hist_exact(capsys):
    assert run(["hist", "--n", "3", "--exact", "--threads", "1"]) == 0
    assert capsys.readouterr().out == "t_star,count\n0,1\n1,3\n2,2\n"


def test_construct(capsys):
    assert run(["construct", "--family", "asymmetric", "--k", "1"]) == 0
    assert capsys.readouterr().out == "5,4,2,3,1\n"

    assert run(["construct", "--family", "symmetric", "--k", "4", "--metrics"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['t_star'] == 10
    assert 'permutation' not in document

    assert run(["construct", "--family", "symmetric", "--k", "1", "--plot-data"]) == 0
    assert capsys.readouterr().out == "position,value\n1,3\n2,2\n3,1\n"


def test_construct_prints_without_sorting(monkeypatch, capsys):
    def refuse(spec):
        raise AssertionError("metrics computed for a plain construct")

    monkeypatch.setattr("cli.family_metrics", refuse)
    assert run(["construct", "--family", "symmetric", "--k", "2"]) == 0
    assert capsys.readouterr().out == "7,5,2,4,6,3,1\n"


def test_seed_with_leading_zero_is_decimal(capsys):
    argv = ["dn", "--n", "12", "--samples", "50", "--threads", "1", "--seed"]
    assert run(argv + ["010"]) == 0
    padded = capsys.readouterr().out
    assert run(argv + ["10"]) == 0
    assert capsys.readouterr().out == padded


def test_lichev(capsys):
    assert run(["lichev", "--n", "9", "--samples", "20", "--seed", "1", "--threads", "1"]) == 0
    assert json.loads(capsys.readouterr().out)['fraction'] == 1.0


def test_gap_is_deterministic(capsys):
    argv = ["gap", "--n", "50", "--samples", "10", "--seed", "77"]
    assert run(argv + ["--threads", "1"]) == 0
    first = capsys.readouterr().out
    assert first.splitlines()[0] == "sample_index,t_star,best_bound,i,k,lichev_event"
    run(argv + ["--threads", "2"])
    assert capsys.readouterr().out == first

    assert run(argv + ["--summary", "--threads", "1"]) == 0
    assert json.loads(capsys.readouterr().out)['consistent'] is True


def test_output_file(tmp_path, capsys):
    target = tmp_path / "pop.txt"
    assert run(["sort", "312", "--output", str(target)]) == 0
    assert target.read_text() == "1,3,2\n"
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("argv", [
    ["sort", "1,1,2"],
    ["sort"],
    ["verify", "--claim", "obs-9.9", "--n-max", "3"],
    ["verify", "--claim", "obs-2.1"],
    ["verify", "--claim", "pivot-window", "--n-max", "3", "--window", "huge"],
    ["dn", "--n", "3", "--samples", "10"],
    ["dn", "--n", "40", "--exact"],
    ["bound", "1234"],
    ["frobnicate"],
    ["sort", "312", "--unknown-flag"],
])
def test_usage_errors_exit_two(argv):
    assert run(argv) == 2


def test_help_lists_claims_and_windows(capsys):
    assert run(["verify", "--help"]) == 0
    text = capsys.readouterr().out
    for identifier in ("obs-2.1", "obs-3.2", "lemma-3.3", "thm-3.4", "pivot-window",
                       "ceil-half", "floor-half-plus-one", "first-i"):
        assert identifier in text


@pytest.mark.slow
@pytest.mark.parametrize("argv", [
    ["verify", "--claim", "all", "--n-max", "7"],
    ["dn", "--n", "200", "--samples", "400", "--seed", "11"],
    ["gap", "--n", "300", "--samples", "40", "--seed", "12"],
])
def test_reports_match_at_one_four_and_eight_threads(argv, capsys):
    outputs = []
    for threads in ("1", "4", "8"):
        run(argv + ["--threads", threads])
        outputs.append(capsys.readouterr().out)
    if argv[0] == "verify":
        outputs = [_json_without_elapsed(text) for text in outputs]
    assert outputs[0] == outputs[1] == outputs[2]
