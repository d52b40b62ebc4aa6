import csv
import io
import json

import pytest

from doubledet import cli, invariants
from doubledet.intpoly import IntPolynomial

PAPER_VERTICES = ("(4,5),(3,5),(3,7),(2,7),(2,8),(2,9),(2,10),(2,11),"
                  "(1,11),(1,12)")


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_json_matches_schema(capsys):
    code, out, _ = run(capsys, "invariants", "2", "2", "2", "--format", "json")
    assert code == 0
    assert out.strip() == ('{"mu":9,"dim":4,"multiplicity":6,"regularity":2,'
                           '"a_invariant":-2,"gorenstein":true,'
                           '"h_polynomial":[1,4,1]}')


def test_invariants_text(capsys):
    code, out, _ = run(capsys, "invariants", "3", "2", "4")
    assert code == 0
    assert "mu" in out and "120" in out
    assert "gorenstein" in out and "false" in out


def test_invariants_csv(capsys):
    code, out, _ = run(capsys, "invariants", "2", "2", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "mu"
    assert rows[1][0] == "24"
    assert rows[1][-1] == "1 7 4"


def test_facet2word_paper_example(capsys):
    code, out, _ = run(capsys, "facet2word", "4", "5", "3",
                       "--vertices", PAPER_VERTICES)
    assert code == 0
    assert out.strip() == "MRMNNNRMN"


def test_word2facet_roundtrip(capsys):
    code, out, _ = run(capsys, "word2facet", "4", "5", "3", "MRMNNNRMN",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["word"] == "MRMNNNRMN"
    assert payload["g"] == [4, 3, 2, 1]
    assert payload["h"] == [5, 5, 2, 1]
    assert [4, 5] in payload["vertices"]


def test_word2facet_bad_word_exits_2(capsys):
    code, _, err = run(capsys, "word2facet", "2", "2", "3", "MMRR")
    assert code == 2
    assert "error" in err


def test_facets_words_and_csv(capsys):
    code, out, _ = run(capsys, "facets", "2", "2", "3")
    assert code == 0
    words = out.split()
    assert len(words) == 12 and words == sorted(words)
    code, out, _ = run(capsys, "facets", "2", "2", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["index", "word", "g", "h", "vertices"]
    assert len(rows) == 13
    assert rows[1][1] == "MNRR"


def test_facets_paths_style(capsys):
    code, out, _ = run(capsys, "facets", "1", "1", "1", "--style", "paths")
    assert code == 0
    assert "(1,1)" in out


def test_facets_json(capsys):
    code, out, _ = run(capsys, "facets", "2", "2", "2", "--format", "json")
    payload = json.loads(out)
    assert len(payload) == 6
    assert all(set(item) == {"word", "vertices", "g", "h"}
               for item in payload)


def test_facets_budget_exit_2(capsys):
    code, _, err = run(capsys, "facets", "4", "5", "3", "--budget", "100")
    assert code == 2
    assert "budget" in err


def test_extend_paper_example(capsys):
    code, out, _ = run(capsys, "extend", "4", "5", "3",
                       "--vertices", "(4,5),(3,7),(2,8),(2,11),(1,12)")
    assert code == 0
    assert "MRMNNNRMN" in out
    assert "added" in out


def test_extend_empty_face(capsys):
    code, out, _ = run(capsys, "extend", "2", "2", "2", "--vertices", "",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["vertices"]) == 4


def test_extend_non_face_exits_2(capsys):
    code, _, err = run(capsys, "extend", "2", "2", "2",
                       "--vertices", "(1,1),(2,2)")
    assert code == 2


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "2", "2", "2", "--max-degree", "2",
                       "--format", "json")
    assert code == 0
    assert json.loads(out) == {"values": [1, 8, 27]}


def test_hpoly_methods(capsys):
    for method in ("series", "words", "extensions", "all"):
        code, out, _ = run(capsys, "hpoly", "2", "2", "3",
                           "--method", method, "--format", "json")
        assert code == 0
        assert json.loads(out)["h_polynomial"] == [1, 7, 4]


def test_hpoly_text(capsys):
    code, out, _ = run(capsys, "hpoly", "2", "2", "2")
    assert code == 0
    assert out.strip() == "1 + 4*t + t^2"


def test_hpoly_poset_file(capsys, tmp_path):
    path = tmp_path / "antichain.poset"
    path.write_text("n=3\n")
    code, out, _ = run(capsys, "hpoly", "--poset-file", str(path),
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["h_polynomial"] == [1, 4, 1]


def test_hpoly_poset_file_with_sizes_rejected(capsys, tmp_path):
    path = tmp_path / "p.poset"
    path.write_text("n=1\n")
    code, _, err = run(capsys, "hpoly", "2", "2", "2",
                       "--poset-file", str(path))
    assert code == 2


def test_hpoly_missing_sizes(capsys):
    code, _, err = run(capsys, "hpoly", "2", "2")
    assert code == 2


def test_generators_families(capsys):
    code, out, _ = run(capsys, "generators", "2", "2", "2",
                       "--format", "json")
    payload = json.loads(out)
    assert payload["total"] == 9
    assert len(payload["mixed"]) == 3
    assert all("-" in b for b in payload["same_row"])


def test_generators_witness(capsys):
    code, out, _ = run(capsys, "generators", "2", "2", "2",
                       "--show", "witness", "--format", "json")
    payload = json.loads(out)
    assert payload["exists"] is True
    assert [t["sign"] for t in payload["terms"]] == [1, -1, -1, 1]
    code, out, _ = run(capsys, "generators", "1", "1", "1",
                       "--show", "witness")
    assert out.strip() == "none"


def test_generators_minors_csv(capsys):
    code, out, _ = run(capsys, "generators", "2", "2", "2",
                       "--show", "minors", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 13  # header + 6 H + 6 V
    assert {row[0] for row in rows[1:]} == {"H", "V"}


def test_bad_sizes_exit_2(capsys):
    code, _, err = run(capsys, "invariants", "0", "2", "2")
    assert code == 2
    assert "positive" in err


def test_verify_formulas_level(capsys):
    code, out, _ = run(capsys, "verify", "2", "2", "2",
                       "--level", "formulas")
    assert code == 0
    assert "FAIL" not in out
    assert "all" in out and "passed" in out


def test_verify_full_small(capsys):
    code, out, _ = run(capsys, "verify", "2", "2", "2")
    assert code == 0
    assert "groebner-basis" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "1", "2", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert all(c["status"] in ("ok", "skip") for c in payload["checks"])


def test_verify_detects_failures(capsys, monkeypatch):
    # sabotage one enumeration route: the harness must notice and exit 1
    monkeypatch.setattr(invariants, "h_poly_via_words",
                        lambda m, n, r, budget=None: IntPolynomial([1, 99]))
    code, out, _ = run(capsys, "verify", "2", "2", "2",
                       "--level", "formulas")
    assert code == 1
    assert "FAIL" in out and "h-poly-agreement" in out
