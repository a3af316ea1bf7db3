import json

import pytest

from rieszlex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "--group", "Lex(Z,Z)", "--eq", "(1,5)", "(1,-5)", "(1,0)", "(1,0)", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["format"] == 1
    assert obj["report"]["verified"] is True
    assert obj["trace"]["tag"] == "Thm3.3(3)(iv)"
    assert obj["table"]["entries"] == [["1", "0"], ["0", "5"], ["0", "0"], ["1", "-5"]]


def test_solve_is_deterministic(capsys):
    argv = ("solve", "--group", "Lex(Strict(Q,Q),Matrix)", "--eq",
            "((1,4),M(2,0))", "((3,7),M(1,1))", "((2,3),M(2,2))", "((2,8),M(1,0))", "--json")
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    assert json.loads(first)["report"]["rdp1"]["status"] == "Fails"


def test_verify_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "solve", "--group", "Prod(Z,Z)", "--eq", "(2,1)", "(1,2)", "(1,1)", "(2,2)", "--json")
    f = tmp_path / "t.json"
    f.write_text(out)
    assert run(capsys, "verify", "--table-file", str(f))[0] == 0
    obj = json.loads(out)
    obj["table"]["entries"][0] = ["2", "2"]
    f.write_text(json.dumps(obj))
    assert run(capsys, "verify", "--table-file", str(f))[0] == 2


def test_group_file(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("Prod(Z, Z)\n")
    assert run(capsys, "solve", "--group-file", str(f), "--eq", "(1,0)", "(0,1)", "(0,1)", "(1,0)")[0] == 0


def test_check_com_directed_fails(capsys):
    code, _, err = run(capsys, "check", "--group", "Matrix", "--property", "com-directed", "--elems", "M(1/2,0)", "M(1/3,0)")
    assert code == 2 and "NotComDirected" in err


@pytest.mark.parametrize(
    "group, prop, elems",
    [
        ("Z", "directed", ["1", "4"]),
        ("Strict(Q,Q)", "antilattice", []),
        ("Strict(Q,Q)", "ncdp", ["(1,3)", "(2,1)"]),
        ("Prod(Z,Z)", "wrdp", ["(1,0)", "(0,3)", "(2,1)", "(-1,2)"]),
        ("Prod(Z,Z)", "rdp0", ["(3,1)", "(2,2)", "(2,0)"]),
        ("Z", "rip", ["0", "1", "3", "2"]),
    ],
)
def test_check_properties(capsys, group, prop, elems):
    code, out, _ = run(capsys, "check", "--group", group, "--property", prop, "--elems", *elems, "--json")
    assert code == 0
    assert json.loads(out)["holds"] is True


def test_check_antilattice_fails_on_product_order(capsys):
    assert run(capsys, "check", "--group", "Prod(Z,Z)", "--property", "antilattice")[0] == 2


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--group", "Z", "--eq", "2", "1", "1", "2", "--json")
    assert code == 0 and json.loads(out)["verdict"]["status"] == "Found"
    code, out, _ = run(capsys, "oracle", "--group", "Free(3; 1, 1, 1/2)", "--search", "wrdp-k",
                       "--eq", "g3 -g1", "g1", "g3 -g2", "g2", "--budget-wordlen", "3", "--json")
    obj = json.loads(out)
    assert code == 2 and obj["verdict"]["status"] == "NotFoundWithinBudget"
    assert obj["verdict"]["budget"]["max_word_len"] == 3


def test_case_json(capsys):
    code, out, _ = run(capsys, "case", "lemma2_3", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["passed"] and obj["case"] == "lemma2_3"
    assert any(c["evidence"].get("rdp1") == "Fails" for c in obj["claims"])


def test_case_list_and_unknown(capsys):
    code, out, _ = run(capsys, "case", "--list")
    assert code == 0 and "remark5_7" in out
    assert run(capsys, "case", "bogus")[0] == 1
    assert run(capsys, "case")[0] == 1


@pytest.mark.parametrize(
    "argv, code",
    [
        (["solve", "--group", "Lex(Q)", "--eq", "1", "1", "1", "1"], 4),
        (["solve", "--group", "Z", "--eq", "1", "1", "1", "3"], 1),
        (["solve", "--group", "Strict(Z,Z)", "--eq", "(1,1)", "(1,1)", "(1,1)", "(1,1)"], 3),
        (["solve", "--group", "Z", "--eq", "1/2", "1", "1", "1"], 4),
        (["check", "--group", "Z", "--property", "directed", "--elems", "1"], 1),
        (["oracle", "--group", "Z", "--search", "wrdp-k", "--eq", "1", "1", "1", "1"], 1),
        (["nonsense"], 1),
        ([], 1),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_schema(capsys):
    code, out, _ = run(capsys, "schema", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["format"] == 1
    assert {"descriptor", "solve", "verdict", "case"} <= set(obj["schemas"])
