import json

import pytest

from ncolor.cli import main

STRIP_20 = "20:1,2,5,7,9,10,12,13,15,16,18,20"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["seq", "--constraint", "mod=1:1", "--n", "3", "--method", "rec"], "1\n1\n3\n8\n"),
        (["seq", "--constraint", "forbid=2", "--n", "2", "--method", "formula"], "1\n1\n2\n"),
        (["seq", "--constraint", "allow=2", "--n", "6", "--method", "auto"], "1\n0\n1\n1\n2\n3\n5\n"),
        (["seq", "--constraint", "allow=2", "--n", "6", "--method", "enum", "--json"], "[1, 0, 1, 1, 2, 3, 5]\n"),
        (["list", "--constraint", "allow=3", "--n", "3", "--format", "tiling"], "|··●|\n"),
        (["list", "--constraint", "no11", "--n", "2"], "2_1\n2_2\n"),
        (["list", "--n", "3", "--m", "3"], "1_1 1_1 1_1\n"),
        (["map", "prop14-binary", "fwd", "--m", "2", "--i", "2", "5_4 3_2 4_4"], "11100100111\n"),
        (["map", "prop14-binary", "inv", "--m", "2", "--i", "2", "11100100111"], "5_4 3_2 4_4\n"),
        (["map", "prop13-mod3", "fwd", "2_1 1_1 1_1 3_3 4_4 1_1"], "2 2 2 8 5 2 2 8 2 5\n"),
        (["map", "prop13-mod3", "inv", "2 2 2 8 5 2 2 8 2 5"], "2_1 1_1 1_1 3_3 4_4 1_1\n"),
        (["map", "prop11", "fwd", "--d", "1", "2_2 2_2"], "1 2\n"),
        (["map", "prop11", "inv", "--d", "1", "3"], "4_4\n"),
        (["map", "prop5-onec", "fwd", "--c", "3", "5_3 3_3 4_3"], "3 1 1 3 3 1\n"),
        (["map", "prop5-minparts", "inv", "--c", "3", "3"], "3_3\n"),
        (["map", "prop7-typed", "fwd", "--b", "2", "--c", "3", "4_2 3_3"], "4 3'\n"),
        (["map", "prop7-mixed", "fwd", "--b", "2", "--c", "3", "3_2"], "2 1\n"),
        (["map", "prop12-rect", "fwd", STRIP_20], "4_1 1_1 3_3 1_1 3_1 4_3\n"),
        (["map", "prop12-rect", "inv", "4_1 1_1 3_3 1_1 3_1 4_3"], STRIP_20 + "\n"),
        (["map", "prop15-odd", "fwd", "--n", "9", "4_4 2_1 2_2"], "1_1 3_3 2_1 1_1 1_1 1_1\n"),
        (["map", "prop15-odd", "inv", "1_1 3_3 2_1 1_1 1_1 1_1"], "4_4 2_1 2_2\nflag=8\n"),
    ],
)
def test_golden_stdout(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert (code, out, err) == (0, expected, "")


def test_list_all_of_three(capsys):
    code, out, _ = run(capsys, "list", "--constraint", "all", "--n", "3")
    assert code == 0
    assert out.splitlines() == [
        "1_1 1_1 1_1", "1_1 2_1", "1_1 2_2", "2_1 1_1", "2_2 1_1", "3_1", "3_2", "3_3",
    ]


def test_list_json(capsys):
    _, out, _ = run(capsys, "list", "--constraint", "allow=2", "--n", "2", "--format", "json")
    assert json.loads(out) == [{"n": 2, "parts": [{"size": 2, "color": 2}]}]


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--max-n", "3", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["overall"] is True
    assert {"constraint": "all", "n": 3, "enum": 8, "rec": 8, "formula": None, "agree": True} in report["cells"]


def test_check_zero(capsys):
    code, out, _ = run(capsys, "check", "--max-n", "0")
    assert code == 0
    assert out.rstrip().endswith("overall: PASS")


@pytest.mark.parametrize(
    "argv, code",
    [
        (["seq", "--constraint", "allow=", "--n", "3"], 2),
        (["seq", "--constraint", "forbid=3", "--n", "3", "--method", "formula"], 3),
        (["list", "--n", "30"], 4),
        (["map", "prop13-mod3", "fwd", "2_2"], 5),
        (["map", "prop14-binary", "inv", "--m", "2", "--i", "2", "1021"], 2),
        (["map", "prop11", "fwd", "4_4"], 2),
        (["map", "prop5-onec", "fwd", "--c", "2", "3_2"], 0),
        (["map", "nosuchmap", "fwd", "x"], 2),
        (["list", "--n", "2", "--format", "pdf"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    out, err = capsys.readouterr()
    assert got == code
    if code:
        assert err and not out


def test_domain_error_names_predicate(capsys):
    code, _, err = run(capsys, "map", "prop5-minparts", "fwd", "--c", "3", "2_2")
    assert code == 5
    assert "allow=3" in err


def test_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("NCOLOR_ENUM_CAP", "5")
    code, _, _ = run(capsys, "seq", "--constraint", "no11", "--n", "6", "--method", "enum")
    assert code == 4
