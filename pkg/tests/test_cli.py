import json
from fractions import Fraction

import pytest

from app.main import Command, main, parse_range, parse_triple
from app.typeclass import INF
from app.utils.errors import InputError


def test_classify_json(cli):
    code, _, payload = cli("classify", "14", "14", "14", "--json")
    assert code == 0
    assert payload["success"] is True
    data = payload["data"]
    assert data["type"] == "B"
    assert float(data["F"]["mid"]) == pytest.approx(-0.0446055, rel=1e-5)
    assert Fraction(data["F"]["hi"]) < 0


def test_classify_text(cli):
    code, out, _ = cli("classify", "3", "3", "10")
    assert code == 0
    assert out.startswith("(3, 3, 10): type A")


def test_classify_accepts_inf(cli):
    code, _, payload = cli("classify", "inf", "inf", "inf", "--json")
    assert code == 0
    assert payload["data"]["type"] == "B"
    assert payload["data"]["triple"] == {"n1": "inf", "n2": "inf", "n3": "inf"}


@pytest.mark.parametrize("argv", [
    ("classify", "5", "4", "6"),
    ("classify", "2", "3", "4"),
    ("classify", "3", "3", "x"),
    ("classify", "3", "3", "10", "--precision-bits", "0"),
    ("oracle", "3", "3", "10", "--steps", "1"),
    ("enumerate", "--n1", "a..b"),
    ("verify", "--claim", "no.such.*"),
])
def test_invalid_input_exits_2(cli, argv):
    code, _, _ = cli(*argv)
    assert code == 2


def test_invalid_input_json_envelope(cli):
    code, _, payload = cli("classify", "5", "4", "6", "--json")
    assert code == 2
    assert payload["success"] is False
    assert payload["code"] == "INVALID_TRIPLE"


def test_indeterminate_exits_3(cli):
    code, _, payload = cli("classify", "100", "200", "4000", "--precision-bits", "4", "--precision-cap", "4", "--json")
    assert code == 3
    assert payload["data"]["type"] == "Indeterminate"


def test_interval(cli):
    code, _, payload = cli("interval", "9", "14", "15", "--json")
    assert code == 0
    assert "empty" in payload["data"]


def test_enumerate_csv(cli):
    code, out, _ = cli("enumerate", "--n1", "3..4", "--n2-max", "5", "--n3-cap", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n1,n2,n3,F_lo,F_hi,type"
    assert lines[1].startswith("3,3,3,")


def test_table_type_a_markdown(cli):
    code, out, _ = cli("table", "--which", "typeA", "--n1", "13..13")
    assert code == 0
    assert "| n1 = 13 | n2 = 13 | n3 ≥ 40 |" in out


def test_table_1(cli):
    code, _, payload = cli("table", "--which", "1", "--json")
    assert code == 0
    assert len(payload["data"]) == 10


def test_verify_json_without_timing(cli):
    code, _, payload = cli("verify", "--claim", "L5.1.1.*", "--json", "--no-timing")
    assert code == 0
    assert payload["data"]
    assert all("elapsed" not in r for r in payload["data"])
    assert all(r["status"] == "Proved" for r in payload["data"])


def test_verify_canary_passes_when_refuted(cli):
    code, out, _ = cli("verify", "--claim", "X.x-minus-1", "--canaries")
    assert code == 0
    assert "Refuted" in out
    assert "1/1 as expected" in out


def test_claims_listing(cli):
    code, _, payload = cli("claims", "--claim", "L5.1.*", "--json")
    assert code == 0
    assert len(payload["data"]) == 11


def test_parse_helpers():
    assert parse_triple(["3", "inf", "inf"]).n3 == INF
    assert parse_range("10..13") == (10, 13)
    assert parse_range("12") == (12, 12)
    with pytest.raises(InputError):
        parse_triple(["3", "4"])


def test_command_validates_numbers():
    with pytest.raises(ValueError):
        Command(verb="verify", budget=0)


def test_errors_share_one_path(capsys):
    assert main(["classify", "5", "4", "6"]) == 2
    out, err = capsys.readouterr()
    assert out == ""
    assert err.startswith("error: ")

    assert main(["oracle", "3", "3", "3"]) == 2
    out, err = capsys.readouterr()
    assert out == ""
    assert err.startswith("error: ")

    assert main(["oracle", "3", "3", "3", "--json"]) == 2
    out, err = capsys.readouterr()
    assert json.loads(out)["code"] == "EMPTY_DEFORMATION"


def test_classify_flat_triple(cli):
    code, _, payload = cli("classify", "3", "3", "3", "--json")
    assert code == 0
    assert payload["data"]["type"] == "B"
