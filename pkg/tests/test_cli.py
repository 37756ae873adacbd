import json

from omegaminus.cli import run


def test_identities_row11(capsys):
    assert run(["identities", "--row", "11"]) == 0
    assert "150,698,880 / 1,152 = 130,815 = (2^9+1)(2^8-1)" in capsys.readouterr().out


def test_usage_errors(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run(["verify", "--row", "1", "--m", "4", "--q", "2", "--out", str(out)]) == 2
    assert not out.exists()
    assert run(["verify", "--row", "1", "--m", "5"]) == 2
    assert run(["verify", "--row", "10", "--m", "5", "--q", "2"]) == 2
    assert run(["verify", "--include-optional"]) == 2
    assert run(["bogus"]) == 2
    assert run(["verify", "--row", "1", "--m", "5", "--q", "2", "--out",
                str(tmp_path / "missing" / "r.json")]) == 2
    capsys.readouterr()


def test_verify_json_to_file(tmp_path):
    out = tmp_path / "r.json"
    assert run(["verify", "--row", "11", "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["rows"][0]["status"] == "arithmetic-only"
    again = tmp_path / "r2.json"
    run(["verify", "--row", "11", "--format", "json", "--out", str(again)])
    assert again.read_bytes() == out.read_bytes()


def test_verify_row1(capsys):
    assert run(["verify", "--row", "1", "--m", "5", "--q", "2", "--format", "json"]) == 0
    row = json.loads(capsys.readouterr().out)["rows"][0]
    assert row["status"] == "verified" and row["orbit_size"] == 528


def test_orders_and_enumerate(capsys):
    assert run(["orders"]) == 0
    assert "197,406,720" in capsys.readouterr().out
    assert run(["enumerate", "--m", "4", "--q", "2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["counts"] == {"0": 119, "1": 136}


def test_selftest(capsys):
    assert run(["selftest"]) == 0
    assert "pass" in capsys.readouterr().out
