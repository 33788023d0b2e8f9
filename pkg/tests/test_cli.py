import io
import json

from compound_semigroups.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_info():
    code, out, _ = call("info", "--a", "3,3", "--b", "2,10", "--oracle")
    data = json.loads(out)
    assert code == 0
    assert data["frobenius"] == 43 and data["genus"] == 22 and data["oracle_agree"] is True


def test_sylvester():
    code, out, _ = call("sylvester", "--a", "8,2", "--b", "5,7", "--m", "3", "--method", "all")
    data = json.loads(out)
    assert code == 0 and data["value"] == 3746007 and data["agree"] is True
    code, out, _ = call("sylvester", "--geo", "2,3,2", "--m", "5")
    assert code == 0 and json.loads(out)["agree"] is True


def test_weight():
    code, out, _ = call("weight", "--a", "3,3", "--b", "2,10", "--q", "2")
    assert code == 0 and json.loads(out)["weight"] == 142
    code, out, _ = call("weight", "--geo", "2,3,2", "--q", "1")
    assert json.loads(out)["weight"] == 8


def test_identity_with_table(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps([n * n - 3 for n in range(200)]))
    code, out, _ = call("identity", "--a", "3", "--b", "5", "--j", "1", "--f-table", str(path))
    assert code == 0 and json.loads(out)["equal"] is True
    path.write_text(json.dumps([1, 2, 3]))
    code, _, err = call("identity", "--a", "3", "--b", "5", "--f-table", str(path))
    assert code == 2 and "table covers" in err


def test_tower_check():
    code, out, _ = call("tower-check", "--a", "3,3", "--b", "2,10", "--c", "2,3")
    assert code == 0 and json.loads(out)["valid"] is True
    code, _, err = call("tower-check", "--a", "3,3", "--b", "2,10", "--c", "4,3")
    assert code == 2 and "c_1" in err


def test_validation_and_usage_errors():
    assert call("info", "--a", "2,3", "--b", "2,5")[0] == 2
    assert call("info", "--a", "2", "--b", "3,5")[0] == 2
    assert call("info", "--a", "x", "--b", "3")[0] == 2
    assert call("info", "--a", str(2**64), "--b", "3")[0] == 2
    assert call("nonsense")[0] == 2


def test_budget_exit_code():
    assert call("info", "--a", "3,3", "--b", "2,10", "--budget", "5")[0] == 3
    assert call("oracle", "--generators", "3,5", "--limit", "1000", "--budget", "10")[0] == 3


def test_oracle_and_search(tmp_path):
    code, out, _ = call("oracle", "--generators", "4,6,9", "--limit", "15")
    assert json.loads(out)["gaps"] == [1, 2, 3, 5, 7, 11]
    code, out, _ = call("oracle", "--a", "3,3", "--b", "2,10")
    assert json.loads(out)["apery_gaps_agree"] is True
    target = tmp_path / "r.jsonl"
    code, out, _ = call("search", "--hi", "9", "--out", str(target))
    data = json.loads(out)
    assert code == 0 and "records" not in data
    assert data["counts"]["set_pairs"] == len(target.read_text().splitlines()) > 0


def test_big_integers_are_strings():
    code, out, _ = call("sylvester", "--geo", "7,11,6", "--m", "3", "--method", "closed")
    value = json.loads(out)["value"]
    assert isinstance(value, str) and int(value) > 2**53


def test_text_format():
    code, out, _ = call("info", "--a", "3", "--b", "5", "--format", "text")
    assert code == 0 and "frobenius" in out and "7" in out
