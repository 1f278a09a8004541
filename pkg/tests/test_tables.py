import json
import shutil

import pytest

from realselfdual.cli import main
from realselfdual.errors import GoldenDataError, InvalidParameter
from realselfdual.tables import DATA_ENV, compare_cell, data_dir, load_golden, reproduce_table


def test_compare_cell():
    assert compare_cell(None, [])
    assert not compare_cell(None, [1])
    assert not compare_cell([3], [])
    assert compare_cell([6], [6, 6])
    assert not compare_cell([6], [6, 4])
    assert compare_cell([12, 2, 24], [24, 12, 2])
    assert not compare_cell([2, 2, 4], [2, 4, 4])
    assert not compare_cell([12, 2], [12, 2, 24])


def test_golden_files_have_expected_shape():
    one, two = load_golden(1), load_golden(2)
    assert (one["N"], len(one["rows"]), one["columns"]) == (4, 15, [1, 2, 3])
    assert (two["N"], len(two["rows"]), two["columns"]) == (6, 22, [1, 2, 3, 4])
    with pytest.raises(InvalidParameter):
        load_golden(3)


def test_multi_valued_cells_keep_leftmost_order():
    report = reproduce_table(2)
    multi = [c for r in report.rows for c in r.cells if c.expected and len(c.expected) > 1]
    assert multi and all(c.order_matches for c in multi)


@pytest.fixture
def golden_copy(tmp_path, monkeypatch):
    for name in ("table1.json", "table2.json"):
        shutil.copy(data_dir() / name, tmp_path / name)
    monkeypatch.setenv(DATA_ENV, str(tmp_path))
    return tmp_path


def test_missing_and_corrupt_golden(golden_copy, capsys):
    (golden_copy / "table1.json").unlink()
    with pytest.raises(GoldenDataError, match="not found"):
        load_golden(1)
    assert main(["table", "--which", "1", "--verify"]) == 1
    (golden_copy / "table2.json").write_text("{")
    with pytest.raises(GoldenDataError):
        load_golden(2)
    assert main(["table", "--which", "2"]) == 1


def _edit(path, fn):
    doc = json.loads(path.read_text())
    fn(doc)
    path.write_text(json.dumps(doc))


def test_malformed_golden(golden_copy):
    path = golden_copy / "table1.json"
    _edit(path, lambda d: d["rows"][0].update(label="(1,0)^5"))
    with pytest.raises(GoldenDataError, match="label"):
        load_golden(1)
    shutil.copy(golden_copy / "table2.json", path)
    _edit(path, lambda d: d.update(format_version=2))
    with pytest.raises(GoldenDataError, match="format_version"):
        load_golden(1)


def test_modified_golden_value_is_a_mismatch(golden_copy, capsys):
    path = golden_copy / "table1.json"

    def bump(doc):
        row = doc["rows"][0]
        row["dimension"] += 1
        row["bounds"]["1"] = [99]

    _edit(path, bump)
    report = reproduce_table(1)
    assert not report.ok and not report.rows[0].ok and all(r.ok for r in report.rows[1:])
    capsys.readouterr()
    assert main(["table", "--which", "1", "--verify"]) == 2
    err = capsys.readouterr().err
    assert "row 1" in err and "expected [99]" in err and "dimension" in err
    # without --verify the report is still printed and the exit code is 0
    assert main(["table", "--which", "1"]) == 0


def test_blank_cell_mismatch(golden_copy, capsys):
    path = golden_copy / "table1.json"
    doc = json.loads(path.read_text())
    idx = next(i for i, r in enumerate(doc["rows"]) if any(v is None for v in r["bounds"].values()))
    col = next(c for c, v in doc["rows"][idx]["bounds"].items() if v is None)
    _edit(path, lambda d: d["rows"][idx]["bounds"].update({col: [1]}))
    assert main(["table", "--which", "1", "--verify"]) == 2
    assert "computed []" in capsys.readouterr().err
