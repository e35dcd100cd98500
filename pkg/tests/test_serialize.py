import io
import json

import pytest
from hypothesis import given, strategies as st

from affclass import golden
from affclass.analysis import op_table, subclass_report
from affclass.classifier import iter_member_rules
from affclass.config import RunConfig, ValidationError
from affclass.serialize import (
    format_rule,
    members_from_csv,
    members_from_json,
    members_to_csv,
    members_to_json,
    parse_rule,
    report_to_csv,
    report_to_json,
    report_to_text,
    table_from_csv,
    table_from_json,
    table_to_csv,
    table_to_json,
    write_table_csv,
)


def test_rule_format_switches_to_hex_above_n5():
    assert format_rule(5, 7) == 7
    assert format_rule(6, 7) == "0" * 15 + "7"
    assert parse_rule(6, "0" * 15 + "7") == 7
    with pytest.raises(ValidationError):
        parse_rule(6, 7)
    assert parse_rule(3, "46") == 46


@pytest.mark.parametrize("op", ["xor", "cvt"])
@pytest.mark.parametrize("n, k", [(2, 1), (3, 2), (3, 16), (4, 9)])
def test_table_round_trips(op, n, k):
    t = op_table(n, k, op)
    assert table_from_csv(table_to_csv(t), n, k) == t
    assert table_from_json(table_to_json(t)) == t


def test_streamed_csv_equals_materialized():
    buf = io.StringIO()
    write_table_csv(buf, 4, 3, "xor", rows_per_tile=100)
    assert buf.getvalue() == table_to_csv(op_table(4, 3, "xor"))


def test_table_csv_layout_mirrors_printed_table():
    text = table_to_csv(op_table(3, 1, "xor"))
    lines = text.splitlines()
    assert len(lines) == 17
    assert lines[0].startswith("xor,0,2,4,6,8")
    op, axis, rows = golden.parse_table(golden.XOR_CLASS_1)
    for line in lines[1:]:
        label, *cells = map(int, line.split(","))
        assert rows[label] == cells


def test_csv_rejects_mismatched_labels():
    text = "xor,0,2\n0,0,2\n4,2,0\n"
    with pytest.raises(ValidationError):
        table_from_csv(text, 2, 1)


@given(st.integers(1, 6), st.data())
def test_member_lists_round_trip(n, data):
    k = data.draw(st.integers(1, 2 ** (n + 1)))
    rules = [r for _, r in zip(range(20), iter_member_rules(n, k))]
    assert members_from_json(members_to_json(n, k, rules)) == (n, k, rules)
    assert members_from_csv(n, members_to_csv(n, k, rules)) == (k, rules)


def test_members_csv_validation():
    with pytest.raises(ValidationError):
        members_from_csv(3, "a,b\n1,2\n")
    with pytest.raises(ValidationError):
        members_from_csv(3, "class,member\n1,0\n2,170\n")


def test_report_renderings():
    rep = subclass_report(3, 1)
    obj = json.loads(report_to_json(rep))
    assert obj["affine"] == 0
    assert [s["size"] for s in obj["subclasses"]] == [1, 4, 6, 4, 1]
    assert report_to_csv(rep).splitlines()[1] == "1,0,0"
    assert report_to_text(rep).splitlines()[-1] == "hd 4 [1]: 46"


def test_output_is_deterministic():
    t = op_table(4, 17, "cvt")
    assert table_to_csv(t) == table_to_csv(op_table(4, 17, "cvt"))


def test_run_config(monkeypatch):
    assert RunConfig().max_n_materialize == 4
    monkeypatch.setenv("AFFCLASS_MAX_N", "5")
    assert RunConfig.from_env().max_n_materialize == 5
    assert RunConfig.from_env(max_n_materialize=3).max_n_materialize == 3
    monkeypatch.setenv("AFFCLASS_MAX_N", "x")
    with pytest.raises(ValidationError):
        RunConfig.from_env()
    with pytest.raises(ValidationError):
        RunConfig(max_n_table=4, max_n_materialize=5)
    with pytest.raises(ValidationError):
        RunConfig(output_format="xml")
