import csv
import io
import json

from powerslab.util.testing import run_tests_if_main, raises

from powerslab.report import ReportTable, serialize, serialize_record


def make_table():
    t = ReportTable('Example', [('K', 'int'), ('C1', 'real'), ('note', 'text')],
                    meta=dict(version='0.1.0', runtime_ms=12,
                              params=dict(grh=True)))
    t.add_row([6, 7.589183, ''], 'paper-reproduction')
    t.add_row(dict(K=7, C1=6.7619, note='a, "quoted" | note'), 'derived')
    t.add_row([2, None, 'no value'], 'heuristic')
    return t


def test_table_rows():
    t = make_table()
    assert len(t) == 3
    assert t.column('K') == [6, 7, 2]
    assert t.rows[2][1] is None
    with raises(ValueError):
        t.add_row([1, 2.0])
    with raises(ValueError):
        t.add_row([1, 2.0, 'x'], 'guess')
    with raises(ValueError):
        t.add_row([1.5, 2.0, 'x'])
    with raises(ValueError):
        t.add_row(dict(X=1))
    with raises(ValueError):
        ReportTable('bad', [('a', 'complex')])


def test_serialize_json_round_trip():
    t = make_table()
    text = serialize(t, 'json')
    d = json.loads(text)
    assert d['title'] == 'Example'
    assert d['rows'][0][1] == 7.589183  # full precision
    assert d['meta']['version'] == '0.1.0'
    assert ReportTable.from_json(text) == t
    # Deterministic
    assert serialize(ReportTable.from_json(text), 'json') == text


def test_serialize_csv():
    text = serialize(make_table(), 'csv')
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ['K', 'C1', 'note', 'provenance']
    assert rows[1] == ['6', '7.58918', '', 'paper-reproduction']
    assert rows[2][2] == 'a, "quoted" | note'
    assert rows[3] == ['2', '', 'no value', 'heuristic']
    assert text.endswith('\n')


def test_serialize_md():
    lines = serialize(make_table(), 'md').splitlines()
    assert lines[0] == '## Example'
    assert lines[2] == '| K | C1 | note | provenance |'
    assert lines[3] == '|---|---|---|---|'
    assert lines[4] == '| 6 | 7.58918 |  | paper-reproduction |'
    assert '\\|' in lines[5]


def test_serialize_empty():
    t = ReportTable('Empty', [('a', 'int')])
    assert json.loads(serialize(t, 'json'))['rows'] == []
    assert serialize(t, 'csv') == 'a,provenance\n'
    assert len(serialize(t, 'md').splitlines()) == 4
    assert ReportTable.from_json(serialize(t, 'json')) == t
    with raises(ValueError):
        serialize(t, 'xml')


def test_serialize_record():
    record = dict(K=6, lhs=0.864, satisfied=True, factors=[3, 5])
    assert json.loads(serialize_record(record)) == record
    rows = list(csv.reader(io.StringIO(serialize_record(record, 'csv'))))
    assert rows[0] == ['K', 'lhs', 'satisfied', 'factors', 'provenance']
    assert rows[1] == ['6', '0.86400', 'true', '3 5', 'derived']


run_tests_if_main()
