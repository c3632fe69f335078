"""
Result tables with per-row provenance, and their JSON, CSV and markdown
serializations.
"""

import io
import csv
import json


KINDS = ('int', 'real', 'text')
PROVENANCES = ('paper-reproduction', 'derived', 'heuristic')
FORMATS = ('json', 'csv', 'md')


def _coerce(value, kind):
    if value is None:
        return None
    if kind == 'int':
        if isinstance(value, float) and value != int(value):
            raise ValueError('Cannot store %r in an int column' % value)
        return int(value)
    elif kind == 'real':
        return float(value)
    return str(value)


class ReportTable:
    """ An ordered table of named, typed cells.

    Parameters:
        title (str): the table title.
        columns (list): ``(name, kind)`` pairs, kind being 'int', 'real'
            or 'text'.
        meta (dict, optional): JSON-compatible metadata, e.g. the
            parameters that produced the table.

    Each row has a provenance label: 'paper-reproduction' for values that
    reproduce a published number, 'derived' for values computed from
    them, and 'heuristic' for finite-N empirical values. Cells may be None.
    """

    def __init__(self, title, columns, meta=None):
        self.title = str(title)
        self.columns = [(str(name), kind) for name, kind in columns]
        for name, kind in self.columns:
            if kind not in KINDS:
                raise ValueError('Column %r has invalid kind %r' % (name, kind))
        self.rows = []
        self.provenance = []
        self.meta = dict(meta or {})

    def __repr__(self):
        return '<ReportTable %r with %i columns and %i rows>' % (
            self.title, len(self.columns), len(self.rows))

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, ReportTable):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    @property
    def column_names(self):
        return [name for name, _ in self.columns]

    def add_row(self, cells, provenance='derived'):
        """ Append a row. ``cells`` is a sequence in column order, or a dict
        by column name (missing names give None).
        """
        if isinstance(cells, dict):
            unknown = set(cells) - set(self.column_names)
            if unknown:
                raise ValueError('Unknown columns %s' % sorted(unknown))
            cells = [cells.get(name) for name in self.column_names]
        cells = list(cells)
        if len(cells) != len(self.columns):
            raise ValueError('Row has %i cells, table has %i columns'
                             % (len(cells), len(self.columns)))
        if provenance not in PROVENANCES:
            raise ValueError('Invalid provenance %r' % provenance)
        self.rows.append([_coerce(value, kind) for value, (_, kind)
                          in zip(cells, self.columns)])
        self.provenance.append(provenance)

    def column(self, name):
        """ The values of the named column.
        """
        i = self.column_names.index(name)
        return [row[i] for row in self.rows]

    def to_dict(self):
        return dict(title=self.title,
                    columns=[[name, kind] for name, kind in self.columns],
                    rows=[list(row) for row in self.rows],
                    provenance=list(self.provenance),
                    meta=dict(self.meta))

    @classmethod
    def from_dict(cls, d):
        table = cls(d['title'], [tuple(c) for c in d['columns']], d.get('meta'))
        for row, prov in zip(d['rows'], d['provenance']):
            table.add_row(row, prov)
        return table

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _format_cell(value, kind):
    if value is None:
        return ''
    if kind == 'real':
        return '%.5f' % value
    return str(value)


def serialize(table, format='json'):
    """ Serialize a ReportTable to text.

    Parameters:
        table (ReportTable): the table.
        format (str): 'json' (full precision, includes meta), 'csv'
            (header row, minimal quoting, reals with 5 decimals) or 'md'
            (a titled pipe table, reals with 5 decimals).

    Returns:
        str, ending with a newline.
    """
    if format == 'json':
        return json.dumps(table.to_dict(), indent=2) + '\n'
    elif format == 'csv':
        f = io.StringIO()
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(table.column_names + ['provenance'])
        for row, prov in zip(table.rows, table.provenance):
            writer.writerow([_format_cell(v, kind) for v, (_, kind)
                             in zip(row, table.columns)] + [prov])
        return f.getvalue()
    elif format == 'md':
        def line(cells):
            cells = [c.replace('|', '\\|') for c in cells]
            return '| ' + ' | '.join(cells) + ' |'
        lines = ['## ' + table.title, '']
        lines.append(line(table.column_names + ['provenance']))
        lines.append('|' + '---|' * (len(table.columns) + 1))
        for row, prov in zip(table.rows, table.provenance):
            lines.append(line([_format_cell(v, kind) for v, (_, kind)
                               in zip(row, table.columns)] + [prov]))
        return '\n'.join(lines) + '\n'
    else:
        raise ValueError('Invalid format %r, use one of %s' %
                         (format, ', '.join(FORMATS)))


def serialize_record(record, format='json', title='result'):
    """ Serialize a single dict of results, as a one-row table for csv and
    md, and as a plain object for json.
    """
    if format == 'json':
        return json.dumps(record, indent=2) + '\n'
    columns = []
    for name, value in record.items():
        if isinstance(value, bool) or value is None:
            kind = 'text'
        elif isinstance(value, int):
            kind = 'int'
        elif isinstance(value, float):
            kind = 'real'
        else:
            kind = 'text'
        columns.append((name, kind))
    table = ReportTable(title, columns)
    table.add_row([_record_cell(v) for v in record.values()])
    return serialize(table, format)


def _record_cell(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, tuple)):
        return ' '.join(str(v) for v in value)
    return value
