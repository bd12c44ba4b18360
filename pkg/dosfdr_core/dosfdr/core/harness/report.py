"""Rendering and parsing of experiment reports.

Markdown reports lay out one column per estimator and the rows BIAS, SD and
RMSE of the estimated number of false nulls, plus FDR and power rows for FDR
experiments. CSV reports hold one row per estimator at full precision and
can be read back with read_report.
"""
import csv
import io
from dataclasses import fields
from typing import List, Optional, Sequence, Tuple, Union

from dosfdr.pipeline.file_system import file_to_str, str_to_file
from dosfdr.core.errors import ParseError
from dosfdr.core.harness.aggregate_stats import AggregateStats, EstimatorStats

SweepTable = List[Tuple[float, AggregateStats]]

_HEADER_FIELDS = [
    'scenario', 'master_seed', 'replicates', 'n', 'n1', 'level', 'bh_fdr',
    'bh_power', 'oracle_power'
]
_INT_FIELDS = {'master_seed', 'replicates', 'n', 'n1'}
_STAT_FIELDS = [f.name for f in fields(EstimatorStats)]
_COUNT_ROWS = [('BIAS', 'bias'), ('SD', 'sd'), ('RMSE', 'rmse')]
_FDR_ROWS = [('FDR', 'fdr'), ('POWER', 'mean_power'),
             ('REL-POWER', 'relative_power')]


def _fmt_full(v) -> str:
    if v is None:
        return ''
    return repr(float(v)) if isinstance(v, float) else str(v)


def _header_lines(stats: AggregateStats) -> List[str]:
    lines = []
    for name in _HEADER_FIELDS:
        v = getattr(stats, name)
        if v is not None:
            lines.append('# {}: {}'.format(name, _fmt_full(v)))
    return lines


def _md_table(header: List[str], rows: List[List[str]]) -> List[str]:
    lines = ['| ' + ' | '.join(header) + ' |']
    lines.append('|' + '|'.join(['---'] * len(header)) + '|')
    for row in rows:
        lines.append('| ' + ' | '.join(row) + ' |')
    return lines


def _md_value(v: Optional[float], digits: int) -> str:
    return '' if v is None else '{:.{}f}'.format(v, digits)


def render_markdown(stats: AggregateStats) -> str:
    """Render stats as a markdown table with estimators as columns.

    Counts are shown with 1 decimal and FDR and power with 3.
    """
    names = stats.estimator_names
    rows = []
    for label, attr in _COUNT_ROWS:
        rows.append([label] + [
            _md_value(getattr(s, attr), 1) for s in stats.estimators
        ])
    if stats.level is not None:
        for label, attr in _FDR_ROWS:
            rows.append([label] + [
                _md_value(getattr(s, attr), 3) for s in stats.estimators
            ])
    lines = _header_lines(stats) + [''] + _md_table([''] + names, rows)
    return '\n'.join(lines) + '\n'


def render_sweep_markdown(table: SweepTable) -> str:
    """Render a c-sweep with one row per value of c.

    Each estimator contributes its mean count, RMSE and mean k_hat / n.
    """
    if len(table) == 0:
        return ''
    first = table[0][1]
    header = ['c']
    for name in first.estimator_names:
        header += [
            '{} mean'.format(name), '{} RMSE'.format(name),
            '{} k/n'.format(name)
        ]
    rows = []
    for c, stats in table:
        row = ['{:g}'.format(c)]
        for s in stats.estimators:
            row += [
                _md_value(s.mean_count, 1),
                _md_value(s.rmse, 1),
                _md_value(s.mean_k_frac, 4)
            ]
        rows.append(row)
    lines = _header_lines(first) + [''] + _md_table(header, rows)
    return '\n'.join(lines) + '\n'


def render_csv(stats: Union[AggregateStats, SweepTable]) -> str:
    """Render stats, or a c-sweep table, as CSV at full precision.

    Header lines starting with '#' carry the scenario, seed and other
    experiment-wide values. A sweep table gets a leading column c.
    """
    if isinstance(stats, AggregateStats):
        table = [(None, stats)]
    else:
        table = stats
    if len(table) == 0:
        return ''

    out = io.StringIO()
    for line in _header_lines(table[0][1]):
        out.write(line + '\n')
    writer = csv.writer(out, lineterminator='\n')
    is_sweep = table[0][0] is not None
    writer.writerow((['c'] if is_sweep else []) + _STAT_FIELDS)
    for c, s in table:
        for est in s.estimators:
            row = [_fmt_full(getattr(est, f)) for f in _STAT_FIELDS]
            writer.writerow(([_fmt_full(float(c))] if is_sweep else []) + row)
    return out.getvalue()


def render_report(stats: Union[AggregateStats, SweepTable],
                  fmt: str = 'md') -> str:
    if fmt == 'csv':
        return render_csv(stats)
    if isinstance(stats, AggregateStats):
        return render_markdown(stats)
    return render_sweep_markdown(stats)


def write_report(stats: Union[AggregateStats, SweepTable],
                 uri: str,
                 fmt: str = 'md') -> str:
    """Write a report to uri and return its text.

    Raises:
        NotWritableError: if uri cannot be written
    """
    text = render_report(stats, fmt)
    str_to_file(text, uri)
    return text


def _parse_value(v: str, name: str):
    if v == '':
        return None
    if name in _INT_FIELDS:
        return int(v)
    if name in ('scenario', 'name'):
        return v
    return float(v)


def parse_report(text: str) -> Union[AggregateStats, SweepTable]:
    """Parse a CSV report produced by render_csv.

    Returns:
        AggregateStats, or a list of (c, AggregateStats) for a sweep table

    Raises:
        ParseError: on a malformed line
    """
    header = {}
    body = []
    body_line_nums = []
    for line_num, line in enumerate(text.splitlines(), start=1):
        if line.startswith('#'):
            key, sep, value = line[1:].partition(':')
            key = key.strip()
            if not sep or key not in _HEADER_FIELDS:
                raise ParseError(line_num, line)
            header[key] = _parse_value(value.strip(), key)
        elif line.strip():
            body.append(line)
            body_line_nums.append(line_num)

    if not body:
        raise ParseError(len(text.splitlines()), 'missing CSV table')
    reader = csv.DictReader(io.StringIO('\n'.join(body) + '\n'))
    is_sweep = 'c' in (reader.fieldnames or [])

    groups: List[Tuple[Optional[float], List[EstimatorStats]]] = []
    for row, line_num in zip(reader, body_line_nums[1:]):
        try:
            est = EstimatorStats(**{
                f: _parse_value(row[f], f)
                for f in _STAT_FIELDS
            })
            c = float(row['c']) if is_sweep else None
        except (KeyError, TypeError, ValueError):
            raise ParseError(line_num, body[body_line_nums.index(line_num)])
        if not groups or groups[-1][0] != c:
            groups.append((c, []))
        groups[-1][1].append(est)

    def _stats(ests: Sequence[EstimatorStats]) -> AggregateStats:
        try:
            return AggregateStats(estimators=list(ests), **header)
        except TypeError:
            raise ParseError(1, 'missing report header lines')

    if is_sweep:
        return [(c, _stats(ests)) for c, ests in groups]
    return _stats(groups[0][1] if groups else [])


def read_report(uri: str) -> Union[AggregateStats, SweepTable]:
    """Read a CSV report written by write_report.

    Raises:
        NotReadableError, ParseError
    """
    return parse_report(file_to_str(uri))
