import csv
from typing import List

from dosfdr.pipeline.file_system import file_to_str
from dosfdr.core.errors import ParseError
from dosfdr.core.pvalue_sample import PValueSample, validate_sample

PLAIN = 'plain'
CSV_PREFIX = 'csv:'


def _parse_plain(text: str) -> List[float]:
    values = []
    for line_num, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s:
            continue
        try:
            values.append(float(s))
        except ValueError:
            raise ParseError(line_num, line)
    return values


def _parse_csv(text: str, column: str) -> List[float]:
    values = []
    col_ind = None
    for line_num, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = next(csv.reader([line]))
        if col_ind is None:
            header = [h.strip() for h in row]
            if column not in header:
                raise ParseError(line_num,
                                 'no column {!r} in {}'.format(column, line))
            col_ind = header.index(column)
            continue
        try:
            values.append(float(row[col_ind]))
        except (IndexError, ValueError):
            raise ParseError(line_num, line)
    return values


def read_pvalues(uri: str, fmt: str = PLAIN) -> PValueSample:
    """Read p-values from a file and validate them.

    Args:
        uri: path of the file
        fmt: 'plain' for one value per line, or 'csv:COL' for the column COL
            of a CSV file with a header row. Blank lines are skipped.

    Raises:
        NotReadableError: if the file cannot be read
        ParseError: with the 1-based line number of a malformed value
        EstimationError: if the values are not valid p-values
    """
    text = file_to_str(uri)
    if fmt == PLAIN:
        values = _parse_plain(text)
    elif fmt.startswith(CSV_PREFIX) and len(fmt) > len(CSV_PREFIX):
        values = _parse_csv(text, fmt[len(CSV_PREFIX):])
    else:
        raise ValueError(
            'format must be plain or csv:COLUMN, got {!r}'.format(fmt))
    return validate_sample(values)
