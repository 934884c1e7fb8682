"""
Output formatting for bound reports and verification reports.

Formats: 'json', 'csv', 'markdown', 'plain' and, from Python only,
'dataframe' (needs pandas).
"""

import csv
import json
from io import StringIO
from typing import TYPE_CHECKING, Any, Dict, List, Literal, Optional, Sequence, Union

from .config import DEFAULT_DIGITS, MAX_DIGITS, OUTPUT_FORMATS
from .exceptions import InvalidParameterError
from .verification import VerificationReport
from .volume_bounds import BOUND_COLUMNS, BoundReport

if TYPE_CHECKING:
    import pandas as pd

OutputFormat = Literal['json', 'csv', 'markdown', 'plain', 'dataframe']

CHECK_COLUMNS = ['module', 'check', 'n', 'metric', 'trials', 'max_residual', 'max_found', 'bound', 'pass']


def validate_format(fmt: str, allow_dataframe: bool = True) -> str:
    """Normalise and validate an output format name."""
    allowed = OUTPUT_FORMATS + (['dataframe'] if allow_dataframe else [])
    fmt_lower = fmt.lower() if isinstance(fmt, str) else fmt
    if fmt_lower not in allowed:
        raise InvalidParameterError(
            f"Invalid output format '{fmt}'. Must be one of: {', '.join(allowed)}"
        )
    return fmt_lower


def validate_digits(digits: int) -> int:
    if isinstance(digits, bool) or not isinstance(digits, int) or not 1 <= digits <= MAX_DIGITS:
        raise InvalidParameterError(
            f"Invalid digits: {digits!r}. Must be an integer between 1 and {MAX_DIGITS}."
        )
    return digits


def _cell(value: Any, digits: int) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'PASS' if value else 'FAIL'
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def format_rows(rows: List[Dict[str, Any]], fmt: str, columns: Optional[Sequence[str]] = None,
                digits: int = DEFAULT_DIGITS) -> Union[str, 'pd.DataFrame']:
    """
    Render a list of flat rows.

    Args:
        rows: Row dictionaries
        fmt: One of 'json', 'csv', 'markdown', 'plain', 'dataframe'
        columns: Column order (default: keys of the first row)
        digits: Significant digits for floats in csv/markdown/plain

    Raises:
        InvalidParameterError: If fmt is invalid
        ImportError: If pandas is not installed for 'dataframe'
    """
    fmt = validate_format(fmt)
    digits = validate_digits(digits)
    if columns is None:
        columns = list(rows[0].keys()) if rows else []

    if fmt == 'json':
        return json.dumps(rows, indent=2)

    elif fmt == 'dataframe':
        try:
            import pandas as pd
        except ImportError:
            raise ImportError(
                "pandas is required for 'dataframe' format.\n"
                "Install with: pip install chorbifold[analysis]"
            )
        return pd.DataFrame(rows, columns=list(columns))

    elif fmt == 'csv':
        if not rows:
            return ""
        output = StringIO()
        writer = csv.DictWriter(output, fieldnames=list(columns), extrasaction='ignore', lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _cell(row.get(key), digits) for key in columns})
        return output.getvalue()

    cells = [[_cell(row.get(key), digits) for key in columns] for row in rows]
    if fmt == 'markdown':
        lines = ['| ' + ' | '.join(columns) + ' |', '|' + '|'.join('---' for _ in columns) + '|']
        lines += ['| ' + ' | '.join(line) + ' |' for line in cells]
        return '\n'.join(lines)

    # plain: aligned columns
    widths = [max([len(str(name))] + [len(line[i]) for line in cells]) for i, name in enumerate(columns)]
    lines = ['  '.join(str(name).ljust(width) for name, width in zip(columns, widths)).rstrip()]
    lines += ['  '.join(value.ljust(width) for value, width in zip(line, widths)).rstrip() for line in cells]
    return '\n'.join(lines)


def format_bound_reports(reports: Sequence[BoundReport], fmt: str,
                         digits: int = DEFAULT_DIGITS) -> Union[str, 'pd.DataFrame']:
    """
    Render bound reports.

    JSON carries the full reports with raw floats; the tabular formats use
    the BOUND_COLUMNS row with C rendered from its logarithm.
    """
    fmt = validate_format(fmt)
    if fmt == 'json':
        payload: Any = [report.to_dict() for report in reports]
        if len(reports) == 1:
            payload = payload[0]
        return json.dumps(payload, indent=2)
    if fmt == 'plain' and len(reports) == 1:
        row = reports[0].to_row(digits)
        report = reports[0]
        lines = [f"{key:>12}: {_cell(value, digits)}" for key, value in row.items()]
        lines.append(f"{'radius':>12}: {report.radius_source}")
        lines.append(f"{'crosscheck':>12}: {report.crosscheck_residual:.2e}")
        if report.radius_source == 'computed':
            lines.append(f"{'r0/2 - 0.06925':>12}: {report.half_radius_deviation:+.3e}")
        return '\n'.join(lines)
    return format_rows([report.to_row(digits) for report in reports], fmt, BOUND_COLUMNS, digits)


def format_verification(report: VerificationReport, fmt: str,
                        digits: int = DEFAULT_DIGITS) -> Union[str, 'pd.DataFrame']:
    """Render a verification report, discrepancies included."""
    fmt = validate_format(fmt)
    if fmt == 'json':
        return json.dumps(report.to_dict(), indent=2)
    rows = [check.to_dict() for check in report.checks]
    if fmt in ('csv', 'dataframe'):
        return format_rows(rows, fmt, CHECK_COLUMNS, digits)

    table = format_rows(rows, fmt, CHECK_COLUMNS, digits)
    total = len(report.checks)
    failed = len(report.failures)
    summary = f"{total - failed}/{total} checks passed for n={report.n} (seed {report.seed})"
    sections = [table, '', summary]
    if report.discrepancies:
        heading = '## Discrepancies' if fmt == 'markdown' else 'Discrepancies with printed claims:'
        sections += ['', heading]
        for entry in report.discrepancies:
            where = f"{entry['row']},{entry['col']}" if 'row' in entry else entry.get('metric', '')
            sections.append(
                f"- {entry['source']} [{where}]: computed {_cell(float(entry['computed']), digits)}, "
                f"claimed {_cell(float(entry['claimed']), digits)} ({entry['note']})"
            )
    return '\n'.join(sections)
