from logging import getLogger
from typing import Any, Dict, List, Sequence

from engine.log import LOGGER_NAME
logger = getLogger(LOGGER_NAME)


def document_to_text(document: Dict[str, Any]) -> str:
    """Format a report document as aligned text: scalars first, then one table per list."""
    scalars = []
    tables = []
    _flatten(document, '', scalars, tables)
    width = max((len(key) for key, _ in scalars), default=0)
    text = '\n'.join('{}  {}'.format(key.ljust(width), value) for key, value in scalars)
    for title, rows in tables:
        text += '\n\n{}\n{}'.format(title, _format_table(rows))
    return text.strip('\n')


def _flatten(document: Dict[str, Any], prefix: str, scalars: List, tables: List):
    for key in sorted(document):
        value = document[key]
        name = '{}{}'.format(prefix, key)
        if isinstance(value, dict):
            _flatten(value, name + '.', scalars, tables)
        elif isinstance(value, list) and value and all(isinstance(row, dict) for row in value):
            tables.append((name, value))
        else:
            scalars.append((name, _format_value(value)))


def _format_value(value: Any) -> str:
    if value is None:
        return '-'
    elif isinstance(value, bool):
        return 'yes' if value else 'no'
    elif isinstance(value, (list, tuple)):
        if not value:
            return '-'
        return ' '.join('({})'.format(','.join(str(x) for x in v)) if isinstance(v, (list, tuple))
                        else _format_value(v) for v in value)
    else:
        return str(value)


def _format_table(rows: Sequence[Dict[str, Any]]) -> str:
    """Format rows with the same keys as columns."""
    logger.debug('formatting table - {} rows'.format(len(rows)))
    headers = sorted({key for row in rows for key in row})
    cells = [[_format_value(row.get(h)) for h in headers] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(headers)]
    lines = ['  '.join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for r in cells:
        lines.append('  '.join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return '\n'.join(lines)
