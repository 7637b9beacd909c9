"""Exact rendering of report values.

JSON output is the ground truth: rationals become ``"num/den"`` strings and
integers stay integers. CSV and table output carry the same strings.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

from .errors import InputError


def rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; decimals and exponents are rejected."""
    s = text.strip()
    num, _, den = s.partition("/")
    try:
        if not num.lstrip("+-").isdigit() or (den and not den.isdigit()):
            raise ValueError
        value = Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not an exact rational: {text!r} (use p or p/q)") from None
    return value


def to_json(payload: Any) -> str:
    return json.dumps(_plain(payload), indent=2, sort_keys=True) + "\n"


def _plain(x: Any) -> Any:
    if isinstance(x, Fraction):
        return rational(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _fields(rows: list[dict]) -> list[str]:
    # rows may be heterogeneous; keep first-seen order
    return list(dict.fromkeys(k for r in rows for k in r))


def to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if not rows:
        return ""
    w = csv.DictWriter(buf, fieldnames=_fields(rows), lineterminator="\n", restval="")
    w.writeheader()
    for r in rows:
        w.writerow({k: _cell(v) for k, v in r.items()})
    return buf.getvalue()


def to_table(rows: list[dict]) -> str:
    if not rows:
        return "(no rows)\n"
    fields = _fields(rows)
    cells = [[_cell(r[f]) if f in r else "" for f in fields] for r in rows]
    widths = [max(len(f), *(len(c[i]) for c in cells)) for i, f in enumerate(fields)]
    lines = ["  ".join(f.ljust(w) for f, w in zip(fields, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _cell(v: Any) -> str:
    v = _plain(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return str(v)
