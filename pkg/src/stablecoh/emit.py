"""Serialize result payloads as text, JSON, CSV or a LaTeX tabular.

A payload is a plain dict::

    {"check": str, "params": {...}, "status": str,
     "data": [row, ...], "window": {"bound": int, "hypothesis_ok": bool} | None}

with an optional scalar ``"result"``.  Rows are flat dicts; degree/rank
tables use exactly the keys ``degree`` and ``rank``.  Every format is a
pure function of the payload, so identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Sequence

FORMATS = ("text", "json", "csv", "latex")

DEGREE_RANK = ("degree", "rank")


def _columns(payload: dict[str, Any], columns: Sequence[str] | None) -> list[str]:
    if columns:
        return list(columns)
    seen: list[str] = []
    for row in payload["data"]:
        for key in row:
            if key not in seen:
                seen.append(key)
    return seen


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"), ensure_ascii=False)
    return str(value)


def to_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def to_csv(payload, columns=None) -> str:
    cols = _columns(payload, columns)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in payload["data"]:
        writer.writerow([_cell(row.get(c)) for c in cols])
    return buf.getvalue()


def to_text(payload, columns=None) -> str:
    cols = _columns(payload, columns)
    params = " ".join(f"{k}={_cell(v)}" for k, v in payload["params"].items())
    lines = [f"# {payload['check']} {params} status={payload['status']}".rstrip()]
    window = payload.get("window")
    if window:
        ok = "yes" if window["hypothesis_ok"] else "no"
        lines.append(f"# valid below degree {window['bound']} (hypothesis satisfied: {ok})")
    table = [cols] + [[_cell(row.get(c)) for c in cols] for row in payload["data"]]
    widths = [max(len(r[i]) for r in table) for i in range(len(cols))]
    for r in table:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    if "result" in payload:
        lines.append(f"result: {_cell(payload['result'])}")
    return "\n".join(lines) + "\n"


def _tex_escape(s: str) -> str:
    for a, b in (("\\", r"\textbackslash{}"), ("_", r"\_"), ("&", r"\&"), ("%", r"\%"),
                 ("#", r"\#"), ("^", r"\^{}")):
        s = s.replace(a, b)
    return s


def to_latex(payload, columns=None) -> str:
    cols = _columns(payload, columns)
    rows = payload["data"]
    lines = [f"% {_tex_escape(payload['check'])}"]
    if tuple(cols) == DEGREE_RANK:
        # dense rank vector indexed by degree 0, 1, 2, ...
        ranks = {r["degree"]: r["rank"] for r in rows}
        top = max(ranks, default=-1)
        entries = [str(ranks.get(k, 0)) for k in range(top + 1)] or ["0"]
        lines.append(f"% degrees 0..{max(top, 0)}")
        lines.append(r"\begin{tabular}{" + "c" * len(entries) + "}")
        lines.append(" & ".join(entries) + r" \\")
    else:
        lines.append(r"\begin{tabular}{" + "c" * max(len(cols), 1) + "}")
        lines.append(" & ".join(_tex_escape(c) for c in cols) + r" \\ \hline")
        for row in rows:
            lines.append(" & ".join(_tex_escape(_cell(row.get(c))) for c in cols) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def emit(fmt: str, payload: dict[str, Any], columns: Sequence[str] | None = None) -> str:
    if fmt == "json":
        return to_json(payload)
    if fmt == "csv":
        return to_csv(payload, columns)
    if fmt == "text":
        return to_text(payload, columns)
    if fmt == "latex":
        return to_latex(payload, columns)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def degree_rank_rows(terms) -> list[dict[str, int]]:
    return [{"degree": d, "rank": r} for d, r in terms]
