"""Result reports: plain dicts with a fixed key order, rendered as JSON or text.

The JSON layout is pinned by ``report_schema.json`` next to this module.
``time_ms`` is the only field allowed to differ between identical runs.
"""

from __future__ import annotations

import json
from importlib import resources

TIMING_FIELD = "time_ms"


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("report_schema.json").read_text())


def emit_report(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "text":
        return _text(report)
    raise ValueError(f"unknown report format {fmt!r}")


def _text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "witness" and value is not None:
            lines.append("witness:")
            lines += [" ".join(map(str, part)) for part in value]
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            lines += [f"  {k}: {_scalar(v)}" for k, v in value.items()]
        else:
            lines.append(f"{key}: {_scalar(value)}")
    return "\n".join(lines) + "\n"


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return " ".join(_scalar(x) for x in v)
    return str(v)


def strip_timing(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != TIMING_FIELD}
