"""
Report emission for command results: JSON, CSV or a plain-text table.

JSON output is key-sorted and carries no timestamps, so the same inputs and
seed always produce byte-identical files.
"""
import csv
import io
import json
import sys
from pathlib import Path


SCHEMA_VERSION = 1
FORMATS = ("json", "csv", "text")


def flatten(report: dict, prefix: str = "") -> dict:
    """Nested dicts become dotted keys; lists are JSON-encoded in place."""
    out = {}
    for key in sorted(report):
        value = report[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            out.update(flatten(value, f"{name}."))
        elif isinstance(value, list):
            out[name] = json.dumps(value, sort_keys=True)
        else:
            out[name] = value
    return out


def render(report: dict, fmt: str = "json", title: str | None = None) -> str:
    body = {"schema": SCHEMA_VERSION, **report}
    if fmt == "json":
        return json.dumps(body, sort_keys=True, indent=2) + "\n"

    flat = flatten(body)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in flat.items():
            writer.writerow([key, "" if value is None else value])
        return buffer.getvalue()

    if fmt == "text":
        width = max((len(k) for k in flat), default=10)
        lines = []
        if title:
            lines += ["=" * 50, title.upper(), "=" * 50]
        for key, value in flat.items():
            lines.append(f"{key:<{width}}  {'-' if value is None else value}")
        return "\n".join(lines) + "\n"

    raise ValueError(f"unknown format {fmt!r} (expected one of {', '.join(FORMATS)})")


def write_report(report: dict, fmt: str = "json", output: str | None = None,
                 title: str | None = None) -> None:
    """Write to output (a file path) or stdout."""
    text = render(report, fmt, title)
    if output is None:
        sys.stdout.write(text)
        return
    Path(output).parent.mkdir(parents=True, exist_ok=True)
    with open(output, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    print(f"Report written to {output}", file=sys.stderr)
