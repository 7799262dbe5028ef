"""JSON report assembly.

The default rendering is byte-identical across repeated runs on the same
input: no timestamps, no floats, insertion-ordered keys.  Wall-clock
numbers are added only when the caller opts in, since they vary run to
run.
"""

from __future__ import annotations

import hashlib
import json
from typing import Optional, Sequence

SCHEMA_ID = "liftcheck-report/1"

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "tool", "input", "tasks"],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "tool": {
            "type": "object",
            "required": ["name", "version"],
            "properties": {
                "name": {"const": "liftcheck"},
                "version": {"type": "string"},
            },
        },
        "input": {
            "type": "object",
            "required": ["path", "sha256"],
            "properties": {
                "path": {"type": "string"},
                "sha256": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
            },
        },
        "tasks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "kind", "status"],
                "properties": {
                    "index": {"type": "integer", "minimum": 0},
                    "kind": {"type": "string"},
                    "status": {"enum": ["ok", "not-applicable"]},
                    "verdict": {"type": ["string", "null"]},
                    "warnings": {"type": "array", "items": {"type": "string"}},
                    "trail": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["name", "outcome"],
                            "properties": {
                                "outcome": {"enum": ["pass", "fail", "info"]},
                            },
                        },
                    },
                    "wall_clock_seconds": {"type": "number"},
                },
            },
        },
        "corpus": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "reference", "ok", "checks"],
                "properties": {
                    "name": {"type": "string"},
                    "reference": {"type": "string"},
                    "ok": {"type": "boolean"},
                    "checks": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["name", "expected", "got", "ok"],
                        },
                    },
                },
            },
        },
    },
}


def input_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _tool_stanza() -> dict:
    from . import __version__

    return {"name": "liftcheck", "version": __version__}


def build_report(
    path_label: str,
    source: str,
    task_results: Sequence[dict],
    timings: Optional[Sequence[float]] = None,
) -> dict:
    tasks = [dict(r) for r in task_results]
    if timings is not None:
        for r, t in zip(tasks, timings):
            r["wall_clock_seconds"] = round(t, 4)
    return {
        "schema": SCHEMA_ID,
        "tool": _tool_stanza(),
        "input": {"path": path_label, "sha256": input_digest(source)},
        "tasks": tasks,
    }


def build_corpus_report(
    fixture_results: Sequence[dict],
    timings: Optional[Sequence[float]] = None,
) -> dict:
    fixtures = [dict(r) for r in fixture_results]
    if timings is not None:
        for r, t in zip(fixtures, timings):
            r["wall_clock_seconds"] = round(t, 4)
    names = ",".join(r["name"] for r in fixtures)
    return {
        "schema": SCHEMA_ID,
        "tool": _tool_stanza(),
        "input": {"path": f"corpus:{names}", "sha256": input_digest(names)},
        "tasks": [],
        "corpus": fixtures,
        "ok": all(r["ok"] for r in fixtures),
    }


def render_report(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"
