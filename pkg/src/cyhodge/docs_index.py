"""Markdown index of the registered checks."""

from __future__ import annotations

from .checks import select

HEADER = """# Registered checks

Generated by `python3 scripts/gen_checks_index.py`; `tests/test_checks_cli.py` keeps it in sync.
Run any subset with `cyhodge verify <prefix>`.

| id | statement |
|----|-----------|
"""


def render() -> str:
    rows = [f"| `{c.id}` | {c.citation.replace('|', '/')} |" for c in select("all")]
    return HEADER + "\n".join(rows) + "\n"
