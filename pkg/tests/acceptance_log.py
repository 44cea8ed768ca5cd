"""Shared list of acceptance result lines, printed at the end of a pytest run."""

LINES: list[str] = []
