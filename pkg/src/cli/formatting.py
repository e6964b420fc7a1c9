"""Aligned text rendering for command output."""
from typing import Any, Sequence


def format_matrix(rows: Sequence[Sequence[int]]) -> str:
    """Right-aligned columns, one matrix row per line."""
    if not rows:
        return "(empty)"
    width = max((len(str(value)) for row in rows for value in row), default=1)
    return "\n".join(" ".join(str(value).rjust(width) for value in row) for row in rows)


def format_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(h) for h in headers]] + [[str(value) for value in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def format_pairs(pairs: Sequence[tuple[str, Any]]) -> str:
    """key: value lines with keys padded to one width."""
    width = max(len(key) for key, _ in pairs)
    return "\n".join(f"{key.ljust(width)} : {value}" for key, value in pairs)
