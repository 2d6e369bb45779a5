"""Columnar sweep results and the CSV dialect used by every command.

CSV dialect: comma separator, '.' decimal point, '#'-prefixed comment
lines before the header row. Floats are written with repr(), Python's
shortest round-trip representation (up to 17 significant digits), so
identical inputs produce byte-identical files.
"""

from __future__ import annotations

from typing import Sequence


def format_value(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int, bool)):
        return str(int(v))
    return repr(float(v))


def write_csv(path, names: Sequence[str], rows, comments: Sequence[str] = ()) -> None:
    """Write rows (iterable of sequences) under a header line, with # comments."""
    lines = [f"# {c}" for c in comments]
    lines.append(",".join(names))
    for row in rows:
        lines.append(",".join(format_value(v) for v in row))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


class SweepTable:
    """Ordered, named, equal-length numeric columns.

    The first column is the sweep axis and must be strictly increasing.
    """

    def __init__(self, columns: Sequence[tuple[str, Sequence[float]]]):
        if not columns:
            raise ValueError("SweepTable needs at least one column")
        self._names = [name for name, _ in columns]
        if len(set(self._names)) != len(self._names):
            raise ValueError("duplicate column names")
        self._data = [[float(v) for v in values] for _, values in columns]
        length = len(self._data[0])
        if any(len(col) != length for col in self._data):
            raise ValueError("all columns must have equal length")
        axis = self._data[0]
        if any(b <= a for a, b in zip(axis, axis[1:])):
            raise ValueError(f"sweep axis {self._names[0]!r} must be strictly increasing")

    @property
    def names(self) -> list[str]:
        return list(self._names)

    def column(self, name: str) -> list[float]:
        return list(self._data[self._names.index(name)])

    def __len__(self) -> int:
        return len(self._data[0])

    def rows(self):
        return zip(*self._data)

    def write_csv(self, path, comments: Sequence[str] = ()) -> None:
        write_csv(path, self._names, self.rows(), comments)
