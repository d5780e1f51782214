"""User-supplied f or g values read from CSV (header ``n,f`` or ``n,g``)."""

from __future__ import annotations

import csv
import io
import os
from typing import Literal

from .arithmetic import FunctionPair, divisor_sum_transform
from .factorization import recover_f

__all__ = ["CsvFormatError", "read_values_csv", "parse_values_csv", "tabulated_pair", "check_tabulated"]


class CsvFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_values_csv(text: str) -> tuple[Literal["f", "g"], list[int]]:
    """Parse CSV text; rows must run n = 1, 2, ... with no gaps."""
    rows = csv.reader(io.StringIO(text))
    header = next(rows, None)
    if header is None:
        raise CsvFormatError("empty file", 1)
    header = [h.strip() for h in header]
    if len(header) != 2 or header[0] != "n" or header[1] not in ("f", "g"):
        raise CsvFormatError(f"header must be 'n,f' or 'n,g', got {','.join(header)!r}", 1)
    column = header[1]
    values: list[int] = []
    for lineno, row in enumerate(rows, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            raise CsvFormatError(f"expected 2 fields, got {len(row)}", lineno)
        try:
            n, v = int(row[0]), int(row[1])
        except ValueError:
            raise CsvFormatError(f"non-integer field in {','.join(row)!r}", lineno) from None
        if n != len(values) + 1:
            raise CsvFormatError(f"expected n = {len(values) + 1}, got {n}", lineno)
        values.append(v)
    if not values:
        raise CsvFormatError("no data rows")
    return column, values


def read_values_csv(path: str | os.PathLike) -> tuple[Literal["f", "g"], list[int]]:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_values_csv(fh.read())


def tabulated_pair(column: Literal["f", "g"], values: list[int], name: str = "tabulated") -> FunctionPair:
    """Wrap a finite table as a FunctionPair.

    The missing side is derived on demand: g by divisor sums of f, or f by
    the matrix recovery from g. Evaluating past the table raises IndexError.
    """
    size = len(values)
    table = list(values)

    def lookup(n: int) -> int:
        if not 1 <= n <= size:
            raise IndexError(f"{name}: n = {n} outside tabulated range 1..{size}")
        return table[n - 1]

    if column == "f":
        return FunctionPair(name, lookup, lambda n: divisor_sum_transform(lookup, n), origin="tabulated")

    recovered: list[int] = []

    def f_from_g(n: int) -> int:
        if not 1 <= n <= size:
            raise IndexError(f"{name}: n = {n} outside tabulated range 1..{size}")
        if not recovered:
            recovered.extend(recover_f(lookup, size))
        return recovered[n - 1]

    return FunctionPair(name, f_from_g, lookup, origin="tabulated")


def check_tabulated(pair: FunctionPair, N: int) -> list[int]:
    """Indices n <= N where g(n) differs from the divisor sum of f."""
    return [n for n in range(1, N + 1) if pair.g(n) != divisor_sum_transform(pair.f, n)]
