"""Arbitrary-precision DP tables for the three counting recurrences.

All three sequences live in the wedge 0 <= m <= n/(k-1) with an all-ones
boundary row at m = 0:

    relaxed:   r[n][m] = r[n][m-1] + (m+1) r[n-1][m]
    compacted: c[n][m] = c[n][m-1] + (m+1) c[n-1][m] - (m-1) c[n-k][m-1]
    dfa:       b[n][m] = 2 b[n][m-1] + (m+1) b[n-1][m] - m b[n-k][m-1]

Reads outside the wedge are zero, with one deliberate exception: the
subtraction term treats the m = 0 boundary row as extending to negative n
with value 1.  Without that extension the dfa recurrence contradicts its own
small values (the m = 1 row would start 2, 4, 8, ... instead of 1, 3, 7, ...);
with it all three diagonals match the brute-force oracles.

The n-th diagonal entry, at (n(k-1), n), counts the structures of size n.
"""

from __future__ import annotations

import hashlib
import sys
from dataclasses import dataclass
from math import log2
from pathlib import Path

KINDS = ("relaxed", "compacted", "dfa")
_A_MUL = {"relaxed": 1, "compacted": 1, "dfa": 2}

DEFAULT_BYTE_BUDGET = 2**31  # 2 GiB


class CacheError(Exception):
    """Raised for unreadable or mismatched table cache files."""


def _sub_coef(kind: str, m: int) -> int:
    if kind == "compacted":
        return m - 1
    if kind == "dfa":
        return m
    return 0


@dataclass
class CountTable:
    kind: str
    k: int
    n_max: int
    entries: dict[tuple[int, int], int]

    def entry(self, n: int, m: int) -> int:
        if not 0 <= n <= self.n_max or m < 0:
            raise ValueError(f"out-of-range: ({n}, {m})")
        if (self.k - 1) * m > n:
            return 0
        return self.entries[(n, m)]

    def diagonal(self, n: int) -> int:
        return self.entry((self.k - 1) * n, n)

    def wedge_size(self) -> int:
        return _wedge_size(self.k, self.n_max)


def _wedge_size(k: int, n_max: int) -> int:
    return sum(n_max - (k - 1) * m + 1 for m in range(n_max // (k - 1) + 1))


def _check_args(kind: str, k: int, n_max: int):
    if kind not in KINDS:
        raise ValueError(f"unknown-kind: {kind}")
    if k < 2:
        raise ValueError(f"arity-k: {k}")
    if n_max < 0:
        raise ValueError(f"negative-size: {n_max}")


def _projected_bytes(kind: str, k: int, n_max: int) -> int:
    # crude upper bound: column maxima grow by at most a factor
    # a + m_max + 2 per column, so entry n needs ~n log2(...) bits
    m_max = n_max // (k - 1)
    growth = log2(_A_MUL[kind] + m_max + 2)
    total = 0
    for n in range(n_max + 1):
        rows = min(n // (k - 1), m_max) + 1
        total += rows * (28 + int(n * growth) // 8 + 4)
    return total


def build_table(
    kind: str, k: int, n_max: int, byte_budget: int = DEFAULT_BYTE_BUDGET
) -> CountTable:
    """Fill the whole wedge up to column n_max, guarding the memory footprint."""
    _check_args(kind, k, n_max)
    if _projected_bytes(kind, k, n_max) > byte_budget:
        raise ValueError(
            f"byte-budget: projected table exceeds configured byte budget ({byte_budget})"
        )
    table = CountTable(kind, k, -1, {})
    _extend_entries(table, n_max, byte_budget)
    return table


def extend_table(
    table: CountTable, n_max: int, byte_budget: int = DEFAULT_BYTE_BUDGET
) -> CountTable:
    """Grow a table in place to a larger n_max; no-op when already big enough."""
    if n_max <= table.n_max:
        return table
    _extend_entries(table, n_max, byte_budget)
    return table


def _extend_entries(table: CountTable, n_max: int, byte_budget: int):
    kind, k = table.kind, table.k
    a = _A_MUL[kind]
    entries = table.entries
    used = sum(sys.getsizeof(v) for v in entries.values())

    def read(n: int, m: int) -> int:
        if n < 0 or (k - 1) * m > n:
            return 0
        return entries[(n, m)]

    def read_sub(n: int, m: int) -> int:
        if m == 0:
            return 1  # boundary row extends across all n
        return read(n, m)

    for n in range(table.n_max + 1, n_max + 1):
        entries[(n, 0)] = 1
        used += sys.getsizeof(1)
        for m in range(1, n // (k - 1) + 1):
            value = (
                a * read(n, m - 1)
                + (m + 1) * read(n - 1, m)
                - _sub_coef(kind, m) * read_sub(n - k, m - 1)
            )
            assert value >= 0, f"negative entry at ({n}, {m}) for {kind}, k={k}"
            if kind == "relaxed":
                assert value > 0, f"zero relaxed entry inside the wedge at ({n}, {m})"
            entries[(n, m)] = value
            used += sys.getsizeof(value)
            if used > byte_budget:
                raise ValueError(
                    f"byte-budget: table exceeded configured byte budget ({byte_budget})"
                )
        table.n_max = n


def diagonal_sequence(kind: str, k: int, n_max: int, table: CountTable | None = None) -> list[int]:
    """[count(n) for n in 0..n_max], i.e. the wedge diagonal ((k-1)n, n).

    With no table given the DP streams over columns keeping only the last
    k + 1, so large diagonals never hold the full wedge in memory.
    """
    _check_args(kind, k, n_max)
    if table is not None:
        if table.kind != kind or table.k != k:
            raise CacheError(
                f"cache-mismatch: table is ({table.kind}, k={table.k}), "
                f"requested ({kind}, k={k})"
            )
        if table.n_max < (k - 1) * n_max:
            raise ValueError(f"out-of-range: table stops at column {table.n_max}")
        return [table.diagonal(n) for n in range(n_max + 1)]

    a = _A_MUL[kind]
    cols: dict[int, list[int]] = {}
    diag: list[int] = []

    for n in range(0, (k - 1) * n_max + 1):
        m_top = n // (k - 1)
        col = [1] * (m_top + 1)
        prev = cols.get(n - 1)
        back = cols.get(n - k)
        for m in range(1, m_top + 1):
            left = prev[m] if prev is not None and m < len(prev) else 0
            if m - 1 == 0:
                sub = 1
            elif back is not None and m - 1 < len(back):
                sub = back[m - 1]
            else:
                sub = 0
            value = a * col[m - 1] + (m + 1) * left - _sub_coef(kind, m) * sub
            assert value >= 0
            col[m] = value
        cols[n] = col
        cols.pop(n - k, None)
        if n % (k - 1) == 0:
            diag.append(col[n // (k - 1)])
    return diag[: n_max + 1]


_MAGIC = "ctab 1"


def save_table(table: CountTable, path) -> None:
    """Text format: 5-line header, then one decimal integer per line in
    row-major wedge order (for m ascending, n from (k-1)m to n_max)."""
    lines = []
    for m in range(table.n_max // (table.k - 1) + 1):
        for n in range((table.k - 1) * m, table.n_max + 1):
            lines.append(str(table.entries[(n, m)]))
    body = "".join(line + "\n" for line in lines)
    checksum = hashlib.sha256(body.encode("ascii")).hexdigest()
    header = (
        f"{_MAGIC}\nkind {table.kind}\nk {table.k}\n"
        f"n_max {table.n_max}\nchecksum {checksum}\n"
    )
    Path(path).write_text(header + body, encoding="ascii")


def load_table(path) -> CountTable:
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise CacheError(f"cache-corrupt: unreadable file ({exc})") from None
    head, sep, body = text.partition("checksum ")
    if not sep:
        raise CacheError("cache-corrupt: missing checksum line")
    checksum, nl, body = body.partition("\n")
    if not nl:
        raise CacheError("cache-corrupt: truncated header")
    head_lines = head.splitlines()
    if len(head_lines) != 4 or head_lines[0] != _MAGIC:
        raise CacheError("cache-corrupt: bad header")
    try:
        kind = head_lines[1].removeprefix("kind ").strip()
        k = int(head_lines[2].removeprefix("k ").strip())
        n_max = int(head_lines[3].removeprefix("n_max ").strip())
    except ValueError:
        raise CacheError("cache-corrupt: malformed header fields") from None
    if kind not in KINDS or k < 2 or n_max < 0:
        raise CacheError("cache-corrupt: malformed header fields")
    if hashlib.sha256(body.encode("ascii")).hexdigest() != checksum:
        raise CacheError("cache-corrupt: checksum mismatch")
    raw = body.splitlines()
    if len(raw) != _wedge_size(k, n_max):
        raise CacheError("cache-corrupt: wrong entry count")
    entries: dict[tuple[int, int], int] = {}
    idx = 0
    try:
        for m in range(n_max // (k - 1) + 1):
            for n in range((k - 1) * m, n_max + 1):
                entries[(n, m)] = int(raw[idx])
                idx += 1
    except ValueError:
        raise CacheError("cache-corrupt: non-integer entry") from None
    for n in range(n_max + 1):
        if entries[(n, 0)] != 1:
            raise CacheError("cache-corrupt: boundary row invariant broken")
    for value in entries.values():
        if value < 0:
            raise CacheError("cache-corrupt: negative entry")
    if kind == "relaxed" and any(v == 0 for v in entries.values()):
        raise CacheError("cache-corrupt: zero relaxed entry inside the wedge")
    return CountTable(kind, k, n_max, entries)
