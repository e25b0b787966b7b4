import pytest
from hypothesis import given, settings, strategies as st

from dagenum.tables import (
    CacheError,
    CountTable,
    KINDS,
    build_table,
    diagonal_sequence,
    extend_table,
    load_table,
    save_table,
)

from known_values import KNOWN_COUNTS, known_row


@pytest.mark.parametrize("kind,k", sorted(KNOWN_COUNTS))
def test_diagonals_match_known_rows(kind, k):
    row = known_row(kind, k)
    n_max = max(row)
    assert diagonal_sequence(kind, k, n_max)[min(row):] == [row[n] for n in sorted(row)]


def test_table_route_equals_streaming_route():
    for kind in KINDS:
        table = build_table(kind, 3, 14)
        assert diagonal_sequence(kind, 3, 7, table=table) == diagonal_sequence(kind, 3, 7)


def test_entry_semantics():
    table = build_table("relaxed", 2, 6)
    assert table.entry(0, 0) == 1
    assert all(table.entry(n, 0) == 1 for n in range(7))
    assert table.entry(3, 4) == 0  # above the wedge
    with pytest.raises(ValueError, match="out-of-range"):
        table.entry(7, 0)
    with pytest.raises(ValueError, match="out-of-range"):
        table.entry(3, -1)
    assert table.diagonal(6) == table.entry(6, 6)


def test_argument_guards():
    with pytest.raises(ValueError, match="unknown-kind"):
        build_table("weird", 2, 3)
    with pytest.raises(ValueError, match="arity-k"):
        build_table("relaxed", 1, 3)
    with pytest.raises(ValueError, match="negative-size"):
        diagonal_sequence("relaxed", 2, -1)


def test_byte_budget_guard():
    with pytest.raises(ValueError, match="byte-budget"):
        build_table("relaxed", 2, 3000, byte_budget=10_000)


def test_extend_table():
    table = build_table("compacted", 2, 4)
    before = dict(table.entries)
    extend_table(table, 8)
    assert table.n_max == 8
    for key, value in before.items():
        assert table.entries[key] == value
    assert table.diagonal(8) == known_row("compacted", 2)[8]
    # shrinking is a no-op
    extend_table(table, 3)
    assert table.n_max == 8


def test_save_load_round_trip(tmp_path):
    table = build_table("dfa", 3, 10)
    path = tmp_path / "dfa-k3.ctab"
    save_table(table, path)
    loaded = load_table(path)
    assert loaded.kind == "dfa" and loaded.k == 3 and loaded.n_max == 10
    assert loaded.entries == table.entries


def test_load_rejects_corruption(tmp_path):
    table = build_table("relaxed", 2, 6)
    path = tmp_path / "t.ctab"
    save_table(table, path)
    text = path.read_text()

    path.write_text(text.replace("ctab 1", "ctab 9", 1))
    with pytest.raises(CacheError, match="cache-corrupt"):
        load_table(path)

    # flip one digit of the body: checksum must catch it
    lines = text.splitlines(keepends=True)
    lines[-1] = "9" + lines[-1][1:]
    path.write_text("".join(lines))
    with pytest.raises(CacheError, match="checksum"):
        load_table(path)

    path.write_text(text.rstrip("\n0123456789"))
    with pytest.raises(CacheError, match="cache-corrupt"):
        load_table(path)

    with pytest.raises(CacheError, match="cache-corrupt"):
        load_table(tmp_path / "missing.ctab")


def test_cache_mismatch_is_a_cache_error():
    table = build_table("relaxed", 2, 4)
    with pytest.raises(CacheError, match="cache-mismatch"):
        diagonal_sequence("compacted", 2, 2, table=table)
    with pytest.raises(CacheError, match="cache-mismatch"):
        diagonal_sequence("relaxed", 3, 2, table=table)
    with pytest.raises(ValueError, match="out-of-range"):
        diagonal_sequence("relaxed", 2, 40, table=table)


_REL3 = build_table("relaxed", 3, 24)
_CMP3 = build_table("compacted", 3, 24)
_DFA3 = build_table("dfa", 3, 24)


@settings(derandomize=True, max_examples=50)
@given(st.integers(min_value=2, max_value=24).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(min_value=1, max_value=n // 2))
))
def test_recurrences_hold_pointwise(point):
    n, m = point

    def read(table, nn, mm):
        if nn < 0 or 2 * mm > nn:
            return 0
        return table.entry(nn, mm)

    r = _REL3
    assert r.entry(n, m) == read(r, n, m - 1) + (m + 1) * read(r, n - 1, m)

    def sub(table, nn, mm):
        return 1 if mm == 0 else read(table, nn, mm)

    c = _CMP3
    assert c.entry(n, m) == (
        read(c, n, m - 1) + (m + 1) * read(c, n - 1, m) - (m - 1) * sub(c, n - 3, m - 1)
    )
    b = _DFA3
    assert b.entry(n, m) == (
        2 * read(b, n, m - 1) + (m + 1) * read(b, n - 1, m) - m * sub(b, n - 3, m - 1)
    )
