"""Pairwise alignment between two unit sequences.

The alignment is LCS-optimal over unit texts (kinds are ignored when
matching) and canonical: scanning forward, two equal units are always
matched, and at a divergence point a unit of the first sequence is skipped
whenever doing so preserves optimality. This matches units at the earliest
possible positions of the second sequence, so the mask fed to the
uniqueness score is fully determined by the inputs and can be reproduced by
any textbook LCS-table walk with the same skip preference.

Cost is O(len(a) * len(b)) time and memory per pair, fine for snippet-sized
inputs; token or line units keep large files affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .units import Unit

__all__ = ["DiffOp", "DiffScript", "diff", "matched_in_b", "equal_mass"]

EQUAL = "equal"
DELETE = "delete"
INSERT = "insert"


@dataclass(frozen=True)
class DiffOp:
    """One run of the edit script.

    ``a_range`` and ``b_range`` are half-open unit-index ranges; equal ops
    span both sides, delete ops have an empty ``b_range``, insert ops an
    empty ``a_range``.
    """

    tag: str
    a_range: tuple[int, int]
    b_range: tuple[int, int]


@dataclass(frozen=True)
class DiffScript:
    """Ordered edit script whose a/b ranges tile both sequences exactly."""

    ops: tuple[DiffOp, ...]


def diff(a: Sequence[Unit], b: Sequence[Unit]) -> DiffScript:
    """Align ``a`` against ``b``, matching units by exact text equality."""
    table: dict[str, int] = {}
    xs = [table.setdefault(u.text, len(table)) for u in a]
    ys = [table.setdefault(u.text, len(table)) for u in b]
    matches = _lcs_matches(xs, ys)
    return _script_from_matches(matches, len(a), len(b))


def matched_in_b(script: DiffScript) -> list[bool]:
    """Per-unit mask over the second sequence: True iff the unit lies in an
    equal run of the alignment."""
    length = script.ops[-1].b_range[1] if script.ops else 0
    mask = [False] * length
    for op in script.ops:
        if op.tag == EQUAL:
            for k in range(*op.b_range):
                mask[k] = True
    return mask


def equal_mass(script: DiffScript) -> int:
    """Total number of matched units; equals the LCS length of the inputs."""
    return sum(op.a_range[1] - op.a_range[0] for op in script.ops if op.tag == EQUAL)


def _lcs_matches(xs: list[int], ys: list[int]) -> list[tuple[int, int]]:
    """Matched index pairs of the canonical LCS alignment, ascending.

    A common prefix is matched outright (the walk below would do the same),
    then a suffix LCS table drives the walk: match on equality, otherwise
    skip the ``xs`` element when the table says that loses nothing.
    """
    # Common-prefix fast path.
    p = 0
    limit = min(len(xs), len(ys))
    while p < limit and xs[p] == ys[p]:
        p += 1
    prefix = [(i, i) for i in range(p)]
    xs = xs[p:]
    ys = ys[p:]
    n, m = len(xs), len(ys)
    if n == 0 or m == 0:
        return prefix

    # lcs[i][j] = LCS length of xs[i:] and ys[j:].
    lcs = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        row = lcs[i]
        below = lcs[i + 1]
        xi = xs[i]
        for j in range(m - 1, -1, -1):
            if xi == ys[j]:
                row[j] = below[j + 1] + 1
            else:
                down = below[j]
                right = row[j + 1]
                row[j] = down if down >= right else right

    pairs = prefix
    i = j = 0
    while i < n and j < m:
        if xs[i] == ys[j]:
            pairs.append((i + p, j + p))
            i += 1
            j += 1
        elif lcs[i + 1][j] >= lcs[i][j + 1]:
            i += 1
        else:
            j += 1
    return pairs


def _script_from_matches(
    matches: list[tuple[int, int]], n: int, m: int
) -> DiffScript:
    ops: list[DiffOp] = []
    ai = bi = 0
    idx = 0
    count = len(matches)
    while idx < count:
        x0, y0 = matches[idx]
        run = 1
        while (
            idx + run < count
            and matches[idx + run] == (x0 + run, y0 + run)
        ):
            run += 1
        if ai < x0:
            ops.append(DiffOp(DELETE, (ai, x0), (bi, bi)))
        if bi < y0:
            ops.append(DiffOp(INSERT, (x0, x0), (bi, y0)))
        ops.append(DiffOp(EQUAL, (x0, x0 + run), (y0, y0 + run)))
        ai, bi = x0 + run, y0 + run
        idx += run
    if ai < n:
        ops.append(DiffOp(DELETE, (ai, n), (bi, bi)))
    if bi < m:
        ops.append(DiffOp(INSERT, (n, n), (bi, m)))
    return DiffScript(tuple(ops))
