"""Words over positive integers and u-representation of labeled graphs.

A word is a plain tuple of positive ints. Pattern words ``u`` live over
{1, 2} and must contain the letter 1.
"""
from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import Iterable, Sequence

from .graphs import LabeledGraph

Word = tuple[int, ...]


class WordError(ValueError):
    pass


def as_word(letters: Iterable[int]) -> Word:
    w = tuple(int(a) for a in letters)
    if any(a < 1 for a in w):
        raise WordError("letters must be positive integers")
    return w


def parse_word(text: str) -> Word:
    """Parse one line of space separated decimal letters."""
    try:
        return as_word(int(p) for p in text.split())
    except ValueError as exc:
        raise WordError(f"bad word: {exc}") from None


def parse_pattern_word(text: str) -> Word:
    """Accept either ``"12"`` (digits) or ``"1 2"``."""
    text = text.strip()
    letters = text.split() if " " in text else list(text)
    try:
        return check_pattern_word(int(a) for a in letters)
    except ValueError as exc:
        raise WordError(f"bad pattern word {text!r}: {exc}") from None


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(a) for a in w)


def alphabet(w: Sequence[int]) -> frozenset[int]:
    return frozenset(w)


def reduce(w: Sequence[int]) -> Word:
    if len(w) == 0:
        raise WordError("empty word")
    rank = {a: i for i, a in enumerate(sorted(set(w)), start=1)}
    return tuple(rank[a] for a in w)


def restrict(w: Sequence[int], letters: Iterable[int]) -> Word:
    keep = set(letters)
    if not keep <= set(w):
        raise WordError("letter not in word")
    return tuple(a for a in w if a in keep)


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def check_pattern_word(u: Sequence[int]) -> Word:
    u = tuple(u)
    if not u or any(a not in (1, 2) for a in u):
        raise WordError("pattern word must be a nonempty word over {1, 2}")
    if 1 not in u:
        raise WordError("pattern word must contain the letter 1")
    return u


def find_u_match(w: Sequence[int], u: Sequence[int]) -> int | None:
    """Index of the first window of ``w`` whose reduced form equals ``u``."""
    k = len(u)
    distinct = len(set(u))
    for i in range(len(w) - k + 1):
        window = w[i:i + k]
        # a window with a different number of distinct values can never reduce to u
        if len(set(window)) != distinct:
            continue
        if reduce(window) == tuple(u):
            return i
    return None


def has_u_match(w: Sequence[int], u: Sequence[int]) -> bool:
    return find_u_match(w, u) is not None


def _positions(w: Sequence[int]) -> dict[int, list[int]]:
    pos: dict[int, list[int]] = defaultdict(list)
    for i, a in enumerate(w):
        pos[a].append(i)
    return pos


def _pair_restriction(pos: dict[int, list[int]], x: int, y: int) -> Word:
    merged = sorted([(i, x) for i in pos[x]] + [(i, y) for i in pos[y]])
    return tuple(a for _, a in merged)


def represents_witness(w: Sequence[int], lg: LabeledGraph, u: Sequence[int] = (1, 2)) -> tuple[int, int] | None:
    """Return ``None`` if ``w`` u-represents ``lg``, else a violating label pair ``(x, y)``, x < y."""
    u = check_pattern_word(u)
    n = lg.graph.n
    if set(w) != set(range(1, n + 1)):
        raise WordError("alphabet mismatch")
    pos = _positions(w)
    vertex_of = lg.vertex_of_label()
    adj = lg.graph.adj
    for x, y in combinations(range(1, n + 1), 2):
        adjacent = vertex_of[y] in adj[vertex_of[x]]
        if adjacent == has_u_match(_pair_restriction(pos, x, y), u):
            return (x, y)
    return None


def u_represents(w: Sequence[int], lg: LabeledGraph, u: Sequence[int] = (1, 2)) -> bool:
    return represents_witness(w, lg, u) is None


def represented_edges(w: Sequence[int], u: Sequence[int] = (1, 2)) -> frozenset[tuple[int, int]]:
    """Label pairs ``(x, y)`` with x < y whose restriction has no u-match."""
    u = check_pattern_word(u)
    pos = _positions(w)
    letters = sorted(pos)
    return frozenset(
        (x, y) for x, y in combinations(letters, 2)
        if not has_u_match(_pair_restriction(pos, x, y), u)
    )
