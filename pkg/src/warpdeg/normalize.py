"""
Warping degree of a knot diagram from its o/u word.

Reading the passages from a base point gives a word over {o, u}.  Deleting
"ou" factors until none remain leaves a word u^k o^k, and the warping degree
is the based count minus k.
"""

from __future__ import annotations

from .diagram import DiagramError, LinkDiagram

__all__ = ["ou_word", "normalize", "knot_warping_degree", "based_count", "degree_from_word",
           "is_alternating_word"]


def _single(Dk: LinkDiagram) -> tuple:
    if Dk.r != 1:
        raise DiagramError(f"expected a knot diagram, got {Dk.r} components; take a subdiagram first")
    return Dk.components[0]


def ou_word(Dk: LinkDiagram, base: int = 0) -> str:
    word = _single(Dk)
    n = len(word)
    if n and not 0 <= base < n:
        raise DiagramError(f"base position {base} out of range")
    return "".join("o" if word[(base + k) % n].over else "u" for k in range(n))


def normalize(w: str) -> str:
    stack = []
    for ch in w:
        if ch not in "ou":
            raise ValueError(f"letters must be 'o' or 'u', got {ch!r}")
        if ch == "u" and stack and stack[-1] == "o":
            stack.pop()
        else:
            stack.append(ch)
    return "".join(stack)


def based_count(Dk: LinkDiagram, base: int = 0) -> int:
    """Crossings met first as an under-crossing when starting at ``base``."""
    word = _single(Dk)
    n = len(word)
    seen, count = set(), 0
    for k in range(n):
        p = word[(base + k) % n]
        if p.crossing not in seen:
            seen.add(p.crossing)
            count += not p.over
    return count


def degree_from_word(based: int, w: str) -> int:
    """Warping degree from a based count and the o/u word read from the same base."""
    n = normalize(w)
    if len(n) % 2:
        raise ValueError(f"normalized word {n!r} has odd length; not read from a knot diagram")
    return based - len(n) // 2


def knot_warping_degree(Dk: LinkDiagram, base: int = 0, check: bool = False) -> int:
    d = degree_from_word(based_count(Dk, base), ou_word(Dk, base))
    if check:
        n = len(Dk.components[0])
        for b in sorted({0, n // 2, max(n - 1, 0)}):
            other = degree_from_word(based_count(Dk, b), ou_word(Dk, b))
            assert other == d, f"base {b} gives {other}, base {base} gives {d}"
    return d


def is_alternating_word(w: str) -> bool:
    """Cyclic alternation of o and u (vacuous for the empty word)."""
    return all(w[k] != w[(k + 1) % len(w)] for k in range(len(w)))
