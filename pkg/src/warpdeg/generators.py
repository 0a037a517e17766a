"""
Diagram families: (2,p)-torus closures, odd pretzels, chains, random codes.

Torus and pretzel diagrams are built from vertical twist columns.  Each
column holds two strands crossing n times; with a positive twist the strand
running from upper right to lower left is the over strand at every crossing.
Columns are joined at their ends and the result is traced into a Gauss code,
with crossing signs read off the traversal directions.
"""

from __future__ import annotations

import random
from collections import defaultdict

from .diagram import DiagramError, LinkDiagram, Passage, canonicalize

__all__ = ["torus_2p", "pretzel_odd", "chain", "hopf", "unlink", "random_diagram"]


def _cross_sign(over_dir, under_dir) -> int:
    return 1 if over_dir[0] * under_dir[1] - over_dir[1] * under_dir[0] > 0 else -1


def _trace(columns, connect, starts) -> LinkDiagram:
    """Trace twist columns into a Gauss code.

    ``columns`` is a list of (n_crossings, twist sign).  A state is
    (column, end, side) with end in "TB" and side in "LR"; entering at "T"
    means travelling down.  ``connect`` maps an exit state to the entry
    state it is joined to.
    """
    offsets, total = [], 0
    for n, _ in columns:
        offsets.append(total)
        total += n
    visits = defaultdict(list)  # crossing id -> [(component, pos, over, direction)]
    words, used = [], set()
    for start in starts:
        if start in used:
            continue
        word, state = [], start
        while state not in used:
            used.add(state)
            col, end, side = state
            n, eps = columns[col]
            down = end == "T"
            ks = range(1, n + 1) if down else range(n, 0, -1)
            for k in ks:
                lr = (side == "L") if down else (side == "R")
                if down:
                    direction = (1, -1) if lr else (-1, -1)
                else:
                    direction = (-1, 1) if lr else (1, 1)
                over = (not lr) if eps > 0 else lr
                cid = offsets[col] + k
                visits[cid].append((len(words), len(word), over, direction))
                word.append([cid, over])
                side = "R" if side == "L" else "L"
            state = connect((col, "B" if down else "T", side))
        words.append(word)
    signs = {}
    for cid, vs in visits.items():
        (o,) = [v for v in vs if v[2]]
        (u,) = [v for v in vs if not v[2]]
        signs[cid] = _cross_sign(o[3], u[3])
    comps = tuple(tuple(Passage(cid, over, signs[cid]) for cid, over in w) for w in words)
    return canonicalize(LinkDiagram(comps))


def torus_2p(p: int) -> LinkDiagram:
    """Closure of the 2-braid with |p| half twists; a knot for odd p, a 2-component link for even p."""
    if p == 0:
        raise DiagramError("p must be nonzero")
    cols = [(abs(p), 1 if p > 0 else -1)]
    return _trace(cols, lambda s: (0, "T", s[2]), [(0, "T", "R"), (0, "T", "L")])


def pretzel_odd(entries) -> LinkDiagram:
    """Pretzel diagram P(e_1 n_1, ..., e_m n_m) of odd type (every n_i and m odd).

    Column i holds |entries[i]| crossings twisted with the sign of
    entries[i].  Neighbouring columns are joined at the top and bottom, and
    the outer columns are joined around the outside.
    """
    entries = list(entries)
    m = len(entries)
    if m % 2 == 0 or m == 0:
        raise DiagramError(f"odd-type pretzel needs an odd number of columns, got {m}")
    for e in entries:
        if e == 0 or e % 2 == 0:
            raise DiagramError(f"odd-type pretzel needs odd entries, got {e}")
    cols = [(abs(e), 1 if e > 0 else -1) for e in entries]

    def connect(state):
        col, end, side = state
        if side == "R":
            return ((col + 1) % m, end, "L")
        return ((col - 1) % m, end, "R")

    return _trace(cols, connect, [(0, "T", "L")])


def hopf(sign: int = 1) -> LinkDiagram:
    return torus_2p(2 * sign)


def chain(n: int, sign: int = 1) -> LinkDiagram:
    """Linear chain of n round circles, each linked once with its neighbours."""
    if n < 1:
        raise DiagramError("chain needs at least one component")
    words = [[] for _ in range(n)]
    cid = 0
    for i in range(n - 1):
        # circle i+1 dips under circle i, then passes over it
        a, b = cid + 1, cid + 2
        cid += 2
        words[i] += [Passage(a, True, sign), Passage(b, False, sign)]
        words[i + 1] += [Passage(a, False, sign), Passage(b, True, sign)]
    return canonicalize(LinkDiagram(tuple(tuple(w) for w in words)))


def unlink(r: int) -> LinkDiagram:
    return LinkDiagram(tuple(() for _ in range(r)))


def _balanced_signs(rng, m: int, n: int) -> tuple:
    """Signs for m and n crossings with equal sums (needs m = n mod 2)."""
    lo = min(m, n)
    s = rng.choice([v for v in range(-lo, lo + 1) if (v - m) % 2 == 0])
    out = []
    for k in (m, n):
        plus = (k + s) // 2
        signs = [1] * plus + [-1] * (k - plus)
        rng.shuffle(signs)
        out.append(signs)
    return tuple(out)


def random_diagram(seed, c_max: int, r: int = 1, linking_consistent: bool = False,
                   c: int | None = None) -> LinkDiagram:
    """Random abstract signed Gauss code, deterministic per seed.

    The crossing count is drawn uniformly from 0..c_max unless ``c`` is
    given.  The 2c passages are shuffled and cut into r words.  With
    ``linking_consistent`` the code is redrawn until every pair of
    components shares an even number of crossings, and signs are chosen so
    each pair's two signed under-crossing sums agree, as they do for any
    planar diagram.
    """
    if r < 1:
        raise DiagramError("need at least one component")
    rng = random.Random(seed)
    n = rng.randint(0, c_max) if c is None else c
    while True:
        slots = [(k, True) for k in range(1, n + 1)] + [(k, False) for k in range(1, n + 1)]
        rng.shuffle(slots)
        cuts = sorted(rng.randint(0, 2 * n) for _ in range(r - 1))
        bounds = [0] + cuts + [2 * n]
        words = [slots[bounds[i]:bounds[i + 1]] for i in range(r)]
        comp = {}
        for i, w in enumerate(words):
            for k, over in w:
                comp[(k, over)] = i
        signs = {k: rng.choice((1, -1)) for k in range(1, n + 1)}
        if linking_consistent:
            pairs = defaultdict(lambda: ([], []))
            for k in range(1, n + 1):
                i, j = comp[(k, True)], comp[(k, False)]
                if i != j:
                    lo, hi = min(i, j), max(i, j)
                    pairs[(lo, hi)][0 if j == lo else 1].append(k)
            if any((len(a) + len(b)) % 2 for a, b in pairs.values()):
                continue
            for key in sorted(pairs):
                a, b = pairs[key]
                sa, sb = _balanced_signs(rng, len(a), len(b))
                signs.update(zip(a, sa))
                signs.update(zip(b, sb))
        break
    comps = tuple(tuple(Passage(k, over, signs[k]) for k, over in w) for w in words)
    return canonicalize(LinkDiagram(comps))
