"""
Signed oriented Gauss codes for link diagrams.

A diagram is an ordered tuple of components.  Each component is the cyclic
word of passages met while travelling along it in its orientation; a passage
records the crossing it belongs to, whether the strand goes over or under
there, and the sign of that crossing.

Text format, one component per line::

    # trefoil
    O1+ U2+ O3+ U1+ O2+ U3+

A component without crossings is written as a single ``-``.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "DiagramError",
    "Passage",
    "Site",
    "LinkDiagram",
    "BaseSequence",
    "parse",
    "serialize",
    "canonicalize",
    "orient",
    "to_json",
    "from_json",
    "reverse_all",
    "reverse_component",
    "subdiagram",
    "change_crossings",
    "mirror",
]

_TOKEN = re.compile(r"^([OoUu])(\d+)([+-])$")
EMPTY_COMPONENT = "-"


class DiagramError(ValueError):
    """Raised for malformed or inconsistent diagram input."""


@dataclass(frozen=True)
class Passage:
    crossing: int
    over: bool
    sign: int

    def __str__(self):
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


class Site(NamedTuple):
    component: int
    position: int


@dataclass(frozen=True)
class LinkDiagram:
    """An oriented link diagram given by a signed Gauss code.

    Components are indexed from 0.  Validation happens on construction, so
    every instance satisfies: each crossing id occurs exactly twice, once
    over and once under, with the same sign at both passages.
    """

    components: tuple

    def __post_init__(self):
        comps = tuple(tuple(word) for word in self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise DiagramError("empty diagram: at least one component is required")
        seen = defaultdict(list)
        for i, word in enumerate(comps):
            for k, p in enumerate(word):
                if not isinstance(p, Passage):
                    raise DiagramError(f"component {i + 1}: expected Passage, got {p!r}")
                if p.crossing < 1:
                    raise DiagramError(f"crossing id must be positive, got {p.crossing}")
                if p.sign not in (1, -1):
                    raise DiagramError(f"crossing {p.crossing}: sign must be +1 or -1")
                seen[p.crossing].append((i, k, p))
        for cid, occ in seen.items():
            if len(occ) != 2:
                raise DiagramError(f"crossing {cid} occurs {len(occ)} times, expected 2")
            (_, _, p), (_, _, q) = occ
            if p.over == q.over:
                kind = "Over" if p.over else "Under"
                raise DiagramError(f"crossing {cid} has two {kind} sites")
            if p.sign != q.sign:
                raise DiagramError(f"sign mismatch at crossing {cid}")

    @property
    def r(self) -> int:
        return len(self.components)

    @cached_property
    def sites(self) -> dict:
        """crossing id -> (over site, under site)."""
        over, under = {}, {}
        for i, word in enumerate(self.components):
            for k, p in enumerate(word):
                (over if p.over else under)[p.crossing] = Site(i, k)
        return {cid: (over[cid], under[cid]) for cid in sorted(over)}

    @cached_property
    def signs(self) -> dict:
        return {p.crossing: p.sign for word in self.components for p in word}

    @property
    def crossings(self) -> list:
        return list(self.sites)

    @property
    def c(self) -> int:
        return len(self.sites)

    def is_self(self, cid: int) -> bool:
        o, u = self.sites[cid]
        return o.component == u.component

    def self_crossings(self, i: int) -> list:
        return [cid for cid, (o, u) in self.sites.items() if o.component == u.component == i]

    def pair_crossings(self, i: int, j: int) -> list:
        """Crossings with one site on component i and the other on j (i != j)."""
        pair = {i, j}
        return [cid for cid, (o, u) in self.sites.items()
                if o.component != u.component and {o.component, u.component} == pair]

    @property
    def lc(self) -> int:
        return sum(1 for cid in self.sites if not self.is_self(cid))

    def under_count(self, i: int, j: int) -> int:
        """Number of crossings between components i and j where i goes under."""
        return sum(1 for cid, (o, u) in self.sites.items()
                   if u.component == i and o.component == j)

    def self_word(self, i: int) -> tuple:
        """Component i's word restricted to its self-crossings."""
        own = set(self.self_crossings(i))
        return tuple(p for p in self.components[i] if p.crossing in own)

    def warnings(self) -> list:
        """Properties every planar diagram has but an abstract code may lack."""
        out = []
        if self.lc % 2:
            out.append(f"lc(D) = {self.lc} is odd; no planar diagram has this code")
        for i in range(self.r):
            for j in range(i + 1, self.r):
                ui = sum(self.signs[cid] for cid in self.pair_crossings(i, j)
                         if self.sites[cid][1].component == i)
                uj = sum(self.signs[cid] for cid in self.pair_crossings(i, j)
                         if self.sites[cid][1].component == j)
                if ui != uj:
                    out.append(
                        f"components {i + 1},{j + 1}: signed under-crossing sums differ "
                        f"({ui} vs {uj}); linking number results do not apply"
                    )
        return out

    @property
    def linking_consistent(self) -> bool:
        return not self.warnings()

    def __str__(self):
        return serialize(self, canonical=False)


@dataclass(frozen=True)
class BaseSequence:
    """Component order plus one base position per component.

    ``positions[i]`` is the word index on component i that the base point
    sits immediately before; ``order`` lists component indices, earliest
    first.
    """

    order: tuple
    positions: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "positions", tuple(self.positions))

    def check(self, D: LinkDiagram) -> None:
        if sorted(self.order) != list(range(D.r)):
            raise DiagramError(f"order {self.order} is not a permutation of the {D.r} components")
        if len(self.positions) != D.r:
            raise DiagramError(f"expected {D.r} base positions, got {len(self.positions)}")
        for i, (pos, word) in enumerate(zip(self.positions, D.components)):
            if not 0 <= pos < max(len(word), 1):
                raise DiagramError(f"base position {pos} out of range on component {i + 1}")

    def reversed_order(self) -> "BaseSequence":
        return BaseSequence(self.order[::-1], self.positions)

    @classmethod
    def default(cls, D: LinkDiagram) -> "BaseSequence":
        return cls(tuple(range(D.r)), (0,) * D.r)


def _parse_token(tok: str, lineno: int) -> Passage:
    m = _TOKEN.match(tok)
    if not m:
        raise DiagramError(f"line {lineno}: malformed token {tok!r}")
    strand, cid, sign = m.groups()
    return Passage(int(cid), strand in "Oo", 1 if sign == "+" else -1)


def parse(text: str) -> LinkDiagram:
    comps = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if toks == [EMPTY_COMPONENT]:
            comps.append(())
            continue
        comps.append(tuple(_parse_token(t, lineno) for t in toks))
    return LinkDiagram(tuple(comps))


def canonicalize(D: LinkDiagram) -> LinkDiagram:
    """Renumber crossings 1..c in order of first appearance."""
    relabel = {}
    for word in D.components:
        for p in word:
            relabel.setdefault(p.crossing, len(relabel) + 1)
    return LinkDiagram(tuple(
        tuple(Passage(relabel[p.crossing], p.over, p.sign) for p in word)
        for word in D.components
    ))


def serialize(D: LinkDiagram, canonical: bool = True) -> str:
    if canonical:
        D = canonicalize(D)
    lines = [" ".join(str(p) for p in word) if word else EMPTY_COMPONENT
             for word in D.components]
    return "\n".join(lines) + "\n"


def to_json(D: LinkDiagram) -> dict:
    return {"components": [[{"o": p.over, "id": p.crossing, "sign": p.sign} for p in word]
                           for word in D.components]}


def from_json(data) -> LinkDiagram:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        comps = tuple(tuple(Passage(int(t["id"]), bool(t["o"]), int(t["sign"])) for t in word)
                      for word in data["components"])
    except (KeyError, TypeError) as exc:
        raise DiagramError(f"malformed JSON diagram: {exc}") from exc
    return LinkDiagram(comps)


def reverse_all(D: LinkDiagram) -> LinkDiagram:
    # reversing both strands of a crossing keeps its sign
    return LinkDiagram(tuple(word[::-1] for word in D.components))


def reverse_component(D: LinkDiagram, i: int) -> LinkDiagram:
    if not 0 <= i < D.r:
        raise DiagramError(f"component index {i} out of range for {D.r} components")
    flip = set(cid for cid in D.crossings
               if not D.is_self(cid) and i in (D.sites[cid][0].component, D.sites[cid][1].component))
    comps = []
    for k, word in enumerate(D.components):
        word = [Passage(p.crossing, p.over, -p.sign if p.crossing in flip else p.sign)
                for p in word]
        comps.append(tuple(word[::-1] if k == i else word))
    return LinkDiagram(tuple(comps))


def orient(D: LinkDiagram, flips: Sequence[bool]) -> LinkDiagram:
    """Reverse every component i with ``flips[i]`` set."""
    for i, f in enumerate(flips):
        if f:
            D = reverse_component(D, i)
    return D


def subdiagram(D: LinkDiagram, S: Iterable[int]) -> LinkDiagram:
    keep = sorted(set(S))
    if not keep:
        raise DiagramError("subdiagram needs at least one component")
    for i in keep:
        if not 0 <= i < D.r:
            raise DiagramError(f"component index {i} out of range for {D.r} components")
    inside = set(keep)
    ok = {cid for cid, (o, u) in D.sites.items()
          if o.component in inside and u.component in inside}
    return LinkDiagram(tuple(
        tuple(p for p in D.components[i] if p.crossing in ok) for i in keep
    ))


def change_crossings(D: LinkDiagram, ids: Iterable[int]) -> LinkDiagram:
    """Crossing changes: swap over/under and negate the sign at each given crossing."""
    ids = set(ids)
    unknown = ids - set(D.sites)
    if unknown:
        raise DiagramError(f"unknown crossings {sorted(unknown)}")
    return LinkDiagram(tuple(
        tuple(Passage(p.crossing, not p.over, -p.sign) if p.crossing in ids else p for p in word)
        for word in D.components
    ))


def mirror(D: LinkDiagram) -> LinkDiagram:
    return change_crossings(D, D.crossings)
