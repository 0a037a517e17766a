"""
Linking numbers and mechanical checks of the warping degree inequalities.

Each ``verify_*`` function returns a :class:`VerificationReport` holding the
two numeric sides, the relation between them, and (where the inequality
comes with an equality characterization) the independently evaluated
condition.  ``holds`` is recomputable from those stored fields.
"""

from __future__ import annotations

import itertools
import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import BaseSequence, DiagramError, LinkDiagram, orient
from .normalize import is_alternating_word
from .warping import (
    MAX_R,
    _check_r,
    d_pair,
    d_unoriented,
    ld_min,
    ld_of_order,
    sr,
    under_matrix,
    warping_points,
)

__all__ = [
    "VerificationReport",
    "linking_number",
    "total_linking",
    "total_linking_via_warping",
    "alternating_components",
    "balanced_pairs",
    "property_C",
    "verify_thm_1_1",
    "verify_thm_1_2",
    "verify_lemma_3_2",
    "verify_prop_3_3",
    "verify_lemma_3_4",
    "verify_prop_4_1",
    "verify_cor_4_3",
    "verify_u_chain",
    "verify_unoriented_bound",
    "verify_all",
    "census_min",
]

_RELATIONS = {"<=": operator.le, "==": operator.eq}


def _num(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else float(x)
    if isinstance(x, (list, tuple)):
        return [_num(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _num(v) for k, v in x.items()}
    return x


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    lhs: object
    rhs: object
    relation: str = "<="
    condition: bool | None = None
    witnesses: dict = field(default_factory=dict)
    extra_ok: bool = True  # auxiliary identities checked alongside the main relation

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    @property
    def holds(self) -> bool:
        ok = _RELATIONS[self.relation](self.lhs, self.rhs) and self.extra_ok
        if self.condition is not None:
            ok = ok and self.condition == self.equality
        return bool(ok)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "holds": self.holds,
            "equality": self.equality,
            "condition": self.condition,
            "relation": self.relation,
            "lhs": _num(self.lhs),
            "rhs": _num(self.rhs),
            "witnesses": _num(self.witnesses),
        }

    def line(self) -> str:
        status = "ok  " if self.holds else "FAIL"
        eq = "" if self.condition is None else f"  equality={self.equality} condition={self.condition}"
        return f"[{status}] {self.claim}: {_num(self.lhs)} {self.relation} {_num(self.rhs)}{eq}"


def linking_number(D: LinkDiagram, i: int, j: int) -> Fraction:
    if i == j:
        raise DiagramError("linking number needs two distinct components")
    return Fraction(sum(D.signs[cid] for cid in D.pair_crossings(i, j)), 2)


def total_linking(D: LinkDiagram) -> Fraction:
    return sum((linking_number(D, i, j) for i, j in itertools.combinations(range(D.r), 2)),
               Fraction(0))


def _abs_linking_sum(D: LinkDiagram) -> Fraction:
    return sum((abs(linking_number(D, i, j)) for i, j in itertools.combinations(range(D.r), 2)),
               Fraction(0))


def total_linking_via_warping(D: LinkDiagram, a: BaseSequence) -> int:
    return sum(D.signs[p.crossing] for p in warping_points(D, a) if p.kind == "between")


def alternating_components(D: LinkDiagram) -> list:
    """Each component, as a knot diagram on its own, alternates over/under."""
    return [is_alternating_word("".join("o" if p.over else "u" for p in D.self_word(i)))
            for i in range(D.r)]


def balanced_pairs(D: LinkDiagram) -> dict:
    """(i, j) -> (under count of i, under count of j) for every pair i < j."""
    m = under_matrix(D)
    return {(i, j): (m[i][j], m[j][i]) for i, j in itertools.combinations(range(D.r), 2)}


def property_C(D: LinkDiagram) -> tuple:
    """(has property C, witnesses)."""
    alt = alternating_components(D)
    pairs = balanced_pairs(D)
    unbalanced = [k for k, (a, b) in pairs.items() if a != b]
    ok = all(alt) and not unbalanced
    return ok, {"alternating": alt, "unbalanced_pairs": unbalanced, "pair_counts": pairs}


def verify_thm_1_1(Dk: LinkDiagram) -> VerificationReport:
    if Dk.r != 1:
        raise DiagramError("knot inequality needs a single-component diagram")
    if Dk.c == 0:
        raise DiagramError("knot inequality needs at least one crossing")
    d, dm = d_pair(Dk)
    alt = alternating_components(Dk)[0]
    return VerificationReport("thm_1_1", d + dm + 1, Dk.c, condition=alt,
                              witnesses={"d": d, "d_inverse": dm, "alternating": alt})


def verify_thm_1_2(D: LinkDiagram, max_r: int = MAX_R) -> VerificationReport:
    d, dm = d_pair(D, max_r)
    s = sr(D)
    pc, wit = property_C(D)
    return VerificationReport("thm_1_2", d + dm + s, D.c, condition=pc,
                              witnesses={"d": d, "d_inverse": dm, "sr": s, **wit})


def verify_lemma_3_2(D: LinkDiagram, max_r: int = MAX_R) -> VerificationReport:
    ld, order = ld_min(D, max_r)
    m = under_matrix(D)
    bad = [o for o in itertools.permutations(range(D.r))
           if ld_of_order(m, o) + ld_of_order(m, o[::-1]) != D.lc]
    balanced = all(a == b for a, b in balanced_pairs(D).values())
    return VerificationReport("lemma_3_2", Fraction(ld), Fraction(D.lc, 2), condition=balanced,
                              witnesses={"order": order, "reversal_identity_failures": bad},
                              extra_ok=not bad)


def verify_prop_3_3(D: LinkDiagram, max_r: int = MAX_R) -> VerificationReport:
    _check_r(D, max_r)
    base = sum(d_pair(D, max_r))
    values = {}
    for flips in itertools.product((False, True), repeat=D.r):
        values[flips] = sum(d_pair(orient(D, flips), max_r))
    worst = max(values.values(), key=lambda v: abs(v - base))
    return VerificationReport("prop_3_3", worst, base, relation="==",
                              witnesses={"values": {"".join("-" if f else "+" for f in k): v
                                                    for k, v in values.items()}})


def verify_lemma_3_4(D: LinkDiagram, max_r: int = MAX_R) -> VerificationReport:
    if sr(D) != D.r:
        raise DiagramError("self-crossing bound needs every component to have a self-crossing")
    d, dm = d_pair(D, max_r)
    pc, wit = property_C(D)
    return VerificationReport("lemma_3_4", d + dm + D.r, D.c, condition=pc,
                              witnesses={"d": d, "d_inverse": dm, **wit})


def _constant_under_signs(D: LinkDiagram, order) -> list:
    """Pairs (earlier, later) whose crossings with the earlier one under have mixed signs."""
    rank = {c: k for k, c in enumerate(order)}
    mixed = []
    for i, j in itertools.combinations(range(D.r), 2):
        lo, hi = (i, j) if rank[i] < rank[j] else (j, i)
        signs = {D.signs[cid] for cid in D.pair_crossings(i, j) if D.sites[cid][1].component == lo}
        if len(signs) > 1:
            mixed.append((lo, hi))
    return mixed


def verify_prop_4_1(D: LinkDiagram, max_r: int = MAX_R) -> VerificationReport:
    """Sum of |Link| against ld(D), its parity, and the constant-sign equality condition.

    The equality condition is evaluated two ways: globally (one order in
    which every pair's earlier component has under-crossings of one sign)
    and per pair (each pair separately admits such a relative order).  The
    global reading decides ``condition``.
    """
    _check_r(D, max_r)
    lhs = _abs_linking_sum(D)
    ld, _ = ld_min(D, max_r)
    orders = [o for o in itertools.permutations(range(D.r)) if not _constant_under_signs(D, o)]
    per_pair = {}
    for i, j in itertools.combinations(range(D.r), 2):
        per_pair[(i, j)] = [
            (lo, hi) for lo, hi in ((i, j), (j, i))
            if len({D.signs[cid] for cid in D.pair_crossings(i, j)
                    if D.sites[cid][1].component == lo}) <= 1
        ]
    parity_ok = lhs.denominator == 1 and (lhs - ld) % 2 == 0
    return VerificationReport(
        "prop_4_1", lhs, Fraction(ld), condition=bool(orders),
        witnesses={
            "parity": parity_ok,
            "constant_sign_order": orders[0] if orders else None,
            "per_pair_constant_sign": per_pair,
            "per_pair_condition": all(per_pair.values()),
            "linking_consistent": D.linking_consistent,
        },
        extra_ok=parity_ok,
    )


def verify_cor_4_3(D: LinkDiagram, max_r: int = MAX_R, max_bases: int = 50000) -> VerificationReport:
    """Total linking from non-self warping crossings, for every base sequence.

    All (order, positions) pairs are tried when there are at most
    ``max_bases`` of them; otherwise positions stay at 0 and only orders vary.
    """
    _check_r(D, max_r)
    total = total_linking(D)
    spans = [range(max(len(w), 1)) for w in D.components]
    n_bases = math.factorial(D.r) * math.prod(len(s) for s in spans)
    pos_iter = list(itertools.product(*spans)) if n_bases <= max_bases else [(0,) * D.r]
    seen = set()
    for order in itertools.permutations(range(D.r)):
        for pos in pos_iter:
            seen.add(total_linking_via_warping(D, BaseSequence(order, pos)))
    # report the value furthest from the total
    worst = max(seen, key=lambda v: abs(v - total))
    return VerificationReport("cor_4_3", Fraction(worst), total, relation="==",
                              witnesses={"values": sorted(seen), "exhaustive": n_bases <= max_bases})


def verify_u_chain(D: LinkDiagram, max_r: int = MAX_R) -> VerificationReport:
    """Linking lower bound on u(D) against min(d(D), d(-D)).

    u(D) itself is not computed; Σ|Link| is a lower bound for it and d(D),
    d(-D) are upper bounds, so the chain must close.
    """
    lower = _abs_linking_sum(D)
    d, dm = d_pair(D, max_r)
    s = sr(D)
    return VerificationReport("u_chain", lower, Fraction(min(d, dm)),
                              witnesses={"u_lower": lower, "u_upper": min(d, dm),
                                         "doubled_chain": [2 * lower + s, d + dm + s]})


def verify_unoriented_bound(D: LinkDiagram, max_r: int = MAX_R) -> VerificationReport:
    """d(|D|) <= c/2, equality iff all components are simple and all pairs balanced.

    For a knot diagram with crossings the sharper (c - 1)/2 is checked too.
    """
    du, flips = d_unoriented(D, max_r)
    cond = all(not D.self_crossings(i) for i in range(D.r)) and all(
        a == b for a, b in balanced_pairs(D).values())
    knot_ok = True
    if D.r == 1 and D.c:
        knot_ok = 2 * du <= D.c - 1
    return VerificationReport("cor_6_unoriented", Fraction(du), Fraction(D.c, 2), condition=cond,
                              witnesses={"orientation": ["-" if f else "+" for f in flips],
                                         "knot_bound_ok": knot_ok},
                              extra_ok=knot_ok)


def verify_all(D: LinkDiagram, max_r: int = MAX_R) -> list:
    """Every check that applies to D.

    Checks on linking numbers need the per-pair sign consistency every
    planar diagram has, so they are skipped for codes lacking it.
    """
    out = []
    if D.r == 1 and D.c:
        out.append(verify_thm_1_1(D))
    out.append(verify_thm_1_2(D, max_r))
    out.append(verify_lemma_3_2(D, max_r))
    out.append(verify_prop_3_3(D, max_r))
    if sr(D) == D.r:
        out.append(verify_lemma_3_4(D, max_r))
    if D.linking_consistent:
        out.append(verify_prop_4_1(D, max_r))
        out.append(verify_cor_4_3(D, max_r))
        out.append(verify_u_chain(D, max_r))
    out.append(verify_unoriented_bound(D, max_r))
    if D.r >= 2 and D.linking_consistent:
        from .splitting import chain_check
        out.append(chain_check(D, max_r))
    return out


_METRICS = ("d_plus_dminus", "f_value", "sr")


def census_min(diagrams, metric: str = "f_value", max_r: int = MAX_R) -> tuple:
    """Minimum of a metric over diagrams the caller asserts represent one link.

    ``d_plus_dminus`` looks only at the diagrams of least crossing number in
    the set.  Returns (value, index of the first minimizing diagram).
    """
    diagrams = list(diagrams)
    if not diagrams:
        raise ValueError("census needs at least one diagram")
    if metric not in _METRICS:
        raise ValueError(f"unknown metric {metric!r}; choose from {_METRICS}")
    pool = list(enumerate(diagrams))
    if metric == "d_plus_dminus":
        cmin = min(D.c for D in diagrams)
        pool = [(k, D) for k, D in pool if D.c == cmin]

    def value(D):
        if metric == "sr":
            return sr(D)
        v = sum(d_pair(D, max_r))
        return v + sr(D) if metric == "f_value" else v

    best = min(((value(D), k) for k, D in pool))
    return best
