"""The Brauer monoid acting on admissible root sets.

``R_i`` acts through the Weyl group, ``delta`` acts trivially, and ``E_i``
either fixes ``B`` (``alpha_i`` in ``B``), adjoins ``alpha_i`` and closes
(``alpha_i`` orthogonal to ``B``), or acts as ``R_beta R_i`` for a root
``beta`` of ``B`` not orthogonal to ``alpha_i``.

Words are read as products: ``act_word(["E1", "R2"], B)`` is ``E_1 (R_2 B)``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .admissible import (
    RootSet,
    _closure_idx,
    admissible_sets,
    apply_perm,
    reflect_set,
)
from .rootsys import DiagramSpec, Root, RootSystem, build_root_system


class Generator(NamedTuple):
    kind: str
    node: int

    @classmethod
    def parse(cls, token: str | Generator) -> Generator:
        if isinstance(token, Generator):
            return token
        m = re.fullmatch(r"\s*([REre])_?(\d+)\s*", token)
        if m is None:
            raise ValueError(f"cannot parse generator {token!r}; expected R<i> or E<i>")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.kind}{self.node}"


def parse_word(text: str | Sequence) -> list[Generator]:
    if isinstance(text, str):
        return [Generator.parse(tok) for tok in text.split()]
    return [Generator.parse(tok) for tok in text]


def _check_node(sys: RootSystem, node: int) -> None:
    if not 1 <= node <= sys.rank:
        raise ValueError(f"node {node} out of range for {sys.spec}")


def e_case3_choices(sys: RootSystem, node: int, B: RootSet) -> list[int]:
    """Roots of ``B`` eligible as ``beta`` in the third ``E_i`` case."""
    a = sys.simple_index[node - 1]
    if a in B:
        return []
    return [b for b in B if sys.gram[b][a] != 0]


@lru_cache(maxsize=None)
def _act(sys: RootSystem, kind: str, node: int, B: RootSet) -> RootSet:
    if kind == "R":
        return apply_perm(sys, sys.simple_perm(node), B)
    a = sys.simple_index[node - 1]
    if a in B:
        return B
    eligible = e_case3_choices(sys, node, B)
    if not eligible:
        return _closure_idx(sys, tuple(sorted(B + (a,))))
    return reflect_set(sys, eligible[0], reflect_set(sys, a, B))


def act(sys: RootSystem, g: Generator | str, B: RootSet) -> RootSet:
    g = Generator.parse(g)
    _check_node(sys, g.node)
    if g.kind not in ("R", "E"):
        raise ValueError(f"unknown generator kind {g.kind!r}")
    return _act(sys, g.kind, g.node, tuple(B))


def act_word(sys: RootSystem, word: str | Sequence, B: RootSet) -> RootSet:
    """Act by the product of ``word``; the rightmost symbol acts first."""
    for g in reversed(parse_word(word)):
        B = act(sys, g, B)
    return B


def e_action_all_choices(sys: RootSystem, node: int, B: RootSet) -> set[RootSet]:
    """Every output of ``E_node`` on ``B`` over all eligible choices of beta."""
    a = sys.simple_index[node - 1]
    eligible = e_case3_choices(sys, node, B)
    if not eligible:
        return {act(sys, Generator("E", node), B)}
    moved = reflect_set(sys, a, B)
    return {reflect_set(sys, b, moved) for b in eligible}


# -- conjugates E_beta, R_beta -------------------------------------------------


@lru_cache(maxsize=None)
def _root_words(sys: RootSystem) -> dict[int, list[tuple[tuple[int, ...], int]]]:
    """For every positive root, all shortest-found expressions ``beta = w alpha_i``.

    BFS over pairs (word, node); a word ``(j_1, ..., j_k)`` means
    ``r_{j_1} ... r_{j_k}``.
    """
    N = sys.size
    exprs: dict[int, list[tuple[tuple[int, ...], int]]] = {k: [] for k in range(N)}
    queue = deque()
    seen = set()
    for node in range(1, sys.rank + 1):
        k = sys.simple_index[node - 1]
        exprs[k].append(((), node))
        seen.add((k, node))
        queue.append((k, (), node))
    while queue:
        k, word, node = queue.popleft()
        for j in range(1, sys.rank + 1):
            img = sys.simple_perm(j)[k]
            if img >= N:
                continue
            if (img, node) in seen:
                continue
            seen.add((img, node))
            w = (j,) + word
            exprs[img].append((w, node))
            queue.append((img, w, node))
    return exprs


def root_expressions(sys: RootSystem, beta: Root | int) -> list[tuple[tuple[int, ...], int]]:
    """Expressions ``(w, i)`` with ``beta = w alpha_i``, one per reachable ``i``."""
    k = beta if isinstance(beta, int) else sys.index[tuple(beta)]
    return list(_root_words(sys)[k])


def _apply_group_word(sys: RootSystem, word: Sequence[int], B: RootSet) -> RootSet:
    for node in reversed(word):
        B = apply_perm(sys, sys.simple_perm(node), B)
    return B


def conjugate_action(
    sys: RootSystem,
    beta: Root | int,
    kind: str,
    B: RootSet,
    expression: tuple[tuple[int, ...], int] | None = None,
) -> RootSet:
    """Act by ``E_beta = w E_i w^-1`` (or ``R_beta``) where ``beta = w alpha_i``."""
    if expression is None:
        expression = root_expressions(sys, beta)[0]
    w, node = expression
    B = _apply_group_word(sys, tuple(reversed(w)), B)
    B = act(sys, Generator(kind, node), B)
    return _apply_group_word(sys, w, B)


# -- relation suite ----------------------------------------------------------------


RELATIONS = {
    "delta-unit": "delta delta^-1 = 1",
    "R-involution": "R_i R_i = 1",
    "RE-absorb": "R_i E_i = E_i R_i = E_i",
    "E-quasi-idempotent": "E_i E_i = delta E_i",
    "RR-commute": "R_i R_j = R_j R_i (i !~ j)",
    "ER-commute": "E_i R_j = R_j E_i (i !~ j)",
    "EE-commute": "E_i E_j = E_j E_i (i !~ j)",
    "braid": "R_i R_j R_i = R_j R_i R_j (i ~ j)",
    "RRE-to-EE": "R_j R_i E_j = E_i E_j (i ~ j)",
    "RER-swap": "R_i E_j R_i = R_j E_i R_j (i ~ j)",
}


def relation_instances(rank: int, adjacent) -> list[tuple[str, tuple[int, ...], list[str], list[str]]]:
    """Every instance ``(label, nodes, lhs word, rhs word)`` of the defining
    relations on ``rank`` nodes, with ``delta`` suppressed."""
    out = []
    nodes = range(1, rank + 1)
    for i in nodes:
        out.append(("R-involution", (i,), [f"R{i}", f"R{i}"], []))
        out.append(("RE-absorb", (i,), [f"R{i}", f"E{i}"], [f"E{i}"]))
        out.append(("RE-absorb", (i,), [f"E{i}", f"R{i}"], [f"E{i}"]))
        out.append(("E-quasi-idempotent", (i,), [f"E{i}", f"E{i}"], [f"E{i}"]))
    for i in nodes:
        for j in nodes:
            if i == j:
                continue
            if not adjacent(i, j):
                if i < j:
                    out.append(("RR-commute", (i, j), [f"R{i}", f"R{j}"], [f"R{j}", f"R{i}"]))
                    out.append(("EE-commute", (i, j), [f"E{i}", f"E{j}"], [f"E{j}", f"E{i}"]))
                out.append(("ER-commute", (i, j), [f"E{i}", f"R{j}"], [f"R{j}", f"E{i}"]))
            else:
                if i < j:
                    out.append(("braid", (i, j), [f"R{i}", f"R{j}", f"R{i}"], [f"R{j}", f"R{i}", f"R{j}"]))
                    out.append(("RER-swap", (i, j), [f"R{i}", f"E{j}", f"R{i}"], [f"R{j}", f"E{i}", f"R{j}"]))
                out.append(("RRE-to-EE", (i, j), [f"R{j}", f"R{i}", f"E{j}"], [f"E{i}", f"E{j}"]))
    return out


@dataclass
class RelationResult:
    label: str
    nodes: tuple[int, ...]
    lhs: str
    rhs: str
    passed: bool
    counterexample: RootSet | None = None


@dataclass
class RelationReport:
    spec: DiagramSpec
    results: list[RelationResult] = field(default_factory=list)
    sets_checked: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def summary(self) -> dict[str, bool]:
        out: dict[str, bool] = {}
        for r in self.results:
            out[r.label] = out.get(r.label, True) and r.passed
        return {k: out[k] for k in RELATIONS if k in out}


def check_relations(spec: DiagramSpec | str, sets: Iterable[RootSet] | None = None) -> RelationReport:
    """Verify the defining relations as identities of maps on admissible sets."""
    sys = build_root_system(spec)
    sets = list(admissible_sets(sys) if sets is None else sets)
    report = RelationReport(sys.spec, sets_checked=len(sets))
    report.results.append(RelationResult("delta-unit", (), "delta delta^-1", "1", True))
    for label, nodes, lhs, rhs in relation_instances(sys.rank, sys.adjacent):
        bad = None
        for B in sets:
            if act_word(sys, lhs, B) != act_word(sys, rhs, B):
                bad = B
                break
        report.results.append(
            RelationResult(label, nodes, " ".join(lhs), " ".join(rhs) or "1", bad is None, bad)
        )
    return report
