"""Weyl groups as permutation groups on the signed roots.

A permutation is a tuple ``p`` with ``p[x]`` the image of point ``x``;
products compose right to left, ``(p * q)[x] = p[q[x]]``.  Group orders come
from a deterministic Schreier-Sims construction of a base and strong
generating set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import InvariantViolation
from .rootsys import DiagramSpec, RootSystem, build_root_system

Perm = tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """``p * q``: apply ``q`` first."""
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def identity(n: int) -> Perm:
    return tuple(range(n))


def _orbit_transversal(point: int, gens: Sequence[Perm], degree: int) -> dict[int, Perm]:
    """Map each orbit point ``y`` to some ``u`` with ``u[point] == y``."""
    trans = {point: identity(degree)}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        ux = trans[x]
        for g in gens:
            y = g[x]
            if y not in trans:
                trans[y] = compose(g, ux)
                queue.append(y)
    return trans


def _orbit(point: int, gens: Sequence[Perm]) -> set[int]:
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


class PermutationGroup:
    """A permutation group given by generators.

    The stabilizer chain is built on first use of :attr:`order`,
    :attr:`base` or :meth:`contains`.
    """

    def __init__(self, generators: Iterable[Perm], degree: int):
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError("generator is not a permutation of the given degree")
        self._id = identity(degree)

    def __repr__(self):
        return f"PermutationGroup(degree={self.degree}, ngens={len(self.generators)})"

    # -- Schreier-Sims ---------------------------------------------------------

    def _strip(self, g: Perm, start: int) -> tuple[Perm, int]:
        for i in range(start, len(self._base)):
            x = g[self._base[i]]
            u = self._trans[i].get(x)
            if u is None:
                return g, i
            g = compose(inverse(u), g)
        return g, len(self._base)

    def _new_base_point(self, g: Perm, level_gens: Sequence[Perm]) -> int:
        moved = [x for x in range(self.degree) if g[x] != x]
        gens = list(level_gens) + [g]
        return max(moved, key=lambda x: (len(_orbit(x, gens)), -x))

    def _build(self) -> None:
        self._base: list[int] = []
        self._gens: list[list[Perm]] = []
        self._trans: list[dict[int, Perm]] = []
        gens = [g for g in self.generators if g != self._id]
        if not gens:
            return
        self._base.append(self._new_base_point(gens[0], gens[1:]))
        self._gens.append(list(gens))
        self._trans.append(_orbit_transversal(self._base[0], gens, self.degree))

        i = 0
        while i >= 0:
            restarted = False
            trans, level_gens = self._trans[i], self._gens[i]
            for x, ux in list(trans.items()):
                for s in list(level_gens):
                    sx = s[x]
                    h = compose(inverse(trans[sx]), compose(s, ux))
                    if h == self._id:
                        continue
                    r, j = self._strip(h, i + 1)
                    if r == self._id:
                        continue
                    if j == len(self._base):
                        self._base.append(self._new_base_point(r, []))
                        self._gens.append([])
                        self._trans.append({})
                    for lvl in range(i + 1, j + 1):
                        self._gens[lvl].append(r)
                        self._trans[lvl] = _orbit_transversal(
                            self._base[lvl], self._gens[lvl], self.degree
                        )
                    i = j
                    restarted = True
                    break
                if restarted:
                    break
            if not restarted:
                i -= 1

    def _ensure(self) -> None:
        if not hasattr(self, "_base"):
            self._build()

    @property
    def base(self) -> list[int]:
        self._ensure()
        return list(self._base)

    @property
    def strong_generators(self) -> list[Perm]:
        self._ensure()
        seen, out = set(), []
        for level in self._gens:
            for g in level:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return out

    @property
    def basic_orbit_lengths(self) -> list[int]:
        self._ensure()
        return [len(t) for t in self._trans]

    @cached_property
    def order(self) -> int:
        return prod(self.basic_orbit_lengths)

    def contains(self, p: Perm) -> bool:
        self._ensure()
        r, j = self._strip(tuple(p), 0)
        return r == self._id

    # -- oracle ------------------------------------------------------------------

    def elements_brute_force(self, limit: int = 10**4) -> set[Perm]:
        """All elements by closure under the generators; refuses groups
        larger than ``limit``."""
        seen = {self._id}
        queue = deque([self._id])
        while queue:
            g = queue.popleft()
            for s in self.generators:
                h = compose(s, g)
                if h not in seen:
                    seen.add(h)
                    if len(seen) > limit:
                        raise ValueError(f"group has more than {limit} elements")
                    queue.append(h)
        return seen


@dataclass(frozen=True, order=True)
class TypeLabel:
    family: str
    rank: int

    def __str__(self):
        return f"{self.family}{self.rank}"


def standard_order(label: TypeLabel) -> int:
    """Closed-form order of the Weyl group of an irreducible ADE type."""
    k = label.rank
    if label.family == "A":
        return factorial(k + 1)
    if label.family == "D":
        return 2 ** (k - 1) * factorial(k)
    return {6: 51840, 7: 2903040, 8: 696729600}[k]


def _system(spec_or_sys) -> RootSystem:
    if isinstance(spec_or_sys, RootSystem):
        return spec_or_sys
    return build_root_system(spec_or_sys)


def parabolic(spec_or_sys, nodes: Iterable[int]) -> PermutationGroup:
    """Subgroup generated by the simple reflections of ``nodes`` (1-based)."""
    sys = _system(spec_or_sys)
    nodes = sorted(set(nodes))
    for i in nodes:
        if not 1 <= i <= sys.rank:
            raise ValueError(f"node {i} out of range for {sys.spec}")
    return PermutationGroup([sys.simple_perm(i) for i in nodes], 2 * sys.size)


def weyl_group(spec_or_sys) -> PermutationGroup:
    sys = _system(spec_or_sys)
    return parabolic(sys, range(1, sys.rank + 1))


def centralizer_nodes(sys: RootSystem, X: Iterable[int]) -> tuple[int, ...]:
    """Nodes whose simple root is orthogonal to every root of ``X`` (indices)."""
    X = list(X)
    gram = sys.gram
    return tuple(
        i
        for i in range(1, sys.rank + 1)
        if all(gram[sys.simple_index[i - 1]][x] == 0 for x in X)
    )


def identify_components(sys: RootSystem, nodes: Iterable[int]) -> list[TypeLabel]:
    """ADE types of the connected components of the induced subdiagram."""
    nodes = set(nodes)
    labels = []
    while nodes:
        start = min(nodes)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nodes:
                if y not in comp and sys.adjacent(x, y):
                    comp.add(y)
                    stack.append(y)
        nodes -= comp
        labels.append(_classify(sys, comp))
    return sorted(labels)


def _classify(sys: RootSystem, comp: set[int]) -> TypeLabel:
    k = len(comp)
    nbrs = {x: [y for y in comp if sys.adjacent(x, y)] for x in comp}
    if sum(len(v) for v in nbrs.values()) != 2 * (k - 1):
        raise InvariantViolation(f"component {sorted(comp)} is not a tree")
    branch = [x for x in comp if len(nbrs[x]) >= 3]
    if not branch:
        if any(len(v) > 2 for v in nbrs.values()):
            raise InvariantViolation(f"component {sorted(comp)} is not ADE-shaped")
        return TypeLabel("A", k)
    if len(branch) > 1 or len(nbrs[branch[0]]) != 3:
        raise InvariantViolation(f"component {sorted(comp)} is not ADE-shaped")
    center = branch[0]
    arms = []
    for start in nbrs[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [y for y in nbrs[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return TypeLabel("D", k)
    if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
        return TypeLabel("E", k)
    raise InvariantViolation(f"component {sorted(comp)} with arms {arms} is not ADE")


def parabolic_order(sys: RootSystem, nodes: Iterable[int]) -> int:
    """Order of the parabolic subgroup via the closed-form component orders."""
    return prod(standard_order(lbl) for lbl in identify_components(sys, nodes))


def stabilizer_order(orbit_size: int, group_order: int) -> int:
    """``|W| / |orbit|``; the division must be exact."""
    q, r = divmod(group_order, orbit_size)
    if r:
        raise InvariantViolation(
            f"orbit size {orbit_size} does not divide group order {group_order}"
        )
    return q


def weyl_order(spec: DiagramSpec | str) -> int:
    """Order of the full Weyl group, from the stabilizer chain (cached)."""
    sys = _system(spec)
    if sys.spec not in _ORDER_CACHE:
        _ORDER_CACHE[sys.spec] = weyl_group(sys).order
    return _ORDER_CACHE[sys.spec]


_ORDER_CACHE: dict[DiagramSpec, int] = {}
