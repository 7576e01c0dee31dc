"""Simply-laced root systems.

Roots are integer coefficient vectors over the simple roots.  Nodes are
numbered from 1 in the public API (``alpha_1 .. alpha_n``); internally the
simple root of node ``i`` sits at position ``i - 1`` of a coefficient vector.

Node numbering:

* ``A_n``: a path ``1 - 2 - ... - n``.
* ``D_n``: nodes 1 and 2 both attached to node 3, then ``3 - 4 - ... - n``.
  This matches the realization ``alpha_1 = e2 - e1``, ``alpha_2 = e2 + e1``,
  ``alpha_i = e_i - e_{i-1}``.
* ``E_n``: ``1 - 3 - 4 - 5 - ... - n`` with node 2 attached to node 4.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property

Root = tuple[int, ...]

_FAMILIES = ("A", "D", "E")


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DiagramSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}; expected one of A, D, E")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise RootSystemError(f"rank must be an integer, got {self.rank!r}")
        if self.family == "A" and self.rank < 1:
            raise RootSystemError("A_n requires n >= 1")
        if self.family == "D" and self.rank < 4:
            raise RootSystemError("D_n requires n >= 4")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise RootSystemError("E_n requires n in {6, 7, 8}")

    @classmethod
    def parse(cls, text: str) -> DiagramSpec:
        """Parse a label such as ``"A2"``, ``"D4"`` or ``"E_6"``."""
        m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", text)
        if m is None:
            raise RootSystemError(f"cannot parse diagram type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    def edges(self) -> list[tuple[int, int]]:
        """Edges of the Dynkin diagram as pairs of 1-based nodes."""
        n = self.rank
        if self.family == "A":
            return [(i, i + 1) for i in range(1, n)]
        if self.family == "D":
            return [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]
        return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)]


def _signed(root: Root) -> tuple[Root, int]:
    """Split a root into (positive root, sign)."""
    for c in root:
        if c > 0:
            return root, 1
        if c < 0:
            return tuple(-x for x in root), -1
    raise RootSystemError("zero vector is not a root")


class RootSystem:
    """The positive roots of an ADE diagram together with the bilinear form.

    ``positive_roots`` is sorted by height, then lexicographically on the
    coefficient vector.  Index-level tables (``gram``, ``simple_perm``) are
    exposed for the enumeration code in the other modules.
    """

    def __init__(self, spec: DiagramSpec):
        self.spec = spec
        n = self.rank = spec.rank
        form = [[0] * n for _ in range(n)]
        for i in range(n):
            form[i][i] = 2
        for i, j in spec.edges():
            form[i - 1][j - 1] = form[j - 1][i - 1] = -1
        self.form = tuple(tuple(row) for row in form)
        self.adjacency = frozenset(frozenset(e) for e in spec.edges())

        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(n):
                img, sign = _signed(self._reflect_simple(beta, i))
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        self.positive_roots: tuple[Root, ...] = tuple(
            sorted(seen, key=lambda r: (sum(r), r))
        )
        self.index: dict[Root, int] = {r: k for k, r in enumerate(self.positive_roots)}
        self.size = len(self.positive_roots)

    def __repr__(self):
        return f"RootSystem({self.spec})"

    # -- root-level operations -------------------------------------------

    def _check(self, root: Root) -> None:
        if len(root) != self.rank:
            raise RootSystemError(
                f"root {root} has length {len(root)}, expected {self.rank}"
            )

    def inner(self, a: Root, b: Root) -> int:
        self._check(a)
        self._check(b)
        form = self.form
        n = self.rank
        return sum(a[i] * form[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])

    def _reflect_simple(self, beta: Root, i: int) -> Root:
        c = sum(beta[j] * self.form[j][i] for j in range(self.rank))
        if c == 0:
            return beta
        return tuple(b - c * (j == i) for j, b in enumerate(beta))

    def reflect(self, beta: Root, alpha: Root) -> tuple[Root, int]:
        """Reflect ``beta`` in ``alpha``; return ``(positive root, sign)``."""
        if alpha not in self.index:
            raise RootSystemError(f"{alpha} is not a positive root of {self.spec}")
        c = self.inner(beta, alpha)
        img = tuple(b - c * a for b, a in zip(beta, alpha))
        pos, sign = _signed(img)
        if pos not in self.index:
            raise RootSystemError(f"{beta} is not a root of {self.spec}")
        return pos, sign

    @staticmethod
    def height(root: Root) -> int:
        return sum(root)

    @cached_property
    def highest_root(self) -> Root:
        top = self.positive_roots[-1]
        if sum(1 for r in self.positive_roots if sum(r) == sum(top)) != 1:
            raise RootSystemError("more than one root of maximal height")
        return top

    def simple_root(self, node: int) -> Root:
        if not 1 <= node <= self.rank:
            raise RootSystemError(f"node {node} out of range for {self.spec}")
        return tuple(int(j == node - 1) for j in range(self.rank))

    def adjacent(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.adjacency

    # -- index-level tables ----------------------------------------------

    @cached_property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Inner products between positive roots, by index."""
        roots = self.positive_roots
        return tuple(tuple(self.inner(a, b) for b in roots) for a in roots)

    @cached_property
    def simple_index(self) -> tuple[int, ...]:
        """Index of ``alpha_i`` for node ``i`` (0-based position)."""
        return tuple(self.index[self.simple_root(i)] for i in range(1, self.rank + 1))

    def reflection_perm(self, k: int) -> tuple[int, ...]:
        """The reflection in positive root ``k`` as a permutation of the signed
        index set: ``j`` stands for the positive root ``j`` and ``j + N`` for
        its negative."""
        return self._reflection_perms[k]

    @cached_property
    def _reflection_perms(self) -> tuple[tuple[int, ...], ...]:
        roots, index, N, gram = self.positive_roots, self.index, self.size, self.gram
        perms = []
        for k, alpha in enumerate(roots):
            images = [0] * N
            for j, beta in enumerate(roots):
                c = gram[j][k]
                if c == 0:
                    images[j] = j
                    continue
                pos, sign = _signed(tuple(b - c * a for b, a in zip(beta, alpha)))
                images[j] = index[pos] if sign > 0 else index[pos] + N
            perms.append(tuple(images + [(x + N) % (2 * N) for x in images]))
        return tuple(perms)

    def simple_perm(self, node: int) -> tuple[int, ...]:
        """Simple reflection ``r_node`` (1-based node) on the signed index set."""
        return self.reflection_perm(self.simple_index[node - 1])

    # -- type D -----------------------------------------------------------

    def epsilon(self, root: Root) -> tuple[int, ...]:
        """Coordinates of a D_n root in the e-basis (``e_1 .. e_n``)."""
        if self.spec.family != "D":
            raise RootSystemError("the e-realization is only defined for type D")
        self._check(root)
        n = self.rank
        v = [0] * n
        v[1] += root[0] + root[1]
        v[0] += root[1] - root[0]
        for i in range(2, n):
            v[i] += root[i]
            v[i - 1] -= root[i]
        return tuple(v)

    @cached_property
    def _from_epsilon(self) -> dict[tuple[int, ...], Root]:
        return {self.epsilon(r): r for r in self.positive_roots}

    def star(self, alpha: Root) -> Root:
        """The type-D involution ``(e_j +- e_i)* = e_j -+ e_i``."""
        if self.spec.family != "D":
            raise RootSystemError("star is only defined for type D")
        eps = self.epsilon(alpha)
        nz = [k for k, c in enumerate(eps) if c]
        if alpha not in self.index or len(nz) != 2:
            raise RootSystemError(f"{alpha} is not a positive root of {self.spec}")
        i, j = nz
        flipped = list(eps)
        flipped[i] = -flipped[i]
        return self._from_epsilon[tuple(flipped)]


_CACHE: dict[DiagramSpec, RootSystem] = {}


def build_root_system(spec: DiagramSpec | str) -> RootSystem:
    """Build (or fetch from cache) the root system of ``spec``."""
    if isinstance(spec, str):
        spec = DiagramSpec.parse(spec)
    sys = _CACHE.get(spec)
    if sys is None:
        sys = _CACHE[spec] = RootSystem(spec)
    return sys


def inner(sys: RootSystem, a: Root, b: Root) -> int:
    return sys.inner(a, b)


def reflect(sys: RootSystem, beta: Root, alpha: Root) -> tuple[Root, int]:
    return sys.reflect(beta, alpha)


def star(sys: RootSystem, alpha: Root) -> Root:
    return sys.star(alpha)


def expected_root_count(spec: DiagramSpec) -> int:
    """Closed-form number of positive roots."""
    n = spec.rank
    if spec.family == "A":
        return n * (n + 1) // 2
    if spec.family == "D":
        return n * (n - 1)
    return {6: 36, 7: 63, 8: 120}[n]
