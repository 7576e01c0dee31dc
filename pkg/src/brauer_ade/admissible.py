"""Admissible root sets, their Weyl group orbits and monoidal posets.

A root set is stored as a sorted tuple of positive-root indices of a
:class:`~brauer_ade.rootsys.RootSystem`; because positive roots are indexed
in canonical order, tuple order is the canonical order on root sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvariantViolation
from .rootsys import DiagramSpec, Root, RootSystem, build_root_system

RootSet = tuple[int, ...]

# default desk-scale bounds for enumerate_all_orbits
MAX_RANK = {"A": 8, "D": 8}


class AdmissibilityError(ValueError):
    pass


# -- conversions ----------------------------------------------------------


def as_rootset(sys: RootSystem, roots: Iterable[Root | int]) -> RootSet:
    """Normalize coefficient vectors (or indices) to a sorted index tuple."""
    out = set()
    for r in roots:
        if isinstance(r, int):
            if not 0 <= r < sys.size:
                raise AdmissibilityError(f"root index {r} out of range")
            out.add(r)
            continue
        r = tuple(r)
        neg = tuple(-c for c in r)
        if r in sys.index:
            out.add(sys.index[r])
        elif neg in sys.index:
            out.add(sys.index[neg])
        else:
            raise AdmissibilityError(f"{r} is not a root of {sys.spec}")
    return tuple(sorted(out))


def simple_rootset(sys: RootSystem, nodes: Iterable[int]) -> RootSet:
    return as_rootset(sys, [sys.simple_root(i) for i in nodes])


def roots_of(sys: RootSystem, B: RootSet) -> list[Root]:
    return [sys.positive_roots[k] for k in B]


def is_orthogonal(sys: RootSystem, B: RootSet) -> bool:
    g = sys.gram
    return all(g[a][b] == 0 for a, b in combinations(B, 2))


def _require_orthogonal(sys: RootSystem, B: RootSet) -> None:
    if not is_orthogonal(sys, B):
        raise AdmissibilityError(f"{roots_of(sys, B)} is not mutually orthogonal")


# -- Weyl group action ------------------------------------------------------


def apply_perm(sys: RootSystem, perm: Sequence[int], B: RootSet) -> RootSet:
    """Image of a root set under a signed-root permutation, folded into the
    positive roots."""
    N = sys.size
    return tuple(sorted(perm[k] % N for k in B))


def reflect_set(sys: RootSystem, k: int, B: RootSet) -> RootSet:
    """Apply the reflection in positive root ``k`` to ``B``."""
    return apply_perm(sys, sys.reflection_perm(k), B)


def w_action(sys: RootSystem, word: Sequence[int], B: RootSet) -> RootSet:
    """Apply ``r_{w_1} r_{w_2} ... r_{w_k}`` to ``B`` (rightmost factor first).

    ``word`` lists 1-based node indices.
    """
    for node in word:
        if not 1 <= node <= sys.rank:
            raise AdmissibilityError(f"node {node} out of range for {sys.spec}")
    for node in reversed(word):
        B = apply_perm(sys, sys.simple_perm(node), B)
    return B


# -- closure and admissibility ----------------------------------------------


def _completions(sys: RootSystem, B: RootSet) -> set[int]:
    """Roots forced into ``B`` by the closure rule.

    For mutually orthogonal ``g1, g2, g3`` in ``B`` and a root ``gamma`` with
    ``(gamma, g_i) = -1`` for all three, ``2 gamma + g1 + g2 + g3`` is a root
    orthogonal to each ``g_i``.  With the form used here (adjacent simple
    roots pair to -1) this is the only sign for which the vector is a root;
    ``gamma`` ranges over both signs, so positive ``gamma`` with all three
    products equal to +1 contributes ``2 gamma - g1 - g2 - g3``.
    """
    if len(B) < 3:
        return set()
    roots, gram, index = sys.positive_roots, sys.gram, sys.index
    forced = set()
    for g in range(sys.size):
        row = gram[g]
        for sign in (-1, 1):
            hits = [b for b in B if row[b] == sign]
            for triple in combinations(hits, 3):
                s = [sum(col) for col in zip(*(roots[b] for b in triple))]
                v = tuple(-2 * sign * c + x for c, x in zip(roots[g], s))
                if v in index:
                    forced.add(index[v])
                elif tuple(-x for x in v) in index:
                    forced.add(index[tuple(-x for x in v)])
                else:
                    raise InvariantViolation(
                        f"closure rule produced non-root {v} in {sys.spec}"
                    )
    return forced


def closure(sys: RootSystem, X: Iterable[Root | int]) -> RootSet:
    """The smallest admissible set containing the orthogonal set ``X``."""
    current = set(as_rootset(sys, X))
    _require_orthogonal(sys, tuple(current))
    return _closure_idx(sys, tuple(sorted(current)))


_CLOSURE_CACHE: dict[tuple[DiagramSpec, RootSet], RootSet] = {}


def _closure_idx(sys: RootSystem, X: RootSet) -> RootSet:
    key = (sys.spec, X)
    hit = _CLOSURE_CACHE.get(key)
    if hit is not None:
        return hit
    current = set(X)
    while True:
        new = _completions(sys, tuple(sorted(current))) - current
        if not new:
            break
        current |= new
        if not is_orthogonal(sys, tuple(current)):
            raise InvariantViolation(
                f"closure of {roots_of(sys, X)} lost mutual orthogonality"
            )
    result = tuple(sorted(current))
    _CLOSURE_CACHE[key] = result
    return result


def _closure_rule_holds(sys: RootSystem, B: RootSet) -> bool:
    return _completions(sys, B) <= set(B)


def _orbit_sets(sys: RootSystem, seed: RootSet) -> list[RootSet]:
    seen = {seed}
    queue = deque([seed])
    perms = [sys.simple_perm(i) for i in range(1, sys.rank + 1)]
    while queue:
        B = queue.popleft()
        for p in perms:
            C = apply_perm(sys, p, B)
            if C not in seen:
                seen.add(C)
                queue.append(C)
    return sorted(seen)


_ORBIT_LOCAL_CACHE: dict[tuple[DiagramSpec, RootSet], bool] = {}


def _orbit_local_holds(sys: RootSystem, B: RootSet) -> bool:
    key = (sys.spec, B)
    if key in _ORBIT_LOCAL_CACHE:
        return _ORBIT_LOCAL_CACHE[key]
    members = _orbit_sets(sys, B)
    roots, index = sys.positive_roots, sys.index
    n = sys.rank
    pairs = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j and not sys.adjacent(i, j)
    ]
    verdict = True
    for C in members:
        cset = set(C)
        for i, j in pairs:
            hit = False
            for g in C:
                v = list(roots[g])
                v[i - 1] -= 1
                v[j - 1] += 1
                if index.get(tuple(v)) in cset:
                    hit = True
                    break
            if hit and w_action(sys, [i], C) != w_action(sys, [j], C):
                verdict = False
                break
        if not verdict:
            break
    for C in members:
        _ORBIT_LOCAL_CACHE[(sys.spec, C)] = verdict
    return verdict


def is_admissible(sys: RootSystem, B: Iterable[Root | int], variant: str = "closure-rule") -> bool:
    """Test admissibility of a mutually orthogonal root set.

    ``variant="closure-rule"`` checks that ``B`` is closed under the closure
    rule; ``variant="orbit-local"`` checks, on every member of the W-orbit,
    that ``gamma, gamma - alpha_i + alpha_j`` in the set (``i``, ``j``
    non-adjacent) forces ``r_i`` and ``r_j`` to agree.
    """
    B = as_rootset(sys, B)
    _require_orthogonal(sys, B)
    if variant == "closure-rule":
        return _closure_rule_holds(sys, B)
    if variant == "orbit-local":
        return _orbit_local_holds(sys, B)
    raise ValueError(f"unknown admissibility variant {variant!r}")


def orthogonal_subsets(sys: RootSystem) -> list[RootSet]:
    """All mutually orthogonal sets of positive roots (including the empty set)."""
    N, gram = sys.size, sys.gram
    out: list[RootSet] = []

    def grow(current: tuple[int, ...], candidates: list[int]):
        out.append(current)
        for pos, k in enumerate(candidates):
            rest = [c for c in candidates[pos + 1:] if gram[k][c] == 0]
            grow(current + (k,), rest)

    grow((), list(range(N)))
    return out


# -- orbits and posets ------------------------------------------------------


@dataclass(frozen=True)
class Poset:
    """Strict order on orbit members, by member position.

    ``covers`` holds the generating pairs ``(lower, upper)`` from raising and
    lowering moves; ``above[k]`` is a bitmask of all members strictly above
    member ``k``.
    """

    covers: tuple[tuple[int, int], ...]
    above: tuple[int, ...]
    maximal: int

    def less(self, a: int, b: int) -> bool:
        return bool(self.above[a] >> b & 1)

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs ``(lower, upper)`` of the transitive order."""
        edges = []
        for a, mask in enumerate(self.above):
            ups = [b for b in range(len(self.above)) if mask >> b & 1]
            for b in ups:
                if not any(self.above[c] >> b & 1 for c in ups if c != b):
                    edges.append((a, b))
        return edges


@dataclass(frozen=True)
class AdmissibleOrbit:
    spec: DiagramSpec
    members: tuple[RootSet, ...]
    action_edges: dict[tuple[int, int], int] = field(repr=False, compare=False)
    poset: Poset | None = field(default=None, repr=False, compare=False)

    @property
    def representative(self) -> RootSet:
        return self.members[0]

    @property
    def orbit_size(self) -> int:
        return len(self.members)

    @property
    def maximal(self) -> RootSet:
        if self.poset is None:
            raise ValueError("poset not built; call build_poset first")
        return self.members[self.poset.maximal]

    def position(self, B: RootSet) -> int:
        return self.members.index(B)

    def __contains__(self, B) -> bool:
        return B in self.members


def enumerate_orbit(sys: RootSystem, seed: Iterable[Root | int]) -> AdmissibleOrbit:
    """BFS closure of an admissible seed under the simple reflections."""
    seed = as_rootset(sys, seed)
    _require_orthogonal(sys, seed)
    if not _closure_rule_holds(sys, seed):
        raise AdmissibilityError(f"seed {roots_of(sys, seed)} is not admissible")
    members = _orbit_sets(sys, seed)
    pos = {B: k for k, B in enumerate(members)}
    edges = {}
    for k, B in enumerate(members):
        for node in range(1, sys.rank + 1):
            edges[k, node] = pos[apply_perm(sys, sys.simple_perm(node), B)]
    return AdmissibleOrbit(sys.spec, tuple(members), edges)


def build_poset(sys: RootSystem, orbit: AdmissibleOrbit) -> AdmissibleOrbit:
    """Attach the monoidal poset to ``orbit``.

    ``R_i B < B`` when the lowest root of ``B`` moved by ``r_i`` drops by
    ``alpha_i``; the order is the transitive closure of these moves.
    """
    gram = sys.gram
    heights = [sum(r) for r in sys.positive_roots]
    size = orbit.orbit_size
    # (k, j) -> +1 if R_i raises member k to member j, -1 if it lowers,
    # None when the lowest moved roots of k disagree (height tie)
    verdicts: dict[tuple[int, int], int | None] = {}
    for k, B in enumerate(orbit.members):
        for node in range(1, sys.rank + 1):
            j = orbit.action_edges[k, node]
            if j == k:
                continue
            a = sys.simple_index[node - 1]
            moved = [b for b in B if b != a and gram[b][a] != 0]
            low = min(heights[b] for b in moved)
            signs = {gram[b][a] for b in moved if heights[b] == low}
            verdicts[k, j] = None if len(signs) == 2 else -signs.pop()
    covers = set()
    for (k, j), v in verdicts.items():
        if k > j:
            continue
        back = verdicts[j, k]
        if v is None and back is None:
            raise InvariantViolation(
                f"cannot orient {roots_of(sys, orbit.members[k])} -- "
                f"{roots_of(sys, orbit.members[j])} in {sys.spec}"
            )
        if v is not None and back is not None and v != -back:
            raise InvariantViolation(
                f"raising and lowering disagree on {roots_of(sys, orbit.members[k])} in {sys.spec}"
            )
        up = v if v is not None else -back
        covers.add((k, j) if up > 0 else (j, k))

    ups: dict[int, list[int]] = {k: [] for k in range(size)}
    indeg = [0] * size
    for lo, hi in covers:
        ups[lo].append(hi)
        indeg[hi] += 1
    order = []
    queue = deque(k for k in range(size) if indeg[k] == 0)
    while queue:
        k = queue.popleft()
        order.append(k)
        for h in ups[k]:
            indeg[h] -= 1
            if indeg[h] == 0:
                queue.append(h)
    if len(order) != size:
        raise InvariantViolation(f"raising/lowering moves contain a cycle in {sys.spec}")
    above = [0] * size
    for k in reversed(order):
        mask = 0
        for h in ups[k]:
            mask |= (1 << h) | above[h]
        above[k] = mask
    maxima = [k for k in range(size) if above[k] == 0]
    if len(maxima) != 1:
        raise InvariantViolation(
            f"orbit of {roots_of(sys, orbit.representative)} in {sys.spec} "
            f"has {len(maxima)} maximal elements"
        )
    poset = Poset(tuple(sorted(covers)), tuple(above), maxima[0])
    return replace(orbit, poset=poset)


def _check_bounds(spec: DiagramSpec, opt_in_e8: bool) -> None:
    if spec.family == "E":
        if spec.rank == 8 and not opt_in_e8:
            raise AdmissibilityError("E8 enumeration is opt-in (pass opt_in_e8=True)")
        return
    if spec.rank > MAX_RANK[spec.family]:
        raise AdmissibilityError(
            f"{spec} exceeds the desk-scale bound {spec.family}{MAX_RANK[spec.family]}"
        )


def admissible_sets(sys: RootSystem, generator_order: Sequence[str] | None = None) -> list[RootSet]:
    """All admissible sets reachable from the empty set under ``R_i``, ``E_i``."""
    from .braction import Generator, act

    if generator_order is None:
        gens = [Generator(k, i) for k in "ER" for i in range(1, sys.rank + 1)]
    else:
        gens = [Generator.parse(tok) for tok in generator_order]
    seen = {(): None}
    queue = deque([()])
    while queue:
        B = queue.popleft()
        for g in gens:
            C = act(sys, g, B)
            if C not in seen:
                seen[C] = None
                queue.append(C)
    return list(seen)


def enumerate_all_orbits(
    spec: DiagramSpec | str,
    *,
    opt_in_e8: bool = False,
    generator_order: Sequence[str] | None = None,
    with_poset: bool = True,
) -> list[AdmissibleOrbit]:
    """Partition the admissible sets of ``spec`` into W-orbits.

    Orbits are sorted by (size of their sets, representative); the list does
    not depend on ``generator_order``.
    """
    sys = build_root_system(spec)
    _check_bounds(sys.spec, opt_in_e8)
    remaining = set(admissible_sets(sys, generator_order))
    orbits = []
    while remaining:
        seed = min(remaining, key=lambda B: (len(B), B))
        orbit = enumerate_orbit(sys, seed)
        missing = set(orbit.members) - remaining
        if missing:
            raise InvariantViolation(
                f"orbit of {roots_of(sys, seed)} leaves the reachable admissible sets"
            )
        remaining -= set(orbit.members)
        orbits.append(build_poset(sys, orbit) if with_poset else orbit)
    orbits.sort(key=lambda o: (len(o.representative), o.representative))
    return orbits


def orbits_by_brute_force(sys: RootSystem, variant: str = "orbit-local") -> list[list[RootSet]]:
    """Independent route to the orbit partition: filter every orthogonal
    subset by admissibility, then split into W-orbits.  Members of each orbit
    are listed in reverse canonical order."""
    admissible = [B for B in orthogonal_subsets(sys) if is_admissible(sys, B, variant)]
    remaining = set(admissible)
    out = []
    for B in sorted(admissible, reverse=True):
        if B not in remaining:
            continue
        members = _orbit_sets(sys, B)
        remaining -= set(members)
        out.append(sorted(members, reverse=True))
    return out


# -- printed orbit representatives ---------------------------------------------


def printed_representatives(spec: DiagramSpec | str) -> list[tuple[str, RootSet]]:
    """Labelled orbit representatives from the published list, one per
    expected orbit.

    In type D the leading element of ``Y(t)`` is ``alpha_n``; in E7 the third
    representative is ``{alpha_7, alpha_5, alpha_2}``.
    """
    sys = build_root_system(spec)
    spec = sys.spec
    n = spec.rank
    S = lambda *nodes: simple_rootset(sys, nodes)  # noqa: E731
    cl = lambda *nodes: _closure_idx(sys, S(*nodes))  # noqa: E731
    reps: list[tuple[str, RootSet]] = []
    if spec.family == "A":
        for t in range((n + 1) // 2 + 1):
            reps.append((f"t={t}", S(*(2 * i - 1 for i in range(1, t + 1)))))
    elif spec.family == "D":
        def Y(t):
            return [n + 2 - 2 * i for i in range(1, t + 1)]

        for t in range(n // 2 + 1):
            reps.append((f"Y({t})", S(*Y(t))))
        if n % 2 == 0:
            reps.append(("Y(n/2)'", S(*(Y(n // 2 - 1) + [1]))))
        for t in range(1, n // 2 + 1):
            ys = S(*Y(t))
            stars = [sys.star(sys.positive_roots[k]) for k in ys]
            reps.append((f"Y({t})+Y({t})*", as_rootset(sys, list(ys) + stars)))
    else:
        top = {6: [(6,), (6, 4)], 7: [(7,), (7, 5), (7, 5, 2)], 8: [(8,), (8, 6)]}[n]
        closed = {6: [(6, 2, 3)], 7: [(7, 2, 3), (7, 5, 2, 3)], 8: [(8, 2, 3), (8, 5, 2, 3)]}[n]
        reps.append(("empty", ()))
        for nodes in top:
            reps.append((str(set(nodes)), S(*nodes)))
        for nodes in closed:
            reps.append((f"{set(nodes)}^cl", cl(*nodes)))
    return reps


def printed_crosscheck(spec: DiagramSpec | str, orbits: list[AdmissibleOrbit]) -> list[dict]:
    """Locate each printed representative among enumerated orbits.

    Returns one record per printed entry; ``orbit`` is ``None`` when the entry
    is not admissible or lies in no enumerated orbit, and ``duplicate_of``
    names an earlier entry in the same orbit.
    """
    sys = build_root_system(spec)
    where = {B: k for k, o in enumerate(orbits) for B in o.members}
    records = []
    first_label: dict[int, str] = {}
    for label, B in printed_representatives(sys.spec):
        k = where.get(B)
        rec = {
            "label": label,
            "roots": [list(r) for r in roots_of(sys, B)],
            "admissible": is_orthogonal(sys, B) and _closure_rule_holds(sys, B),
            "orbit": k,
            "duplicate_of": first_label.get(k) if k is not None else None,
        }
        if k is not None:
            first_label.setdefault(k, label)
        records.append(rec)
    return records
