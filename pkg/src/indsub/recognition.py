"""Membership tests for sinks, ell-scorpions, skeletons and fossils.

An ell-scorpion on ``k >= ell + 4`` vertices has a distinguished tuple
``(body, t_1, ..., t_ell, sting)`` that induces a path, with the body
adjacent to every remaining vertex (the legs) and no other tuple vertex
adjacent to any leg. That tuple is unique, which is what makes
:func:`locate_anatomy` well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import GraphKindMismatch, ParameterError
from .graph import DirectedGraph, Graph, UndirectedGraph, bits


@dataclass(frozen=True)
class ScorpionAnatomy:
    body: int
    tail: tuple[int, ...]
    sting: int
    legs: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.tail)

    @property
    def as_tuple(self) -> tuple[int, ...]:
        """``(body, t_1, ..., t_ell, sting)``."""
        return (self.body, *self.tail, self.sting)


def _check_ell(ell: int) -> None:
    if ell < 1:
        raise ParameterError(f"ell must be >= 1, got {ell}")


def satisfies_scorpion_tuple(H: UndirectedGraph, q: tuple[int, ...]) -> bool:
    """Check every condition of the scorpion definition for the candidate tuple ``q``."""
    n = H.n
    ell = len(q) - 2
    if ell < 1 or n < ell + 4 or len(set(q)) != len(q):
        return False
    rows = H.rows
    qmask = 0
    for v in q:
        qmask |= 1 << v
    # H[Q] is exactly the path q[0] - q[1] - ... - q[-1]
    for i, v in enumerate(q):
        want = 0
        if i > 0:
            want |= 1 << q[i - 1]
        if i + 1 < len(q):
            want |= 1 << q[i + 1]
        if rows[v] & qmask != want:
            return False
    legs = ((1 << n) - 1) & ~qmask
    if rows[q[0]] & legs != legs:
        return False
    return all(rows[v] & legs == 0 for v in q[1:])


def _anatomy(n: int, q: tuple[int, ...]) -> ScorpionAnatomy:
    inq = set(q)
    return ScorpionAnatomy(q[0], tuple(q[1:-1]), q[-1], tuple(v for v in range(n) if v not in inq))


def locate_anatomy(H: UndirectedGraph, ell: int) -> Optional[ScorpionAnatomy]:
    """Recover body, tail and sting from degrees, or ``None`` if ``H`` is no ell-scorpion.

    The body is the only vertex of degree ``k - ell - 1``; the sting is the
    only degree-1 vertex outside the body's closed neighborhood; ``t_i`` is
    the only vertex at distance ``ell - i + 1`` from the sting. The candidate
    is then checked against the full definition.
    """
    _check_ell(ell)
    k = H.n
    if k < ell + 4:
        return None
    rows = H.rows
    bodies = [v for v in range(k) if rows[v].bit_count() == k - ell - 1]
    if len(bodies) != 1:
        return None
    b = bodies[0]
    far = ((1 << k) - 1) & ~rows[b] & ~(1 << b)
    stings = [v for v in bits(far) if rows[v].bit_count() == 1]
    if len(stings) != 1:
        return None
    s = stings[0]

    # BFS layers from the sting; layer d must be the single vertex t_{ell-d+1}
    tail = [0] * ell
    seen = 1 << s
    frontier = 1 << s
    for d in range(1, ell + 1):
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        nxt &= ~seen
        if nxt.bit_count() != 1:
            return None
        tail[ell - d] = nxt.bit_length() - 1
        seen |= nxt
        frontier = nxt

    q = (b, *tail, s)
    if not satisfies_scorpion_tuple(H, q):
        return None
    return _anatomy(k, q)


def _induced_paths_from(rows: tuple[int, ...], start: int, length: int) -> Iterator[tuple[int, ...]]:
    """Ordered induced paths with ``length`` vertices beginning at ``start``."""
    path = [start]

    def extend(blocked: int) -> Iterator[tuple[int, ...]]:
        if len(path) == length:
            yield tuple(path)
            return
        last = path[-1]
        for w in bits(rows[last] & ~blocked):
            path.append(w)
            # w's successor must avoid every earlier vertex and its neighbors
            yield from extend(blocked | (1 << last) | rows[last] | (1 << w))
            path.pop()

    yield from extend(1 << start)


def find_all_anatomies(H: UndirectedGraph, ell: int) -> list[ScorpionAnatomy]:
    """Every tuple satisfying the scorpion definition, by exhaustive search.

    Independent of :func:`locate_anatomy`: no degree reasoning, only a walk
    over all induced paths on ``ell + 2`` vertices followed by the full
    definition check.
    """
    _check_ell(ell)
    if H.n < ell + 4:
        return []
    out = []
    for b in range(H.n):
        for q in _induced_paths_from(H.rows, b, ell + 2):
            if satisfies_scorpion_tuple(H, q):
                out.append(_anatomy(H.n, q))
    return out


def is_scorpion(H: UndirectedGraph, ell: int) -> bool:
    return locate_anatomy(H, ell) is not None


def is_skeleton(H: UndirectedGraph, ell: int) -> bool:
    anatomy = locate_anatomy(H, ell)
    if anatomy is None:
        return False
    rows = H.rows
    legs = 0
    for v in anatomy.legs:
        legs |= 1 << v
    return all(rows[v] & legs == 0 for v in anatomy.legs)


def fossil_witness(H: UndirectedGraph, ell: int) -> Optional[tuple[int, ...]]:
    """First tuple (lexicographic) whose skeleton edges lie in ``H`` and whose legs are independent.

    Unlike a scorpion, a fossil may carry any extra edge with a non-leg
    endpoint, so the tuple only needs to be a (not necessarily induced)
    walk along edges of ``H``.
    """
    _check_ell(ell)
    k = H.n
    if k < ell + 4:
        return None
    rows = H.rows
    full = (1 << k) - 1
    n_legs = k - ell - 2
    path: list[int] = []

    def search(used: int) -> Optional[tuple[int, ...]]:
        if len(path) == ell + 2:
            legs = full & ~used
            if rows[path[0]] & legs != legs:
                return None
            for v in bits(legs):
                if rows[v] & legs:
                    return None
            return tuple(path)
        cands = rows[path[-1]] & ~used if path else full
        for w in bits(cands):
            if not path and rows[w].bit_count() < n_legs + 1:
                continue
            path.append(w)
            found = search(used | (1 << w))
            path.pop()
            if found is not None:
                return found
        return None

    return search(0)


def is_fossil(H: UndirectedGraph, ell: int) -> bool:
    return fossil_witness(H, ell) is not None


def find_sink(D: DirectedGraph) -> Optional[int]:
    """The vertex every other vertex points to, if any (at most one exists)."""
    full = (1 << D.n) - 1
    for v, row in enumerate(D.in_rows):
        if row == full & ~(1 << v):
            return v
    return None


@dataclass(frozen=True)
class PropertySpec:
    """A graph property: ``sink``, ``scorpion``, ``skeleton``, ``fossil`` or ``custom``.

    ``custom`` wraps an arbitrary total predicate; ``directed`` says which
    graph type it accepts.
    """

    kind: str
    ell: Optional[int] = None
    predicate: Optional[Callable[[Graph], bool]] = None
    directed: bool = False
    name: str = ""

    KINDS = ("sink", "scorpion", "skeleton", "fossil", "custom")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ParameterError(f"unknown property kind {self.kind!r}")
        if self.kind in ("scorpion", "skeleton", "fossil"):
            if self.ell is None:
                raise ParameterError(f"{self.kind} needs ell")
            _check_ell(self.ell)
        if self.kind == "custom" and self.predicate is None:
            raise ParameterError("custom property needs a predicate")
        if self.kind == "sink":
            object.__setattr__(self, "directed", True)
        elif self.kind != "custom":
            object.__setattr__(self, "directed", False)

    @classmethod
    def sink(cls) -> PropertySpec:
        return cls("sink")

    @classmethod
    def scorpion(cls, ell: int) -> PropertySpec:
        return cls("scorpion", ell)

    @classmethod
    def skeleton(cls, ell: int) -> PropertySpec:
        return cls("skeleton", ell)

    @classmethod
    def fossil(cls, ell: int) -> PropertySpec:
        return cls("fossil", ell)

    @classmethod
    def custom(cls, predicate: Callable[[Graph], bool], name: str = "custom", directed: bool = False) -> PropertySpec:
        return cls("custom", predicate=predicate, directed=directed, name=name)

    def negate(self) -> PropertySpec:
        """The complement property: holds exactly where ``self`` fails."""
        return PropertySpec.custom(lambda H: not evaluate_property(self, H), f"not {self.label}", self.directed)

    @property
    def label(self) -> str:
        if self.kind == "custom":
            return self.name
        if self.kind == "sink":
            return "sink"
        return f"{self.kind}({self.ell})"


def evaluate_property(spec: PropertySpec, H: Graph) -> bool:
    if spec.directed != isinstance(H, DirectedGraph):
        want = "directed" if spec.directed else "undirected"
        raise GraphKindMismatch(f"property {spec.label} expects a {want} graph, got {type(H).__name__}")
    kind = spec.kind
    if kind == "sink":
        return find_sink(H) is not None
    if kind == "scorpion":
        return is_scorpion(H, spec.ell)
    if kind == "skeleton":
        return is_skeleton(H, spec.ell)
    if kind == "fossil":
        return is_fossil(H, spec.ell)
    return bool(spec.predicate(H))
