"""Coxeter/Artin diagrams, the diagram file format, and the level sequence.

A diagram is the whole presentation: a finite generator set and a
symmetric label ``m(s, t)`` for each unordered pair.  Pairs that are not
stored have ``m = 2`` (the generators commute).  The label ``INFINITY``
means that no relation holds between the two generators.

The level sequence A_0 -> A_1 -> ... -> A_n is built from a *seed*
diagram containing a distinguished anchor generator sigma_1.  Level n
appends a tail sigma_2, ..., sigma_n, joined to the anchor by a path of
``m = 3`` edges.  Internally the anchor is renumbered to 1, the remaining
seed generators to 2..g, and sigma_i (i >= 2) to g + i - 1, so that the
empty seed gives the braid monoids with sigma_i = i.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Mapping

from .errors import BadLabel, DiagramError, DuplicateEdge, UnknownGenerator


class Infinity:
    """Token for an infinite label.  Deliberately supports no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()


def _check_label(v):
    if v is INFINITY:
        return v
    if isinstance(v, bool) or not isinstance(v, int) or v < 2:
        raise BadLabel(f"label must be an integer >= 2 or INFINITY, got {v!r}")
    return v


@dataclasses.dataclass(frozen=True)
class CoxeterDiagram:
    """Symmetric labelling ``m(s, t)`` on a finite ordered generator set.

    ``labels`` stores each unordered pair once as ``((s, t), m)`` with
    ``s < t``; pairs with ``m = 2`` are dropped on construction so that
    equal diagrams compare and hash equal.
    """

    generators: tuple[int, ...]
    labels: tuple[tuple[tuple[int, int], object], ...] = ()

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        if len(set(gens)) != len(gens):
            raise DiagramError(f"repeated generator in {gens}")
        if any(g < 1 for g in gens):
            raise DiagramError("generators are positive integers")
        gens = tuple(sorted(gens))
        table = {}
        for (s, t), m in self.labels:
            if s == t:
                raise DiagramError(f"self-pair ({s}, {s}) cannot carry a label")
            if s not in gens or t not in gens:
                raise UnknownGenerator(f"edge ({s}, {t}) uses an undeclared generator")
            key = (min(s, t), max(s, t))
            if key in table:
                raise DuplicateEdge(f"pair {key} labelled twice")
            table[key] = _check_label(m)
        table = {k: v for k, v in table.items() if v != 2}
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "labels", tuple(sorted(table.items())))
        object.__setattr__(self, "_table", table)

    @classmethod
    def from_mapping(cls, generators: Iterable[int], labels: Mapping[tuple[int, int], object]):
        return cls(tuple(generators), tuple(labels.items()))

    @classmethod
    def braid(cls, strands: int) -> "CoxeterDiagram":
        """Type A_{strands-1}: the braid monoid on ``strands`` strands."""
        g = max(strands - 1, 0)
        return cls(tuple(range(1, g + 1)), tuple(((i, i + 1), 3) for i in range(1, g)))

    def m(self, s: int, t: int):
        if s == t:
            return 1
        return self._table.get((min(s, t), max(s, t)), 2)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def edges(self):
        """Pairs with ``m != 2`` (the drawn edges), as ``(s, t, m)``."""
        return [(s, t, m) for (s, t), m in self.labels]

    def restrict(self, gens: Iterable[int]) -> "CoxeterDiagram":
        keep = set(gens)
        missing = keep - set(self.generators)
        if missing:
            raise UnknownGenerator(f"generators {sorted(missing)} not in diagram")
        return CoxeterDiagram(
            tuple(sorted(keep)),
            tuple(((s, t), m) for (s, t), m in self.labels if s in keep and t in keep),
        )

    def relabel(self, mapping: Mapping[int, int]) -> "CoxeterDiagram":
        return CoxeterDiagram(
            tuple(mapping[g] for g in self.generators),
            tuple(((mapping[s], mapping[t]), m) for (s, t), m in self.labels),
        )

    def components(self, predicate=None) -> list[tuple[int, ...]]:
        """Connected components of the graph of edges satisfying ``predicate``.

        The default predicate keeps every drawn edge (``m != 2``).
        """
        parent = {g: g for g in self.generators}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t, m in self.edges():
            if predicate is None or predicate(m):
                rs, rt = find(s), find(t)
                if rs != rt:
                    parent[max(rs, rt)] = min(rs, rt)
        groups: dict[int, list[int]] = {}
        for g in self.generators:
            groups.setdefault(find(g), []).append(g)
        return sorted(tuple(v) for v in groups.values())


# -- file format ---------------------------------------------------------

_GEN_RE = re.compile(r"^generators:\s*(\S+)$")
_ANCHOR_RE = re.compile(r"^anchor:\s*(\S+)$")


def _parse_int(tok, what):
    try:
        return int(tok)
    except ValueError:
        raise DiagramError(f"expected an integer {what}, got {tok!r}") from None


def parse_seed(text: str) -> tuple[CoxeterDiagram, int]:
    """Parse diagram text, returning the diagram and its anchor (default 1)."""
    g = None
    anchor = None
    labels: dict[tuple[int, int], object] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if g is None:
            match = _GEN_RE.match(line)
            if not match:
                raise DiagramError(f"line {lineno}: first entry must be 'generators: <g>'")
            g = _parse_int(match.group(1), "generator count")
            if g < 0:
                raise DiagramError(f"line {lineno}: generator count must be >= 0")
            continue
        match = _ANCHOR_RE.match(line)
        if match:
            if anchor is not None:
                raise DiagramError(f"line {lineno}: anchor declared twice")
            anchor = _parse_int(match.group(1), "anchor")
            continue
        parts = line.split()
        if len(parts) != 4 or parts[0] != "m":
            raise DiagramError(f"line {lineno}: expected 'm <s> <t> <v>', got {line!r}")
        s = _parse_int(parts[1], "generator")
        t = _parse_int(parts[2], "generator")
        for x in (s, t):
            if not 1 <= x <= g:
                raise UnknownGenerator(f"line {lineno}: generator {x} outside 1..{g}")
        if s == t:
            raise DiagramError(f"line {lineno}: self-pair ({s}, {s})")
        if parts[3].lower() == "inf":
            v = INFINITY
        else:
            try:
                v = int(parts[3])
            except ValueError:
                raise BadLabel(f"line {lineno}: bad label {parts[3]!r}") from None
            if v < 2:
                raise BadLabel(f"line {lineno}: label {v} < 2")
        key = (min(s, t), max(s, t))
        if key in labels:
            raise DuplicateEdge(f"line {lineno}: pair {key} given twice")
        labels[key] = v
    if g is None:
        raise DiagramError("missing 'generators: <g>' line")
    d = CoxeterDiagram.from_mapping(range(1, g + 1), labels)
    if anchor is None:
        anchor = 1
    if g and not 1 <= anchor <= g:
        raise UnknownGenerator(f"anchor {anchor} outside 1..{g}")
    return d, anchor


def parse_diagram(text: str) -> CoxeterDiagram:
    return parse_seed(text)[0]


def format_diagram(d: CoxeterDiagram, anchor: int | None = None) -> str:
    """Inverse of ``parse_diagram`` for diagrams on generators 1..g."""
    if d.generators != tuple(range(1, d.rank + 1)):
        d = d.relabel({g: i for i, g in enumerate(d.generators, 1)})
    lines = [f"generators: {d.rank}"]
    if anchor is not None:
        lines.append(f"anchor: {anchor}")
    lines += [f"m {s} {t} {m}" for s, t, m in d.edges()]
    return "\n".join(lines) + "\n"


# -- the level sequence --------------------------------------------------

EMPTY_SEED = CoxeterDiagram((1,))


@dataclasses.dataclass(frozen=True)
class SequenceConfig:
    seed: CoxeterDiagram
    anchor: int = 1
    n: int = 0

    def __post_init__(self):
        if self.anchor not in self.seed.generators:
            raise UnknownGenerator(f"anchor {self.anchor} is not a seed generator")
        if self.n < 0:
            raise DiagramError("level n must be >= 0")


class ArtinSequence:
    """The sequence of diagrams A_0 -> A_1 -> ... built from a seed.

    All levels share one numbering, so the generators of level n - 1 are a
    subset of those of level n.  ``sigma(i)`` is the internal index of
    sigma_i and ``sub_generators(p)`` the generating set of A_p.
    """

    def __init__(self, seed: CoxeterDiagram = EMPTY_SEED, anchor: int = 1):
        if anchor not in seed.generators:
            raise UnknownGenerator(f"anchor {anchor} is not a seed generator")
        order = [anchor] + [g for g in seed.generators if g != anchor]
        self.seed = seed.relabel({g: i for i, g in enumerate(order, 1)})
        self.seed_rank = seed.rank
        self._levels: dict[int, CoxeterDiagram] = {}

    def __eq__(self, other):
        return isinstance(other, ArtinSequence) and self.seed == other.seed

    def __hash__(self):
        return hash(self.seed)

    def __repr__(self):
        return f"ArtinSequence({self.seed!r})"

    def sigma(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"sigma_{i} does not exist")
        return 1 if i == 1 else self.seed_rank + i - 1

    def sub_generators(self, p: int) -> tuple[int, ...]:
        """Generators of A_p, in the shared numbering."""
        if p < 0:
            raise ValueError("p must be >= 0")
        rest = tuple(range(2, self.seed_rank + 1))
        if p == 0:
            return rest
        return (1,) + rest + tuple(self.sigma(i) for i in range(2, p + 1))

    def diagram(self, n: int) -> CoxeterDiagram:
        if n < 0:
            raise DiagramError("level n must be >= 0")
        if n not in self._levels:
            gens = self.sub_generators(n)
            if n == 0:
                d = self.seed.restrict(gens)
            else:
                labels = dict(((s, t), m) for (s, t), m in self.seed.labels)
                for i in range(1, n):
                    labels[(self.sigma(i), self.sigma(i + 1))] = 3
                d = CoxeterDiagram.from_mapping(gens, labels)
            self._levels[n] = d
        return self._levels[n]


def level_diagram(cfg: SequenceConfig) -> CoxeterDiagram:
    return ArtinSequence(cfg.seed, cfg.anchor).diagram(cfg.n)


# -- classification ------------------------------------------------------

NOT_FINITE = "NotFiniteType"


@dataclasses.dataclass(frozen=True)
class ClassificationResult:
    components: tuple[tuple[tuple[int, ...], str], ...]

    @property
    def is_finite_type(self) -> bool:
        return all(name != NOT_FINITE for _, name in self.components)

    @property
    def names(self) -> list[str]:
        return sorted(name for _, name in self.components)


def _classify_component(d: CoxeterDiagram) -> str:
    nv = d.rank
    edges = d.edges()
    if any(m is INFINITY for _, _, m in edges):
        return NOT_FINITE
    if nv == 1:
        return "A1"
    if len(edges) != nv - 1:
        return NOT_FINITE
    if nv == 2:
        m = edges[0][2]
        return {3: "A2", 4: "B2"}.get(m, f"I2({m})")
    big = [e for e in edges if e[2] != 3]
    if len(big) > 1:
        return NOT_FINITE
    adj: dict[int, list[int]] = {g: [] for g in d.generators}
    for s, t, _ in edges:
        adj[s].append(t)
        adj[t].append(s)
    degrees = {g: len(v) for g, v in adj.items()}
    branch = [g for g, k in degrees.items() if k >= 3]
    if any(degrees[g] > 3 for g in branch) or len(branch) > 1:
        return NOT_FINITE
    if branch:
        if big:
            return NOT_FINITE
        centre = branch[0]
        arms = []
        for start in adj[centre]:
            length, prev, cur = 1, centre, start
            while degrees[cur] == 2:
                prev, cur = cur, next(x for x in adj[cur] if x != prev)
                length += 1
            arms.append(length)
        arms = tuple(sorted(arms))
        if arms[:2] == (1, 1):
            return f"D{nv}"
        return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}.get(arms, NOT_FINITE)
    # a path
    if not big:
        return f"A{nv}"
    end = next(g for g, k in degrees.items() if k == 1)
    path, prev = [end], None
    while len(path) < nv:
        nxt = next(x for x in adj[path[-1]] if x != prev)
        prev = path[-1]
        path.append(nxt)
    s, t, m = big[0]
    pos = min(path.index(s), path.index(t))
    at_end = pos in (0, nv - 2)
    if m == 4:
        if at_end:
            return f"B{nv}"
        return "F4" if nv == 4 else NOT_FINITE
    if m == 5 and at_end and nv in (3, 4):
        return f"H{nv}"
    return NOT_FINITE


def classify_finite_type(d: CoxeterDiagram) -> ClassificationResult:
    comps = []
    for comp in d.components():
        comps.append((comp, _classify_component(d.restrict(comp))))
    return ClassificationResult(tuple(comps))


def abelianization_rank(d: CoxeterDiagram) -> tuple[int, tuple[int, ...]]:
    """H_1 of the Artin group: free of rank = number of odd-edge components.

    A relation with odd finite label identifies its two generators after
    abelianizing, and an even or infinite label imposes nothing, so the
    torsion part is always empty.
    """
    comps = d.components(lambda m: m is not INFINITY and m % 2 == 1)
    return len(comps), ()
