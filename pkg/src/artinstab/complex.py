"""The semi-simplicial set C^n and its finite filtration pieces C^n(k).

Level p (0 <= p <= n-1) holds the cosets [a]_{n-p-1} of the submonoid
A_{n-p-1}, each stored as its reduced representative.  The face map

    d_q : [a]_{n-p-1}  ->  [a sigma_{n-p+q} ... sigma_{n-p+1}]_{n-p}

multiplies on the right by a descending tail word (empty for q = 0) and
reduces with respect to the next submonoid.  The chamber of ``a`` is its
top-level cell [a]_0, and C^n(k) is the union of all faces of chambers of
length at most k.

The tail word of d_q always stops at sigma_{n-p+1}; the top face d_p at
level p multiplies by sigma_n ... sigma_{n-p+1}.
"""

from __future__ import annotations

import dataclasses
import functools
import json
from concurrent.futures import ProcessPoolExecutor

from .diagram import ArtinSequence
from .divisibility import strip_reduce
from .errors import CounterexampleFound, ScaleExceeded
from .word import MonoidElement, format_word, get_monoid

DEFAULT_CELL_CAP = 200_000
SCHEMA = 1


@functools.total_ordering
@dataclasses.dataclass(frozen=True)
class SimplexRef:
    level: int
    representative: MonoidElement

    def __lt__(self, other):
        return (self.level, self.representative) < (other.level, other.representative)

    def __str__(self):
        return f"[{self.representative}]@{self.level}"


def _check_level(n, p):
    if n < 1:
        raise ValueError("the complex needs n >= 1")
    if not 0 <= p <= n - 1:
        raise ValueError(f"level {p} outside 0..{n - 1}")


def coset_generators(seq: ArtinSequence, n: int, p: int) -> tuple:
    """Generators of the submonoid whose cosets form level p."""
    _check_level(n, p)
    return seq.sub_generators(n - p - 1)


def face_multiplier(seq: ArtinSequence, n: int, p: int, q: int) -> tuple:
    """sigma_{n-p+q} ... sigma_{n-p+1}, the word applied by d_q at level p."""
    if not 0 <= q <= p:
        raise ValueError(f"face index {q} outside 0..{p}")
    return tuple(seq.sigma(i) for i in range(n - p + q, n - p, -1))


@functools.lru_cache(maxsize=None)
def _cell(seq, n, p, canonical):
    d = seq.diagram(n)
    rep = strip_reduce(d, seq.sub_generators(n - p - 1), MonoidElement(canonical))
    return SimplexRef(p, rep)


def cell_of(seq: ArtinSequence, n: int, p: int, a: MonoidElement) -> SimplexRef:
    """The level-p cell [a]_{n-p-1} for any representative ``a``."""
    _check_level(n, p)
    return _cell(seq, n, p, a.canonical)


def chamber(seq: ArtinSequence, n: int, a: MonoidElement) -> SimplexRef:
    return cell_of(seq, n, n - 1, a)


@functools.lru_cache(maxsize=None)
def _face(seq, n, p, canonical, q):
    mon = get_monoid(seq.diagram(n))
    moved = mon.element(canonical + face_multiplier(seq, n, p, q))
    return _cell(seq, n, p - 1, moved.canonical)


def face(seq: ArtinSequence, n: int, s: SimplexRef, q: int) -> SimplexRef:
    if s.level < 1:
        raise ValueError("vertices have no faces")
    _check_level(n, s.level)
    if not 0 <= q <= s.level:
        raise ValueError(f"face index {q} outside 0..{s.level}")
    return _face(seq, n, s.level, s.representative.canonical, q)


def representative_face(seq: ArtinSequence, n: int, p: int, a: MonoidElement, q: int) -> SimplexRef:
    """d_q applied to [a] using the (possibly unreduced) representative ``a``."""
    mon = get_monoid(seq.diagram(n))
    return cell_of(seq, n, p - 1, mon.element(a.canonical + face_multiplier(seq, n, p, q)))


def normalize_tuple(t) -> tuple:
    """Rewrite a face tuple (in order of application) to nondecreasing form.

    Applying d_j and then d_i with i < j equals applying d_i and then
    d_{j-1}; repeating this swap sorts the tuple.
    """
    t = list(t)
    changed = True
    while changed:
        changed = False
        for m in range(len(t) - 1):
            j, i = t[m], t[m + 1]
            if i < j:
                t[m], t[m + 1] = i, j - 1
                changed = True
    return tuple(t)


def apply_tuple(seq: ArtinSequence, n: int, s: SimplexRef, t) -> SimplexRef:
    for q in t:
        s = face(seq, n, s, q)
    return s


def all_faces(seq: ArtinSequence, n: int, a: MonoidElement) -> dict:
    """Every iterated face of the chamber of ``a``, keyed by one nondecreasing tuple.

    The empty tuple gives the chamber itself.  Where several tuples reach
    the same cell, the first in (length, lexicographic) order is kept.
    """
    top = chamber(seq, n, a)
    found = {top: ()}
    frontier = [(top, (), 0)] if top.level > 0 else []
    while frontier:
        nxt = []
        for cell, t, lo in frontier:
            for q in range(lo, cell.level + 1):
                f = face(seq, n, cell, q)
                if f not in found:
                    found[f] = t + (q,)
                if f.level > 0:
                    nxt.append((f, t + (q,), q))
        frontier = nxt
    return {t: c for c, t in sorted(found.items(), key=lambda kv: (len(kv[1]), kv[1]))}


@dataclasses.dataclass
class FiltrationComplex:
    """C^n(k) with cells ordered by (level, shortlex representative)."""

    n: int
    k: int
    cells: list
    index: dict
    faces: dict          # cell id -> tuple of face ids, q = 0..level
    chambers: dict       # element of length <= k -> its top cell
    witness: dict        # cell -> (chamber element, nondecreasing tuple), minimal tuple sum

    def ids_at(self, level: int) -> list[int]:
        return [i for i, c in enumerate(self.cells) if c.level == level]

    def dims(self) -> list[int]:
        out = [0] * self.n
        for c in self.cells:
            out[c.level] += 1
        return out

    def __contains__(self, cell):
        return cell in self.index

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "k": self.k,
            "cells": [{"level": c.level, "rep": format_word(c.representative.canonical), "id": i}
                      for i, c in enumerate(self.cells)],
            "faces": [[cid, q, fid] for cid in sorted(self.faces) for q, fid in enumerate(self.faces[cid])],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _faces_of_chambers(args):
    seq, n, words = args
    out = []
    for w in words:
        a = MonoidElement(w)
        out.append((a, list(all_faces(seq, n, a).items())))
    return out


def _chunks(items, parts):
    size = max(1, -(-len(items) // parts))
    return [items[i:i + size] for i in range(0, len(items), size)]


def build_filtration(seq: ArtinSequence, n: int, k: int, cell_cap: int = DEFAULT_CELL_CAP,
                     jobs: int = 1) -> FiltrationComplex:
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    mon = get_monoid(seq.diagram(n))
    elems = mon.elements(k)
    words = [a.canonical for a in elems]
    if jobs > 1 and len(words) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_faces_of_chambers, [(seq, n, c) for c in _chunks(words, jobs * 4)])
            results = [r for part in parts for r in part]
    else:
        results = _faces_of_chambers((seq, n, words))
    results.sort(key=lambda r: r[0])

    witness = {}
    chambers = {}
    for a, faces in results:
        chambers[a] = faces[0][1]
        for t, cell in faces:
            key = (sum(t), a, t)
            old = witness.get(cell)
            if old is None or key < (sum(old[1]), old[0], old[1]):
                witness[cell] = (a, t)
            if len(witness) > cell_cap:
                raise ScaleExceeded(f"C^{n}({k}) has more than {cell_cap} cells")
    cells = sorted(witness)
    index = {c: i for i, c in enumerate(cells)}
    incidence = {}
    for i, c in enumerate(cells):
        if c.level == 0:
            continue
        ids = []
        for q in range(c.level + 1):
            f = face(seq, n, c, q)
            if f not in index:
                raise CounterexampleFound("filtration not closed under faces",
                                          {"cell": str(c), "q": q, "face": str(f)})
            ids.append(index[f])
        incidence[i] = tuple(ids)
    return FiltrationComplex(n, k, cells, index, incidence, chambers, witness)


@dataclasses.dataclass
class IdentityCheck:
    n: int
    max_len: int
    cells: int
    checked: int
    passed: bool = True

    def to_dict(self):
        return dataclasses.asdict(self)


def check_simplicial_identities(seq: ArtinSequence, n: int, max_len: int) -> IdentityCheck:
    """d_i d_j = d_{j-1} d_i (i < j) on every cell with a representative of length <= max_len."""
    mon = get_monoid(seq.diagram(n))
    cells = set()
    for a in mon.elements(max_len):
        for p in range(n):
            cells.add(cell_of(seq, n, p, a))
    checked = 0
    for s in sorted(cells):
        p = s.level
        if p < 2:
            continue
        for j in range(1, p + 1):
            for i in range(j):
                lhs = face(seq, n, face(seq, n, s, j), i)
                rhs = face(seq, n, face(seq, n, s, i), j - 1)
                if lhs != rhs:
                    raise CounterexampleFound("simplicial identity fails", {
                        "n": n, "cell": str(s), "i": i, "j": j, "lhs": str(lhs), "rhs": str(rhs)})
                checked += 1
    return IdentityCheck(n, max_len, len(cells), checked)
