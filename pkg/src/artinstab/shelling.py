"""Exhaustive checks that C^n(k+1) is built from C^n(k) by attaching chambers well.

Point (A): for each a of length k+1, the chamber [[a]]_0 meets C^n(k) in a
non-empty union of facets.  Point (B): two distinct new chambers meet only
inside C^n(k).  Membership is decided against the cell index of the built
complex; the minimal witnesses stored on the complex are used only to label
which branch of the case analysis each face falls under.

A chamber attaching along all n facets adds one (n-1)-sphere; one attaching
along some facets changes nothing up to homotopy.  Both counts are reported
per stage.
"""

from __future__ import annotations

import dataclasses
import json
from collections import Counter

from .complex import (DEFAULT_CELL_CAP, SCHEMA, FiltrationComplex, all_faces, build_filtration,
                      face)
from .diagram import ArtinSequence
from .divisibility import end_gen
from .errors import CounterexampleFound
from .word import MonoidElement, get_monoid

CASE_LABELS = ("endgen", "i", "ii", "iii", "outside")


@dataclasses.dataclass
class PointReport:
    n: int
    k: int
    checked: int = 0
    passed: bool = True
    status: str = "pass"
    witnesses: dict = dataclasses.field(default_factory=dict)  # chamber -> facet indices in C^n(k)
    cases: dict = dataclasses.field(default_factory=dict)
    spheres: int = 0
    partial: int = 0
    absorbed: int = 0

    def summary(self) -> dict:
        return {"checked": self.checked, "passed": self.passed}


def _closure(seq, n, cell) -> set:
    out = {cell}
    todo = [cell]
    while todo:
        c = todo.pop()
        if c.level == 0:
            continue
        for q in range(c.level + 1):
            f = face(seq, n, c, q)
            if f not in out:
                out.add(f)
                todo.append(f)
    return out


def _face_product(seq, n, a: MonoidElement, t) -> MonoidElement:
    """The unreduced product a * a_2 ... a_{p+1} for a face tuple t."""
    word = a.canonical
    for j, i in enumerate(t, 2):
        word += tuple(seq.sigma(m) for m in range(i + j - 1, j - 1, -1))
    return get_monoid(seq.diagram(n)).element(word)


def classify_face(seq: ArtinSequence, n: int, fc: FiltrationComplex, a: MonoidElement, t, cell) -> str:
    """Which branch of the point (A) argument covers the face [[a a]]_p."""
    p = len(t)
    aa = _face_product(seq, n, a, t)
    if end_gen(seq.diagram(n), seq.sub_generators(p), aa):
        return "endgen"
    if cell not in fc:
        return "outside"
    beta, tb = fc.witness[cell]
    lhs, rhs = beta.length + sum(tb), aa.length
    if lhs < rhs:
        return "i"
    return "ii" if lhs == rhs else "iii"


def _new_chambers(seq, n, k):
    return get_monoid(seq.diagram(n)).elements_of_length(k + 1)


def _degenerate(n, k, fc) -> PointReport:
    if not fc.cells:
        raise CounterexampleFound("C^1(k) is empty", {"n": n, "k": k})
    return PointReport(n, k, checked=0, status="degenerate")


def verify_point_A(seq: ArtinSequence, n: int, k: int, fc: FiltrationComplex | None = None,
                   cell_cap: int = DEFAULT_CELL_CAP, jobs: int = 1) -> PointReport:
    """[[a]]_0 meets C^n(k) in a non-empty union of facets, for every a of length k+1.

    A chamber whose top cell already lies in C^n(k) (possible when the seed
    contributes generators that commute with the tail) is counted as
    absorbed: its intersection with C^n(k) is the whole chamber.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    fc = fc or build_filtration(seq, n, k, cell_cap=cell_cap, jobs=jobs)
    if n == 1:
        return _degenerate(n, k, fc)
    report = PointReport(n, k)
    cases = Counter({label: 0 for label in CASE_LABELS})
    for a in _new_chambers(seq, n, k):
        faces = all_faces(seq, n, a)
        top = faces[()]
        report.checked += 1
        if top in fc:
            report.absorbed += 1
            report.witnesses[str(a)] = "absorbed"
            continue
        facets = [face(seq, n, top, q) for q in range(n)]
        present = [q for q, f in enumerate(facets) if f in fc]
        if not present:
            raise CounterexampleFound("new chamber meets the previous stage in no facet", {
                "point": "A", "n": n, "k": k, "alpha": str(a), "facets": [str(f) for f in facets]})
        covered = set()
        for q in present:
            covered |= _closure(seq, n, facets[q])
        for t, cell in faces.items():
            if not t:
                continue
            cases[classify_face(seq, n, fc, a, t, cell)] += 1
            if cell in fc and cell not in covered:
                raise CounterexampleFound("face in the previous stage lies in no facet there", {
                    "point": "A", "n": n, "k": k, "alpha": str(a), "tuple": list(t), "cell": str(cell),
                    "facets_present": present})
        report.witnesses[str(a)] = present
        if len(present) == n:
            report.spheres += 1
        else:
            report.partial += 1
    report.cases = dict(cases)
    return report


def verify_point_B(seq: ArtinSequence, n: int, k: int, fc: FiltrationComplex | None = None,
                   cell_cap: int = DEFAULT_CELL_CAP, jobs: int = 1) -> PointReport:
    """Distinct chambers of length k+1 share no cell outside C^n(k).

    Rather than intersecting face sets pair by pair, each cell outside
    C^n(k) is mapped to the chambers containing it; any cell with two
    owners is a failing pair.  ``checked`` is the number of pairs covered.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    fc = fc or build_filtration(seq, n, k, cell_cap=cell_cap, jobs=jobs)
    if n == 1:
        return _degenerate(n, k, fc)
    new = _new_chambers(seq, n, k)
    owner = {}
    for a in new:
        for t, cell in all_faces(seq, n, a).items():
            if cell in fc:
                continue
            prev = owner.setdefault(cell, a)
            if prev != a:
                raise CounterexampleFound("two new chambers share a cell outside the previous stage", {
                    "point": "B", "n": n, "k": k, "alpha": str(prev), "beta": str(a), "cell": str(cell)})
    m = len(new)
    return PointReport(n, k, checked=m * (m - 1) // 2)


@dataclasses.dataclass
class ShellingReport:
    n: int
    stage: int
    point_A: dict
    point_B: dict
    spheres_attached: list
    partial_attached: list
    absorbed: list
    cases: dict
    status: str = "pass"
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> dict:
        out = {"schema": SCHEMA}
        out.update(dataclasses.asdict(self))
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def shelling_report(seq: ArtinSequence, n: int, k_max: int, cell_cap: int = DEFAULT_CELL_CAP,
                    jobs: int = 1, raise_on_failure: bool = True) -> ShellingReport:
    """Points (A) and (B) for every stage k with 1 <= k+1 <= k_max.

    With ``raise_on_failure=False`` a counterexample is recorded on the
    report instead of propagating.
    """
    rep = ShellingReport(n, k_max, {"checked": 0, "passed": True}, {"checked": 0, "passed": True},
                         [], [], [], dict.fromkeys(CASE_LABELS, 0))
    if n == 1:
        fc = build_filtration(seq, n, max(k_max - 1, 0), cell_cap=cell_cap, jobs=jobs)
        _degenerate(n, fc.k, fc)
        rep.status = "degenerate"
        return rep
    try:
        for k in range(k_max):
            fc = build_filtration(seq, n, k, cell_cap=cell_cap, jobs=jobs)
            a = verify_point_A(seq, n, k, fc)
            rep.point_A["checked"] += a.checked
            rep.spheres_attached.append(a.spheres)
            rep.partial_attached.append(a.partial)
            rep.absorbed.append(a.absorbed)
            for label, c in a.cases.items():
                rep.cases[label] += c
            b = verify_point_B(seq, n, k, fc)
            rep.point_B["checked"] += b.checked
    except CounterexampleFound as exc:
        if raise_on_failure:
            raise
        rep.status = "fail"
        failing = rep.point_B if exc.context.get("point") == "B" else rep.point_A
        failing["passed"] = False
        rep.counterexample = dict(exc.context)
    return rep
