"""Right divisibility, end sets, least common multiples and coset reduction.

``b`` right-divides ``a`` when ``a = g b`` for some positive ``g``; by
cancellation the quotient ``g`` is unique.  For a parabolic submonoid M+
given by a generator subset, ``reduce`` splits ``a`` as ``a = r t`` with
``t`` the lcm of all nontrivial right divisors of ``a`` lying in M+ and
``r`` having no such divisor.  The reduced elements index the cosets.
"""

from __future__ import annotations

import dataclasses
import enum
import functools
from collections import Counter
from typing import Iterable

from .diagram import INFINITY, CoxeterDiagram
from .errors import CounterexampleFound, MaximumNotUnique
from .word import IDENTITY, MonoidElement, format_word, get_monoid

Gens = frozenset


def _gens(sub: Iterable[int]) -> frozenset:
    return frozenset(sub)


def right_quotient(d: CoxeterDiagram, a: MonoidElement, b: MonoidElement) -> MonoidElement | None:
    """The ``g`` with ``a = g b``, or None when ``b`` does not right-divide ``a``."""
    if b.length > a.length:
        return None
    mon = get_monoid(d)
    if b.length == 0:
        return a
    target = mon.members(b)
    cut = a.length - b.length
    for w in mon.members(a):
        if w[cut:] in target:
            return mon.element(w[:cut])
    return None


def right_divides(d: CoxeterDiagram, b: MonoidElement, a: MonoidElement) -> bool:
    return right_quotient(d, a, b) is not None


@dataclasses.dataclass(frozen=True)
class DivisorPoset:
    target: MonoidElement
    divisors: dict  # right divisor -> left quotient

    def __contains__(self, b):
        return b in self.divisors

    def __iter__(self):
        return iter(sorted(self.divisors))

    def __len__(self):
        return len(self.divisors)


@functools.lru_cache(maxsize=200_000)
def _divisors(d: CoxeterDiagram, canonical: tuple) -> dict:
    mon = get_monoid(d)
    out = {}
    for w in mon.equivalence_class(canonical):
        for cut in range(len(w) + 1):
            div = mon.canonical_word(w[cut:])
            if div not in out:
                out[div] = mon.canonical_word(w[:cut])
    return {MonoidElement(k): MonoidElement(v) for k, v in out.items()}


def divisor_poset(d: CoxeterDiagram, a: MonoidElement) -> DivisorPoset:
    """Every right divisor of ``a`` with its quotient, from all suffixes of all representatives."""
    return DivisorPoset(a, _divisors(d, a.canonical))


def end_letters(d: CoxeterDiagram, a: MonoidElement) -> frozenset:
    """Last letters over all representatives of ``a``."""
    if a.length == 0:
        return frozenset()
    return frozenset(w[-1] for w in get_monoid(d).members(a))


def end_gen(d: CoxeterDiagram, sub: Iterable[int], a: MonoidElement) -> frozenset:
    return end_letters(d, a) & _gens(sub)


def end_mon(d: CoxeterDiagram, sub: Iterable[int], a: MonoidElement) -> frozenset:
    """Nontrivial right divisors of ``a`` all of whose letters lie in ``sub``."""
    sub = _gens(sub)
    return frozenset(
        b for b in divisor_poset(d, a).divisors if b.length and b.letters <= sub
    )


def lcm_of_end_mon(d: CoxeterDiagram, sub: Iterable[int], a: MonoidElement) -> MonoidElement:
    ends = end_mon(d, sub, a)
    if not ends:
        return IDENTITY
    top = max(ends)
    if any(b.length == top.length and b != top for b in ends):
        raise MaximumNotUnique(f"two maximal end divisors of {a}")
    for b in ends:
        if not right_divides(d, b, top):
            raise MaximumNotUnique(f"{b} does not right-divide {top} for {a}")
    return top


class Lcm(enum.Enum):
    NO_COMMON_MULTIPLE = "no common multiple"
    UNDETERMINED = "undetermined"


def lcm_pair(d: CoxeterDiagram, a: MonoidElement, b: MonoidElement, cap: int | None = None,
             alphabet: Iterable[int] | None = None):
    """Least common left-multiple by breadth-first search over ``g a``.

    Returns the element, ``Lcm.NO_COMMON_MULTIPLE`` when a last letter of
    ``a`` and a last letter of ``b`` have ``m = inf`` (those two letters
    then have no common multiple, so neither do ``a`` and ``b``), or
    ``Lcm.UNDETERMINED`` when the search reaches ``cap`` without a hit.

    ``alphabet`` restricts the left factors ``g`` to the given letters; any
    superset of the letters of ``a`` and ``b`` is enough, since an lcm only
    involves letters of its arguments.
    """
    if cap is None:
        cap = a.length + b.length + 8
    if cap < max(a.length, b.length):
        raise ValueError("cap below the longer argument")
    for s in end_letters(d, a):
        for t in end_letters(d, b):
            if d.m(s, t) is INFINITY:
                return Lcm.NO_COMMON_MULTIPLE
    if alphabet is None:
        mon = get_monoid(d)
    else:
        mon = get_monoid(d.restrict(set(alphabet)))
    full = get_monoid(d)
    for total in range(max(a.length, b.length), cap + 1):
        for g in mon.elements_of_length(total - a.length):
            x = full.multiply(g, a)
            if right_divides(d, b, x):
                return x
    return Lcm.UNDETERMINED


def lcm_set(d: CoxeterDiagram, elems: Iterable[MonoidElement], cap: int | None = None):
    """lcm of a finite set by folding ``lcm_pair``; the empty set gives the identity."""
    out = IDENTITY
    for e in elems:
        out = lcm_pair(d, out, e, cap=cap if cap is None else max(cap, out.length, e.length))
        if not isinstance(out, MonoidElement):
            return out
    return out


@dataclasses.dataclass(frozen=True)
class Reduction:
    original: MonoidElement
    reduced: MonoidElement
    tail: MonoidElement
    submonoid: frozenset


def reduce(d: CoxeterDiagram, sub: Iterable[int], a: MonoidElement) -> Reduction:
    sub = _gens(sub)
    tail = lcm_of_end_mon(d, sub, a)
    reduced = divisor_poset(d, a).divisors[tail]
    return Reduction(a, reduced, tail, sub)


def strip_reduce(d: CoxeterDiagram, sub: Iterable[int], a: MonoidElement) -> MonoidElement:
    """The reduced element, by repeatedly removing a last letter in ``sub``.

    Whatever order the letters come off in, the result has no right
    divisor in the submonoid and differs from ``a`` by a submonoid factor,
    so it is the same element ``reduce`` returns.
    """
    sub = _gens(sub)
    mon = get_monoid(d)
    word = a.canonical
    while word:
        for w in mon.equivalence_class(word):
            if w[-1] in sub:
                word = mon.canonical_word(w[:-1])
                break
        else:
            break
    return MonoidElement(word)


def coset_equal(d: CoxeterDiagram, sub: Iterable[int], a: MonoidElement, b: MonoidElement) -> bool:
    return reduce(d, sub, a).reduced == reduce(d, sub, b).reduced


def is_reduced(d: CoxeterDiagram, sub: Iterable[int], a: MonoidElement) -> bool:
    # end_mon is empty exactly when no last letter lies in sub
    return not end_gen(d, sub, a)


def coset_set(d: CoxeterDiagram, sub: Iterable[int], max_len: int) -> list[MonoidElement]:
    """Reduced elements of length <= max_len, in shortlex order."""
    sub = _gens(sub)
    return [a for a in get_monoid(d).elements(max_len) if is_reduced(d, sub, a)]


def _counts(elems, max_len):
    c = Counter(e.length for e in elems)
    return [c.get(L, 0) for L in range(max_len + 1)]


def _convolve(xs, ys, max_len):
    return [sum(xs[i] * ys[L - i] for i in range(L + 1)) for L in range(max_len + 1)]


@dataclasses.dataclass
class DecompositionReport:
    max_len: int
    submonoid: list
    total_counts: list
    coset_counts: list
    submonoid_counts: list
    passed: bool = True

    def to_dict(self):
        return dataclasses.asdict(self)


def verify_decomposition(d: CoxeterDiagram, sub: Iterable[int], max_len: int) -> DecompositionReport:
    """Check that a -> (reduced, tail) is a bijection onto A+(M) x M+ up to max_len."""
    sub = _gens(sub)
    mon = get_monoid(d)
    everything = mon.elements(max_len)
    cosets = coset_set(d, sub, max_len)
    sub_elems = get_monoid(d.restrict(sub)).elements(max_len)
    seen = {}
    for a in everything:
        r = reduce(d, sub, a)
        if mon.multiply(r.reduced, r.tail) != a or not r.tail.letters <= sub:
            raise CounterexampleFound("reduction does not factor the element",
                                      {"element": str(a), "reduced": str(r.reduced), "tail": str(r.tail)})
        if not is_reduced(d, sub, r.reduced):
            raise CounterexampleFound("reduced element has an end divisor in the submonoid",
                                      {"element": str(a), "reduced": str(r.reduced)})
        key = (r.reduced, r.tail)
        if key in seen:
            raise CounterexampleFound("two elements share a decomposition",
                                      {"element": str(a), "other": str(seen[key])})
        seen[key] = a
    for g in cosets:
        for m in sub_elems:
            if g.length + m.length > max_len:
                continue
            r = reduce(d, sub, mon.multiply(g, m))
            if (r.reduced, r.tail) != (g, m):
                raise CounterexampleFound("pair not hit by its product",
                                          {"reduced": str(g), "tail": str(m)})
    total = _counts(everything, max_len)
    ccount = _counts(cosets, max_len)
    mcount = _counts(sub_elems, max_len)
    if total != _convolve(ccount, mcount, max_len):
        raise CounterexampleFound("element counts are not the convolution of coset and submonoid counts",
                                  {"total": total, "cosets": ccount, "submonoid": mcount})
    return DecompositionReport(max_len, sorted(sub), total, ccount, mcount)


def verify_reduction_stability(d: CoxeterDiagram, sub: Iterable[int], max_len: int) -> int:
    """reduce(a m) == reduce(a) for all a, m in M+ with total length <= max_len.

    Returns the number of pairs checked.
    """
    sub = _gens(sub)
    mon = get_monoid(d)
    sub_elems = get_monoid(d.restrict(sub)).elements(max_len)
    checked = 0
    for a in mon.elements(max_len):
        bar = reduce(d, sub, a).reduced
        for m in sub_elems:
            if a.length + m.length > max_len:
                break
            am = mon.multiply(a, m)
            if reduce(d, sub, am).reduced != bar:
                raise CounterexampleFound("reduction changed under right multiplication by the submonoid",
                                          {"element": str(a), "factor": str(m)})
            checked += 1
    return checked


def verify_coset_bijection(d: CoxeterDiagram, sub: Iterable[int], max_len: int) -> int:
    """Classes of the relation a ~ a s (s in sub) coincide with equal reductions.

    The classes are computed by union-find on elements of length <= max_len,
    independently of any divisibility computation.  Returns the class count.
    """
    sub = _gens(sub)
    mon = get_monoid(d)
    elems = mon.elements(max_len)
    parent = {a: a for a in elems}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in elems:
        if a.length == max_len:
            continue
        for s in sorted(sub):
            b = mon.multiply(a, mon.generator(s))
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    by_root: dict = {}
    for a in elems:
        by_root.setdefault(find(a), set()).add(reduce(d, sub, a).reduced)
    by_bar: dict = {}
    for root, bars in by_root.items():
        if len(bars) != 1:
            raise CounterexampleFound("one coset class has several reductions",
                                      {"class_root": str(root), "reductions": sorted(map(str, bars))})
        (bar,) = bars
        if bar in by_bar:
            raise CounterexampleFound("two coset classes share a reduction",
                                      {"reduction": str(bar)})
        by_bar[bar] = root
    return len(by_root)


def format_elements(elems) -> list[str]:
    return [format_word(e.canonical) for e in elems]
