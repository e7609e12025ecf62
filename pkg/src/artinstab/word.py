"""Positive words in an Artin monoid.

Every relation pi(s, t; m) = pi(t, s; m) preserves length, so the
equivalence class of a word is finite and can be found by breadth-first
closure under single rewrites.  An element is stored as the lexicographically
least word of its class (all members have the same length, so this is the
shortlex-least word); equality of elements is equality of these words.

The closure is memoised per diagram: once a class has been computed, every
member maps to the same canonical word.  Each process keeps its own cache.
"""

from __future__ import annotations

import dataclasses
import functools
from collections import deque
from typing import Iterable, Sequence

from .diagram import INFINITY, CoxeterDiagram
from .errors import ClassSizeExceeded

Word = tuple  # tuple[int, ...]

DEFAULT_CLASS_CAP = 100_000
_default_cap = DEFAULT_CLASS_CAP


def set_default_class_cap(cap: int) -> None:
    global _default_cap
    if cap < 1:
        raise ValueError("class cap must be positive")
    _default_cap = cap


def alternating_product(s: int, t: int, k: int) -> Word:
    """pi(s, t; k) = s t s t ... with k letters."""
    if s == t:
        raise ValueError("alternating product needs two distinct generators")
    if k < 0:
        raise ValueError("k must be >= 0")
    return tuple(s if i % 2 == 0 else t for i in range(k))


def parse_word(text: str) -> Word:
    """Read ``121``, ``1.2.1`` or ``e`` (the empty word)."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    if "." in text:
        return tuple(int(tok) for tok in text.split("."))
    if not text.isdigit():
        raise ValueError(f"bad word literal {text!r}")
    return tuple(int(ch) for ch in text)


def format_word(word: Sequence[int]) -> str:
    if not word:
        return "e"
    if all(0 < x < 10 for x in word):
        return "".join(map(str, word))
    return ".".join(map(str, word))


@functools.total_ordering
@dataclasses.dataclass(frozen=True)
class MonoidElement:
    """An element, held as its canonical (shortlex-least) word.

    Build these with ``canonicalize``; the constructor does not check that
    ``canonical`` really is the least word of its class.
    """

    canonical: Word
    length: int = dataclasses.field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "canonical", tuple(self.canonical))
        object.__setattr__(self, "length", len(self.canonical))

    def __lt__(self, other):
        if not isinstance(other, MonoidElement):
            return NotImplemented
        return (self.length, self.canonical) < (other.length, other.canonical)

    def __str__(self):
        return format_word(self.canonical)

    @property
    def letters(self) -> frozenset:
        return frozenset(self.canonical)

    def is_identity(self) -> bool:
        return not self.canonical


IDENTITY = MonoidElement(())


class ArtinMonoid:
    """Word-problem engine for the positive monoid of one diagram."""

    def __init__(self, diagram: CoxeterDiagram, class_cap: int | None = None):
        self.diagram = diagram
        self.class_cap = class_cap or _default_cap
        rules: dict[int, list[tuple[Word, Word]]] = {}
        for s, t, m in diagram.edges():
            if m is INFINITY:
                continue
            for a, b in ((s, t), (t, s)):
                lhs, rhs = alternating_product(a, b, m), alternating_product(b, a, m)
                rules.setdefault(lhs[0], []).append((lhs, rhs))
        # m = 2 pairs are not stored on the diagram; they still commute
        gens = diagram.generators
        for i, s in enumerate(gens):
            for t in gens[i + 1:]:
                if diagram.m(s, t) == 2:
                    rules.setdefault(s, []).append(((s, t), (t, s)))
                    rules.setdefault(t, []).append(((t, s), (s, t)))
        self._rules = rules
        self._canon: dict[Word, Word] = {}
        self._classes: dict[Word, frozenset] = {}
        self._by_length: dict[int, list[MonoidElement]] = {0: [IDENTITY]}

    def _neighbours(self, word: Word):
        rules = self._rules
        n = len(word)
        for i, x in enumerate(word):
            for lhs, rhs in rules.get(x, ()):
                k = len(lhs)
                if i + k <= n and word[i:i + k] == lhs:
                    yield word[:i] + rhs + word[i + k:]

    def _close(self, word: Word) -> frozenset:
        seen = {word}
        todo = deque([word])
        while todo:
            w = todo.popleft()
            for v in self._neighbours(w):
                if v not in seen:
                    seen.add(v)
                    if len(seen) > self.class_cap:
                        raise ClassSizeExceeded(
                            f"class of {format_word(word)} exceeds {self.class_cap} words"
                        )
                    todo.append(v)
        return frozenset(seen)

    def canonical_word(self, word: Iterable[int]) -> Word:
        word = tuple(word)
        canon = self._canon.get(word)
        if canon is None:
            members = self._close(word)
            canon = min(members)
            for w in members:
                self._canon[w] = canon
            self._classes[canon] = members
        return canon

    def equivalence_class(self, word: Iterable[int]) -> frozenset:
        return self._classes[self.canonical_word(word)]

    def element(self, word: Iterable[int]) -> MonoidElement:
        word = tuple(word)
        for x in word:
            if x not in self.diagram.generators:
                raise ValueError(f"letter {x} is not a generator of the diagram")
        return MonoidElement(self.canonical_word(word))

    def members(self, a: MonoidElement) -> frozenset:
        return self.equivalence_class(a.canonical)

    def multiply(self, *factors: MonoidElement) -> MonoidElement:
        word = ()
        for f in factors:
            word += f.canonical
        return MonoidElement(self.canonical_word(word))

    def generator(self, s: int) -> MonoidElement:
        return MonoidElement((s,))

    def elements_of_length(self, length: int) -> list[MonoidElement]:
        """All elements of exactly this length, in shortlex order."""
        for L in range(max(self._by_length) + 1, length + 1):
            found = set()
            for a in self._by_length[L - 1]:
                for s in self.diagram.generators:
                    found.add(self.canonical_word(a.canonical + (s,)))
            self._by_length[L] = [MonoidElement(w) for w in sorted(found)]
        return self._by_length[length]

    def elements(self, max_length: int) -> list[MonoidElement]:
        out = []
        for L in range(max_length + 1):
            out.extend(self.elements_of_length(L))
        return out


@functools.lru_cache(maxsize=None)
def _monoid(d: CoxeterDiagram, cap: int) -> ArtinMonoid:
    return ArtinMonoid(d, cap)


def get_monoid(d: CoxeterDiagram, class_cap: int | None = None) -> ArtinMonoid:
    """Shared engine for ``d`` (one per diagram and cap, per process)."""
    return _monoid(d, class_cap or _default_cap)


def equivalence_class(d: CoxeterDiagram, w: Sequence[int]) -> frozenset:
    return get_monoid(d).equivalence_class(tuple(w))


def canonicalize(d: CoxeterDiagram, w: Sequence[int]) -> MonoidElement:
    return get_monoid(d).element(w)


def multiply(d: CoxeterDiagram, a: MonoidElement, b: MonoidElement) -> MonoidElement:
    return get_monoid(d).multiply(a, b)


def letter_set(d: CoxeterDiagram, a: MonoidElement) -> frozenset:
    return a.letters


def letterwise_commutes(d: CoxeterDiagram, a: MonoidElement, b: MonoidElement) -> bool:
    la, lb = a.letters, b.letters
    if la & lb:
        return False
    return all(d.m(s, t) == 2 for s in la for t in lb)
