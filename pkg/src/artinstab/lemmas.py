"""Brute-force checks of the descending-word identities used by the shelling proof.

For a face tuple with entries i_j the face word at step j is
``a_j = sigma_{i_j - 1 + j} ... sigma_j`` (the identity when i_j = 0).  The
identities below relate products and least common multiples of such
words.  Each one is instantiated for every parameter choice within the
given bounds and checked with ``multiply`` (equality of elements) and the
breadth-first ``lcm_pair`` search, never with the identity being tested.
"""

from __future__ import annotations

import dataclasses
import itertools

from .diagram import ArtinSequence
from .divisibility import lcm_pair
from .errors import CounterexampleFound
from .word import MonoidElement, format_word, get_monoid, letterwise_commutes


def descending(seq: ArtinSequence, top: int, bottom: int) -> tuple:
    """sigma_top sigma_{top-1} ... sigma_bottom (empty when top < bottom)."""
    return tuple(seq.sigma(i) for i in range(top, bottom - 1, -1))


def face_word(seq: ArtinSequence, j: int, i: int) -> tuple:
    """a_j for entry i: sigma_{i-1+j} ... sigma_j."""
    return descending(seq, i - 1 + j, j)


def nondecreasing(length: int, max_i: int):
    return itertools.combinations_with_replacement(range(max_i + 1), length)


@dataclasses.dataclass
class IdentityReport:
    max_i: int
    max_j: int
    checked: dict = dataclasses.field(default_factory=dict)
    passed: bool = True

    def to_dict(self):
        return dataclasses.asdict(self)


class _Checker:
    def __init__(self, seq: ArtinSequence, n: int, cap: int):
        self.seq = seq
        self.d = seq.diagram(n)
        self.mon = get_monoid(self.d)
        self.cap = cap

    def el(self, *words) -> MonoidElement:
        return self.mon.element(sum(words, ()))

    def equal(self, name, lhs, rhs, params):
        a, b = self.el(lhs), self.el(rhs)
        if a != b:
            raise CounterexampleFound(f"{name}: sides differ", {
                "identity": name, "params": params,
                "lhs": format_word(lhs), "rhs": format_word(rhs)})

    def lcm(self, name, x, y, expected, params):
        a, b = self.el(x), self.el(y)
        alphabet = a.letters | b.letters or {self.seq.sigma(1)}
        got = lcm_pair(self.d, a, b, cap=self.cap, alphabet=alphabet)
        want = self.el(expected)
        if got != want:
            raise CounterexampleFound(f"{name}: lcm mismatch", {
                "identity": name, "params": params, "a": format_word(x), "b": format_word(y),
                "expected": str(want), "found": str(got) if isinstance(got, MonoidElement) else got.value})

    def commute(self, name, x, y, params):
        if x and y and not letterwise_commutes(self.d, self.el(x), self.el(y)):
            raise CounterexampleFound(f"{name}: words do not letterwise commute", {
                "identity": name, "params": params, "a": format_word(x), "b": format_word(y)})


def _sigma_manipulation(ck, seq, max_i, max_j):
    count = 0
    for j in range(1, max_j + 1):
        for k in range(j + 1, j + max_i + 1):
            lhs = descending(seq, k, j + 1) + (seq.sigma(j),) + descending(seq, k, j + 1)
            rhs = ()
            for r in range(k - 1, j, -1):
                rhs += (seq.sigma(r), seq.sigma(r + 1))
            rhs += (seq.sigma(j), seq.sigma(j + 1), seq.sigma(j))
            ck.equal("sigma_manipulation", lhs, rhs, {"j": j, "k": k})
            count += 1
    return count


def _lcm_face_sigma(ck, seq, max_i, max_j):
    count = 0
    for j in range(1, max_j + 1):
        s = (seq.sigma(j),)
        for i in range(max_i + 1):
            a = face_word(seq, j + 1, i)
            ck.lcm("lcm_face_sigma", a, s, a + s + a, {"j": j, "i_next": i})
            count += 1
    return count


def _hat(ck, seq, max_i, max_j):
    count = 0
    for j in range(1, max_j + 1):
        s = (seq.sigma(j),)
        # for j = 1 the entry before a_2 is a_1 = e or a_1 = sigma_1
        prefixes = [(i1,) for i1 in (0, 1)] if j == 1 else list(nondecreasing(j - 1, max_i))
        for head in prefixes:
            i_j = head[-1]
            for i_next in range(i_j, max_i + 1):
                a_next = face_word(seq, j + 1, i_next)
                a_j = face_word(seq, j, i_j)
                hat = descending(seq, i_next + j - 1, i_j + j)
                params = {"j": j, "i": list(head) + [i_next]}
                ck.equal("hat", a_next + s + a_next, hat + a_j + a_next + s, params)
                if j >= 2:
                    earlier = sum((face_word(seq, m, i) for m, i in zip(range(2, j), head[:-1])), ())
                    ck.commute("hat_commutes", hat, earlier, params)
                count += 1
    return count


def _bar(ck, seq, max_i, max_j):
    count = 0
    for j in range(2, max_j + 1):
        s = (seq.sigma(j),)
        for head in nondecreasing(j - 1, max_i):
            i_j = head[-1]
            if i_j == 0:
                continue
            for i_next in range(i_j, max_i + 1):
                a_next = face_word(seq, j + 1, i_next)
                a_j = face_word(seq, j, i_j)
                bar = descending(seq, i_next + j, i_j + j)
                params = {"j": j, "i": list(head) + [i_next]}
                if not bar:
                    raise CounterexampleFound("bar: empty quotient", {"identity": "bar", "params": params})
                ck.equal("bar", a_next + s, bar + a_j, params)
                ck.equal("bar_is_face", a_next + s, face_word(seq, j, i_next + 1), params)
                earlier = sum((face_word(seq, m, i) for m, i in zip(range(2, j), head[:-1])), ())
                ck.commute("bar_commutes", bar, earlier, params)
                count += 1
    return count


def c_words(seq, ii, ll):
    """(c, a', b') for face tuples ii, ll indexed from j = 2."""
    c = a_p = b_p = ()
    for j, (i, l) in enumerate(zip(ii, ll), 2):
        if i >= l:
            c += face_word(seq, j, i)
            b_p += descending(seq, i + j - 1, l + j)
        else:
            c += face_word(seq, j, l)
            a_p += descending(seq, l + j - 1, i + j)
    return c, a_p, b_p


def _c_is_lcm(ck, seq, max_i, max_j):
    count = 0
    for p in range(1, max_j):
        for ii in nondecreasing(p, max_i):
            for ll in nondecreasing(p, max_i):
                a = sum((face_word(seq, j, i) for j, i in enumerate(ii, 2)), ())
                b = sum((face_word(seq, j, l) for j, l in enumerate(ll, 2)), ())
                c, a_p, b_p = c_words(seq, ii, ll)
                params = {"i": list(ii), "l": list(ll)}
                ck.equal("c_eq_a'a", c, a_p + a, params)
                ck.equal("c_eq_b'b", c, b_p + b, params)
                ck.lcm("c_is_lcm", a, b, c, params)
                count += 1
    return count


IDENTITIES = {
    "sigma_manipulation": _sigma_manipulation,
    "lcm_face_sigma": _lcm_face_sigma,
    "hat": _hat,
    "bar": _bar,
    "c_is_lcm": _c_is_lcm,
}


def verify_divisor_identities(seq: ArtinSequence | None = None, max_i: int = 4, max_j: int = 3,
                              which=None, cap: int | None = None) -> IdentityReport:
    """Check every identity for 0 <= i_j, l_j <= max_i and j <= max_j.

    Raises ``CounterexampleFound`` on the first failing instance.
    """
    seq = seq or ArtinSequence()
    n = max_i + max_j + 1
    ck = _Checker(seq, n, cap if cap is not None else 4 * (max_i + 1) * max_j + 4)
    report = IdentityReport(max_i, max_j)
    for name, fn in IDENTITIES.items():
        if which is None or name in which:
            report.checked[name] = fn(ck, seq, max_i, max_j)
    return report
