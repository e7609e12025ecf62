"""Acceptance criteria, one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are repeated in
the terminal summary under "acceptance criteria".
"""

import itertools
import time

from artinstab import cli
from artinstab.complex import build_filtration, check_simplicial_identities
from artinstab.diagram import CoxeterDiagram, abelianization_rank
from artinstab.divisibility import (verify_coset_bijection, verify_decomposition,
                                    verify_reduction_stability)
from artinstab.homology import (chain_complex, connectivity_check, euler_characteristic,
                                reduced_homology)
from artinstab.lemmas import verify_divisor_identities
from artinstab.shelling import shelling_report
from artinstab.word import canonicalize, get_monoid

from oracles import abelianization_by_snf, all_words, naive_class


def test_1_word_problem_oracle(criterion):
    with criterion(1, "canonical equality agrees with class intersection") as c:
        start = time.perf_counter()
        pairs = 0
        for n, max_len in ((3, 5), (4, 4)):
            d = CoxeterDiagram.braid(n)
            words = all_words(d.generators, max_len)
            classes = {w: naive_class(d, w) for w in words}
            canon = {w: canonicalize(d, w) for w in words}
            for u, v in itertools.product(words, repeat=2):
                assert (canon[u] == canon[v]) == bool(classes[u] & classes[v])
                pairs += 1
        assert time.perf_counter() - start < 60
        c.detail = f"[{pairs} pairs]"


def test_2_cancellation(criterion):
    with criterion(2, "left and right cancellation in B3+ up to length 4") as c:
        d = CoxeterDiagram.braid(3)
        mon = get_monoid(d)
        elems = mon.elements(4)
        left, right = {}, {}
        for a, b in itertools.product(elems, repeat=2):
            left.setdefault((a, mon.multiply(a, b)), set()).add(b)
            right.setdefault((a, mon.multiply(b, a)), set()).add(b)
        violations = [k for k, v in itertools.chain(left.items(), right.items()) if len(v) > 1]
        assert violations == []
        c.detail = f"[{len(elems) ** 2} products]"


def test_3_coset_theory(criterion, b_seq):
    with criterion(3, "reduction stability, coset bijection and decomposition") as c:
        start = time.perf_counter()
        runs = 0
        for d, max_len in ((CoxeterDiagram.braid(3), 6), (CoxeterDiagram.braid(4), 4), (b_seq.diagram(2), 6)):
            gens = d.generators
            for r in range(len(gens) + 1):
                for sub in itertools.combinations(gens, r):
                    assert verify_decomposition(d, sub, max_len).passed
                    verify_reduction_stability(d, sub, max_len)
                    verify_coset_bijection(d, sub, max_len)
                    runs += 1
        assert time.perf_counter() - start < 300
        c.detail = f"[{runs} submonoids]"


def test_4_lcm_lemmas(criterion, braid_seq):
    with criterion(4, "descending-word lcm identities, i <= 4, j <= 3") as c:
        rep = verify_divisor_identities(braid_seq, max_i=4, max_j=3)
        assert rep.passed
        c.detail = str(rep.checked)


def test_5_simplicial_identities(criterion, braid_seq):
    with criterion(5, "simplicial identities for n = 2, 3, 4, length <= 3") as c:
        checked = 0
        for n in (2, 3, 4):
            rep = check_simplicial_identities(braid_seq, n, 3)
            assert rep.passed
            checked += rep.checked
        c.detail = f"[{checked} identities]"


SHELLING_CONFIGS = (("braid_seq", 2, 4), ("braid_seq", 3, 3), ("braid_seq", 4, 2), ("b_seq", 2, 3))


def test_6_shelling_points(criterion, request):
    with criterion(6, "points (A) and (B) on every configuration") as c:
        start = time.perf_counter()
        total = 0
        for name, n, k in SHELLING_CONFIGS:
            rep = shelling_report(request.getfixturevalue(name), n, k + 1)
            assert rep.passed and rep.point_A["passed"] and rep.point_B["passed"]
            total += rep.point_A["checked"]
        assert time.perf_counter() - start < 600
        c.detail = f"[{total} chambers]"


def test_7_connectivity(criterion, request):
    with criterion(7, "connectivity, boundary squared and Euler characteristic") as c:
        fixtures = 0
        for name, n, k_max in SHELLING_CONFIGS:
            seq = request.getfixturevalue(name)
            for k in range(k_max + 2):
                fc = build_filtration(seq, n, k)
                connectivity_check(fc)
                cc = chain_complex(fc)  # raises if a boundary composite is nonzero
                betti = reduced_homology(cc).betti()
                assert euler_characteristic(cc.dims) - 1 == sum((-1) ** i * b for i, b in enumerate(betti))
                fixtures += 1
        c.detail = f"[{fixtures} complexes]"


def test_8_h1_table(criterion, braid_seq, b_seq, d_seq):
    with criterion(8, "H1 rank constant from n = 2 (empty 1, B 2, D 1)") as c:
        rows = {}
        for name, seq, want in (("empty", braid_seq, 1), ("B", b_seq, 2), ("D", d_seq, 1)):
            ranks = []
            for n in range(2, 8):
                d = seq.diagram(n)
                got = abelianization_rank(d)
                assert got == abelianization_by_snf(d)
                ranks.append(got[0])
            assert ranks == [want] * len(ranks)
            rows[name] = ranks[0]
        c.detail = str(rows)


def test_9_determinism(criterion, tmp_path):
    with criterion(9, "verify JSON identical for --jobs 1 and --jobs 8"):
        paths = []
        for jobs in (1, 8):
            path = tmp_path / f"jobs{jobs}.json"
            code = cli.main(["verify", "--n-range", "2..3", "--max-len", "3", "--jobs", str(jobs),
                             "--json", str(path)])
            assert code == 0
            paths.append(path)
        assert paths[0].read_bytes() == paths[1].read_bytes()
