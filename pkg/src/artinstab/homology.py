"""Integer homology of finite semi-simplicial sets via Smith normal form.

The boundary of a p-cell is sum_q (-1)^q [d_q cell].  All arithmetic uses
Python integers, so nothing overflows.  Homology over any field follows
from the integral answer by universal coefficients and is not computed
separately.
"""

from __future__ import annotations

import dataclasses
import math

from .errors import BoundarySquareNonzero, CounterexampleFound


# -- Smith normal form ---------------------------------------------------

def _as_rows(M) -> dict:
    rows = {}
    for i, row in enumerate(M):
        r = {j: int(v) for j, v in enumerate(row) if v}
        if r:
            rows[i] = r
    return rows


def _diagonal(rows: dict) -> list[int]:
    """Diagonal entries of a diagonalisation of a sparse integer matrix.

    ``rows`` maps row -> {col: value} and is consumed.  Row operations clear
    the pivot column, then column operations clear the pivot row; a
    remainder that the pivot does not divide becomes the next, smaller
    pivot.  Pivots are chosen with least absolute value, which keeps the
    entries small on the sparse 0/+-1 matrices met here.
    """
    cols: dict[int, set] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)

    def add_row(dst, src, factor):
        rd = rows[dst]
        for j, v in rows[src].items():
            nv = rd.get(j, 0) - factor * v
            if nv:
                if j not in rd:
                    cols[j].add(dst)
                rd[j] = nv
            elif j in rd:
                del rd[j]
                cols[j].discard(dst)
        if not rd:
            del rows[dst]

    diag = []
    pivot = None
    while rows:
        if pivot is None or pivot[0] not in rows or pivot[1] not in rows[pivot[0]]:
            best = None
            for i, r in rows.items():
                for j, v in r.items():
                    if best is None or abs(v) < best[2]:
                        best = (i, j, abs(v))
                        if best[2] == 1:
                            break
                if best[2] == 1:
                    break
            pivot = best[:2]
        pi, pj = pivot
        pv = rows[pi][pj]
        restart = False
        for i in sorted(cols[pj] - {pi}):
            x = rows[i][pj]
            add_row(i, pi, x // pv)
            if i in rows and pj in rows[i]:
                pivot = (i, pj)   # remainder, strictly smaller than |pv|
                restart = True
                break
        if restart:
            continue
        row = rows[pi]
        for j in sorted(set(row) - {pj}):
            y = row[j]
            rem = y - (y // pv) * pv
            if rem:
                row[j] = rem
                pivot = (pi, j)
                restart = True
                break
            del row[j]
            cols[j].discard(pi)
        if restart:
            continue
        diag.append(abs(pv))
        del rows[pi]
        cols[pj].discard(pi)
        pivot = None
    return diag


def _invariant_factors(diag: list[int]) -> list[int]:
    # 1 divides everything, so only the entries above 1 need normalising
    rest = sorted(d for d in diag if d != 1)
    ones = len(diag) - len(rest)
    # (a, b) -> (gcd, lcm) until each entry divides every later one
    changed = True
    while changed:
        changed = False
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                a, b = rest[i], rest[j]
                if b % a:
                    g = math.gcd(a, b)
                    rest[i], rest[j] = g, a // g * b
                    changed = True
        rest.sort()
    return [1] * ones + rest


@dataclasses.dataclass(frozen=True)
class SmithForm:
    invariants: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariants)


def smith_normal_form(M) -> SmithForm:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.

    ``M`` is a sequence of rows, or a dict {(row, col): value}.
    """
    if isinstance(M, dict):
        rows = {}
        for (i, j), v in M.items():
            if v:
                rows.setdefault(i, {})[j] = int(v)
    else:
        rows = _as_rows(M)
    return SmithForm(tuple(_invariant_factors(_diagonal(rows))))


def smith_decomposition(M):
    """Dense Smith form with transforms: returns (U, S, V) with U M V = S.

    Quadratic-memory reference version for small matrices.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    S = [list(map(int, row)) for row in M]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(A, a, b):
        A[a], A[b] = A[b], A[a]

    def swap_cols(A, a, b):
        for row in A:
            row[a], row[b] = row[b], row[a]

    t = 0
    while t < min(m, n):
        nz = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(S, t, i)
        swap_rows(U, t, i)
        swap_cols(S, t, j)
        swap_cols(V, t, j)
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    S[i] = [a - q * b for a, b in zip(S[i], S[t])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[t])]
                    if S[i][t]:
                        swap_rows(S, t, i)
                        swap_rows(U, t, i)
                        done = False
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    for A in (S, V):
                        for row in A:
                            row[j] -= q * row[t]
                    if S[t][j]:
                        swap_cols(S, t, j)
                        swap_cols(V, t, j)
                        done = False
            if done:
                # force divisibility of the remaining block by the pivot
                for i in range(t + 1, m):
                    if any(S[i][j] % S[t][t] for j in range(t + 1, n)):
                        S[t] = [a + b for a, b in zip(S[t], S[i])]
                        U[t] = [a + b for a, b in zip(U[t], U[i])]
                        done = False
                        break
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, S, V


# -- chain complexes -----------------------------------------------------

@dataclasses.dataclass
class IntegerChainComplex:
    dims: list[int]
    boundaries: dict  # degree p >= 1 -> {(row in p-1, col in p): value}

    def dense(self, p: int) -> list[list[int]]:
        M = [[0] * self.dims[p] for _ in range(self.dims[p - 1])]
        for (i, j), v in self.boundaries.get(p, {}).items():
            M[i][j] = v
        return M


def _compose(outer: dict, inner: dict) -> dict:
    by_row: dict[int, list] = {}
    for (k, j), v in inner.items():
        by_row.setdefault(k, []).append((j, v))
    out: dict = {}
    for (i, k), u in outer.items():
        for j, v in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + u * v
    return {key: v for key, v in out.items() if v}


def chain_complex(fc) -> IntegerChainComplex:
    """Cellular chain complex of a ``FiltrationComplex``."""
    dims = fc.dims()
    local = {}
    seen = [0] * len(dims)
    for cid, cell in enumerate(fc.cells):
        local[cid] = seen[cell.level]
        seen[cell.level] += 1
    bds: dict[int, dict] = {p: {} for p in range(1, len(dims))}
    for cid, face_ids in fc.faces.items():
        p = fc.cells[cid].level
        col = local[cid]
        entries = bds[p]
        for q, fid in enumerate(face_ids):
            key = (local[fid], col)
            entries[key] = entries.get(key, 0) + (-1) ** q
        for key in [key for key in entries if key[1] == col and not entries[key]]:
            del entries[key]
    cc = IntegerChainComplex(dims, bds)
    for p in range(2, len(dims)):
        if _compose(bds[p - 1], bds[p]):
            raise BoundarySquareNonzero(f"boundary squared is nonzero in degree {p}")
    return cc


@dataclasses.dataclass(frozen=True)
class DegreeHomology:
    degree: int
    betti: int
    torsion: tuple[int, ...] = ()

    def to_dict(self):
        return {"degree": self.degree, "betti": self.betti, "torsion": list(self.torsion)}


@dataclasses.dataclass
class HomologyReport:
    degrees: list
    reduced: bool = True

    def __getitem__(self, i) -> DegreeHomology:
        if 0 <= i < len(self.degrees):
            return self.degrees[i]
        return DegreeHomology(i, 0)

    def betti(self) -> list[int]:
        return [h.betti for h in self.degrees]

    def to_dict(self):
        return [h.to_dict() for h in self.degrees]


def homology(cc: IntegerChainComplex, reduced: bool = True) -> HomologyReport:
    top = len(cc.dims)
    forms = {p: smith_normal_form(cc.boundaries.get(p, {})) for p in range(1, top)}
    out = []
    for i in range(top):
        rank_out = forms[i].rank if i >= 1 else 0
        incoming = forms.get(i + 1)
        rank_in = incoming.rank if incoming else 0
        betti = cc.dims[i] - rank_out - rank_in
        if i == 0 and reduced and cc.dims[0]:
            betti -= 1
        torsion = tuple(d for d in incoming.invariants if d > 1) if incoming else ()
        out.append(DegreeHomology(i, betti, torsion))
    return HomologyReport(out, reduced)


def reduced_homology(cc: IntegerChainComplex) -> HomologyReport:
    return homology(cc, reduced=True)


def euler_characteristic(dims) -> int:
    return sum((-1) ** p * d for p, d in enumerate(dims))


@dataclasses.dataclass
class ConnectivityReport:
    n: int
    k: int
    dims: list
    homology: list
    top_betti: int
    status: str = "pass"

    def to_dict(self):
        return dataclasses.asdict(self)


def connectivity_check(fc, n: int | None = None) -> ConnectivityReport:
    """Reduced homology vanishes below degree n-1 and is free in degree n-1."""
    n = fc.n if n is None else n
    cc = chain_complex(fc)
    h = reduced_homology(cc)
    if n == 1:
        return ConnectivityReport(n, fc.k, cc.dims, h.to_dict(), cc.dims[0], status="degenerate")
    for i in range(n - 1):
        if h[i].betti or h[i].torsion:
            raise CounterexampleFound("reduced homology below the top degree is nonzero", {
                "n": n, "k": fc.k, "degree": i, "betti": h[i].betti, "torsion": list(h[i].torsion)})
    if h[n - 1].torsion:
        raise CounterexampleFound("top homology has torsion", {
            "n": n, "k": fc.k, "torsion": list(h[n - 1].torsion)})
    return ConnectivityReport(n, fc.k, cc.dims, h.to_dict(), h[n - 1].betti)
