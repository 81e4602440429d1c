"""Exact rational and polynomial-matrix linear algebra kernel.

Everything here is over exact rationals (see scalars.py); polynomial
matrices use dense multivariate polynomials and fraction-free (Bareiss)
elimination so that rank over the fraction field is computed without any
rational-function arithmetic.

Pivoting is deterministic everywhere: first nonzero entry in row-major
order.
"""

from __future__ import annotations

import random

from .scalars import QQ, ZERO, ONE


class GenericPointError(RuntimeError):
    """Raised when no full-rank specialization point is found within the
    attempt cap.  For a nonzero determinantal locus over the rationals this
    is (Schwartz-Zippel) essentially impossible; hitting it means a bug."""


# ---------------------------------------------------------------------------
# rational matrices


class Mat:
    """Dense row-major matrix over exact rationals.

    Treated as immutable after construction; all operations return new
    matrices.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        self.data = [[QQ(x) for x in row] for row in data]
        self.rows = len(self.data)
        if self.data:
            self.cols = len(self.data[0])
        else:
            self.cols = 0 if cols is None else cols
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def _raw(cls, data, cols=None):
        # internal: entries already exact scalars, skip conversion
        m = object.__new__(cls)
        m.data = data
        m.rows = len(data)
        m.cols = len(data[0]) if data else (0 if cols is None else cols)
        return m

    @classmethod
    def zeros(cls, rows, cols):
        return cls._raw([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls._raw(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n
        )

    @classmethod
    def diagonal(cls, entries):
        entries = [QQ(x) for x in entries]
        n = len(entries)
        return cls._raw(
            [[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)], n
        )

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Mat({self.data!r})"

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat._raw(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            self.cols,
        )

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat._raw(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            self.cols,
        )

    def __neg__(self):
        return Mat._raw([[-a for a in row] for row in self.data], self.cols)

    def scale(self, c):
        c = QQ(c)
        return Mat._raw([[c * a for a in row] for row in self.data], self.cols)

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        od = other.data
        out = []
        for ra in self.data:
            row = []
            for j in range(other.cols):
                s = ZERO
                for t, a in enumerate(ra):
                    if a:
                        s += a * od[t][j]
                row.append(s)
            out.append(row)
        return Mat._raw(out, other.cols)

    def transpose(self):
        return Mat._raw(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.rows,
        )

    def apply(self, vec):
        """Matrix-vector product, vec a sequence of length cols."""
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [
            sum((a * v for a, v in zip(row, vec) if a), ZERO) for row in self.data
        ]

    def col(self, j):
        return [row[j] for row in self.data]

    def is_zero(self):
        return all(not x for row in self.data for x in row)

    def is_symmetric(self):
        if self.rows != self.cols:
            return False
        d = self.data
        return all(
            d[i][j] == d[j][i] for i in range(self.rows) for j in range(i + 1, self.rows)
        )

    def copy_data(self):
        return [row[:] for row in self.data]


def rank(M: Mat) -> int:
    """Row rank by exact Gaussian elimination (row-major pivot choice)."""
    a = M.copy_data()
    rows, cols = M.rows, M.cols
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        inv = ONE / prow[c]
        for i in range(r + 1, rows):
            f = a[i][c]
            if f:
                f = f * inv
                ai = a[i]
                for j in range(c, cols):
                    ai[j] = ai[j] - f * prow[j]
        r += 1
        if r == rows:
            break
    return r


def _rref(a, rows, cols):
    """In-place reduced row echelon form; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        inv = ONE / prow[c]
        for j in range(c, cols):
            prow[j] = prow[j] * inv
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                ai = a[i]
                for j in range(c, cols):
                    ai[j] = ai[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def kernel_basis(M: Mat):
    """Basis of the right kernel of M, as a list of length-cols vectors."""
    a = [row[:] for row in M.data if any(row)]
    cols = M.cols
    pivots = _rref(a, len(a), cols)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def solve(M: Mat, b):
    """One solution x of M x = b, or None if inconsistent."""
    if len(b) != M.rows:
        raise ValueError("shape mismatch")
    cols = M.cols
    a = [row[:] + [QQ(v)] for row, v in zip(M.data, b)]
    pivots = _rref(a, M.rows, cols + 1)
    if cols in pivots:
        return None
    x = [ZERO] * cols
    for r, pc in enumerate(pivots):
        x[pc] = a[r][cols]
    return x


def det(M: Mat):
    """Determinant by exact elimination."""
    if M.rows != M.cols:
        raise ValueError("square matrix required")
    n = M.rows
    a = M.copy_data()
    d = ONE
    for c in range(n):
        piv = None
        for i in range(c, n):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        prow = a[c]
        d = d * prow[c]
        inv = ONE / prow[c]
        for i in range(c + 1, n):
            f = a[i][c]
            if f:
                f = f * inv
                ai = a[i]
                for j in range(c, n):
                    ai[j] = ai[j] - f * prow[j]
    return d


def inverse(M: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan; raises on singular input."""
    if M.rows != M.cols:
        raise ValueError("square matrix required")
    n = M.rows
    a = [row[:] + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(M.data)]
    pivots = _rref(a, n, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return Mat._raw([row[n:] for row in a], n)


def congruent_diagonalize(S: Mat):
    """Return (P, D) with P invertible and P^T S P = D diagonal, exactly.

    Symmetric Gaussian congruence over the rationals; replaces orthogonal
    diagonalization, which would need real eigenvalues.
    """
    if not S.is_symmetric():
        raise ValueError("symmetric matrix required")
    n = S.rows
    a = S.copy_data()
    p = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]

    def swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        a[i], a[j] = a[j], a[i]
        for row in p:
            row[i], row[j] = row[j], row[i]

    def add_col(i, j, f):
        # col_i += f * col_j (and the matching row op on a)
        for row in a:
            row[i] = row[i] + f * row[j]
        for t in range(n):
            a[i][t] = a[i][t] + f * a[j][t]
        for row in p:
            row[i] = row[i] + f * row[j]

    for i in range(n):
        if not a[i][i]:
            # bring a nonzero diagonal entry into position i, or create one
            for j in range(i + 1, n):
                if a[j][j]:
                    swap(i, j)
                    break
            else:
                for j in range(i + 1, n):
                    if a[i][j]:
                        add_col(i, j, ONE)
                        break
        if not a[i][i]:
            # row/col i is zero on the trailing block: zero diagonal entry
            continue
        inv = ONE / a[i][i]
        for j in range(i + 1, n):
            if a[i][j]:
                add_col(j, i, -a[i][j] * inv)
    P = Mat._raw(p, n)
    D = Mat.diagonal([a[i][i] for i in range(n)])
    return P, D


def signature(S: Mat):
    """(n_plus, n_minus, n_zero) of a symmetric matrix, by congruence."""
    _, D = congruent_diagonalize(S)
    np_ = nm = nz = 0
    for i in range(S.rows):
        d = D.data[i][i]
        if d > 0:
            np_ += 1
        elif d < 0:
            nm += 1
        else:
            nz += 1
    return np_, nm, nz


# ---------------------------------------------------------------------------
# multivariate polynomials and polynomial matrices


class Poly:
    """Dense-dict multivariate polynomial over exact rationals.

    terms maps exponent tuples (length nvars) to nonzero coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {e: QQ(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, nvars, terms):
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        c = QQ(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): ONE})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({self.nvars}, {self.terms!r})"

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, ZERO) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return Poly._raw(self.nvars, t)

    def __sub__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, ZERO) - c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return Poly._raw(self.nvars, t)

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = QQ(other)
            if not c:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, {e: c * v for e, v in self.terms.items()})
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = t.get(e, ZERO) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        return Poly._raw(self.nvars, t)

    __rmul__ = __mul__

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def eval(self, point):
        """Evaluate at a sequence of rationals, length nvars."""
        if len(point) != self.nvars:
            raise ValueError("wrong number of values")
        point = [QQ(v) for v in point]
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total += v
        return total


def poly_divexact(a: Poly, b: Poly) -> Poly:
    """Exact polynomial division a / b; raises if the division is not exact.

    Lex-leading-term reduction; exact whenever a is a polynomial multiple
    of b, which is what the Bareiss recurrence guarantees.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero():
        return Poly.zero(a.nvars)
    bl = max(b.terms)
    blc = b.terms[bl]
    r = dict(a.terms)
    q = {}
    while r:
        rl = max(r)
        qe = tuple(x - y for x, y in zip(rl, bl))
        if any(e < 0 for e in qe):
            raise ValueError("inexact polynomial division")
        qc = r[rl] / blc
        q[qe] = qc
        for be, bc in b.terms.items():
            e = tuple(x + y for x, y in zip(qe, be))
            s = r.get(e, ZERO) - qc * bc
            if s:
                r[e] = s
            else:
                r.pop(e, None)
    return Poly._raw(a.nvars, q)


class PolyMat:
    """Matrix with multivariate polynomial entries (shared indeterminates)."""

    __slots__ = ("rows", "cols", "nvars", "data")

    def __init__(self, nvars, data, cols=None):
        self.nvars = nvars
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        if self.data:
            self.cols = len(self.data[0])
        else:
            self.cols = 0 if cols is None else cols
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
            for p in row:
                if not isinstance(p, Poly) or p.nvars != nvars:
                    raise ValueError("entries must share the indeterminate set")

    @classmethod
    def zeros(cls, nvars, rows, cols):
        z = Poly.zero(nvars)
        return cls(nvars, [[z] * cols for _ in range(rows)], cols)

    def eval(self, point) -> Mat:
        return Mat._raw(
            [[p.eval(point) for p in row] for row in self.data], self.cols
        )

    def is_zero(self):
        return all(p.is_zero() for row in self.data for p in row)


def generic_rank(M: PolyMat) -> int:
    """Rank of M over the rational function field, by fraction-free
    (Bareiss) elimination with full row-major pivoting.

    Equals the maximum rank of M over all rational specializations.
    """
    a = [row[:] for row in M.data]
    rows, cols = M.rows, M.cols
    steps = min(rows, cols)
    prev = Poly.const(M.nvars, 1)
    r = 0
    for s in range(steps):
        piv = None
        for i in range(s, rows):
            for j in range(s, cols):
                if a[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        if pi != s:
            a[s], a[pi] = a[pi], a[s]
        if pj != s:
            for row in a:
                row[s], row[pj] = row[pj], row[s]
        r += 1
        pivot = a[s][s]
        for i in range(s + 1, rows):
            ais = a[i][s]
            for j in range(s + 1, cols):
                num = a[i][j] * pivot - ais * a[s][j]
                a[i][j] = poly_divexact(num, prev)
        prev = pivot
    return r


def find_generic_point(M: PolyMat, seed, target=None, max_attempts=64):
    """A rational point where the specialized rank equals generic_rank(M).

    Samples integer points from boxes of doubling width (deterministic
    given seed).  target overrides the rank to hit (used to exercise the
    failure guard); by Schwartz-Zippel the genuine search essentially never
    exhausts the attempt cap, so hitting GenericPointError means a bug.
    """
    r = generic_rank(M) if target is None else target
    rnd = random.Random(seed)
    for attempt in range(max_attempts):
        width = 2 << (attempt // 8)
        point = [QQ(rnd.randint(-width, width)) for _ in range(M.nvars)]
        if rank(M.eval(point)) == r:
            return point
    raise GenericPointError(
        f"no rank-{r} specialization found in {max_attempts} attempts"
    )
