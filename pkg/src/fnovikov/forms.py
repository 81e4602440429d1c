"""Invariant symmetric bilinear forms: solving, testing, type, orientation.

A form B is invariant when every right multiplication is self-adjoint for
it, i.e. R^T B = B R for each basis right-multiplication matrix R.
"""

from __future__ import annotations

import itertools
import random

from .scalars import ZERO, ONE
from .exactlin import (
    Mat,
    Poly,
    PolyMat,
    det,
    find_generic_point,
    generic_rank,
    kernel_basis,
    signature,
)
from .algebra import Algebra, DimensionMismatchError


class DegenerateFormError(ValueError):
    pass


class SymForm:
    """Symmetric bilinear form with cached signature data."""

    __slots__ = ("matrix", "_signature")

    def __init__(self, matrix: Mat):
        if not matrix.is_symmetric():
            raise ValueError("form matrix must be symmetric")
        self.matrix = matrix
        self._signature = None

    @property
    def dim(self):
        return self.matrix.rows

    def signature(self):
        """(n_plus, n_minus, n_zero); the type of the form is
        (n_plus, n_minus) when nondegenerate."""
        if self._signature is None:
            self._signature = signature(self.matrix)
        return self._signature

    def is_nondegenerate(self):
        return self.signature()[2] == 0

    def negate(self):
        return SymForm(-self.matrix)

    def pair(self, x, y):
        """<x, y>."""
        return sum(
            (xi * v for xi, v in zip(x, self.matrix.apply(y)) if xi), ZERO
        )

    def __eq__(self, other):
        return isinstance(other, SymForm) and self.matrix == other.matrix

    def __repr__(self):
        return f"SymForm({self.matrix.data!r})"


def is_invariant(A: Algebra, B: SymForm) -> bool:
    """True iff R^T B = B R for every basis right multiplication."""
    if B.dim != A.dim:
        raise DimensionMismatchError("form dimension mismatch")
    Bm = B.matrix
    for R in A.right_ops():
        if R.transpose() * Bm != Bm * R:
            return False
    return True


def invariant_form_space(A: Algebra):
    """Basis of the space of symmetric matrices B with R^T B = B R for all
    basis right multiplications R.  Returned as a list of symmetric Mat.

    Unknowns are the upper-triangle coordinates b_{uv} (u <= v) in
    row-major order; equations are assembled row-major over (j, r, s).
    """
    n = A.dim
    unknowns = [(u, v) for u in range(n) for v in range(u, n)]
    index = {uv: t for t, uv in enumerate(unknowns)}

    def uidx(r, s):
        return index[(r, s) if r <= s else (s, r)]

    rows = []
    for R in A.right_ops():
        Rd = R.data
        for r in range(n):
            for s in range(n):
                # entry (r,s) of R^T B - B R
                row = [ZERO] * len(unknowns)
                for t in range(n):
                    if Rd[t][r]:
                        row[uidx(t, s)] += Rd[t][r]
                    if Rd[t][s]:
                        row[uidx(r, t)] -= Rd[t][s]
                if any(row):
                    rows.append(row)
    if not rows:
        basis_vecs = [
            [ONE if t == t0 else ZERO for t in range(len(unknowns))]
            for t0 in range(len(unknowns))
        ]
    else:
        basis_vecs = kernel_basis(Mat._raw(rows, len(unknowns)))
    out = []
    for vec in basis_vecs:
        data = [[ZERO] * n for _ in range(n)]
        for (u, v), coeff in zip(unknowns, vec):
            data[u][v] = coeff
            data[v][u] = coeff
        out.append(Mat._raw(data, n))
    return out


def find_nondegenerate(space, seed, sweep_cap=12):
    """A nondegenerate rational combination of the given symmetric
    matrices, or None when none exists.

    The determinant of a generic combination is checked symbolically
    first, so absence is decided exactly.  When a member exists, a
    deterministic sweep over {-1, 0, 1} coefficients (small supports
    first, space dimension <= sweep_cap) looks for a small certificate
    before the seeded randomized search.
    """
    d = len(space)
    if d == 0:
        return None
    n = space[0].rows
    if n == 0:
        return SymForm(Mat.zeros(0, 0))
    pencil = PolyMat(
        d,
        [
            [
                Poly(
                    d,
                    {
                        tuple(1 if t == t0 else 0 for t in range(d)): space[t0].data[r][s]
                        for t0 in range(d)
                        if space[t0].data[r][s]
                    },
                )
                for s in range(n)
            ]
            for r in range(n)
        ],
    )
    if generic_rank(pencil) < n:
        return None
    if d <= sweep_cap:
        for support in range(1, d + 1):
            for idxs in itertools.combinations(range(d), support):
                for signs in itertools.product((1, -1), repeat=support):
                    data = [[ZERO] * n for _ in range(n)]
                    for t, sgn in zip(idxs, signs):
                        st = space[t].data
                        for r in range(n):
                            for s in range(n):
                                if st[r][s]:
                                    data[r][s] += sgn * st[r][s]
                    M = Mat._raw(data, n)
                    if det(M):
                        return SymForm(M)
    point = find_generic_point(pencil, seed)
    data = [[ZERO] * n for _ in range(n)]
    for t, coeff in enumerate(point):
        if not coeff:
            continue
        st = space[t].data
        for r in range(n):
            for s in range(n):
                if st[r][s]:
                    data[r][s] += coeff * st[r][s]
    return SymForm(Mat._raw(data, n))


def normalize_orientation(B: SymForm) -> SymForm:
    """Flip the sign of the form if needed so that n_minus <= n_plus."""
    np_, nm, nz = B.signature()
    if nz:
        raise DegenerateFormError("form must be nondegenerate")
    return B.negate() if nm > np_ else B
