"""Constructors, classifier and scrambling harness for small derived
dimension.

The one-dimensional-derived-subspace case has exactly three families up
to isomorphism; the classifier separates them by two basis-free
invariants (commutativity; whether A(AA) vanishes).  The
two-dimensional case is exposed only as a parametric constructor, since
no complete classification is available.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .scalars import QQ, ZERO, ONE
from .exactlin import Mat, det, inverse, rank
from .algebra import (
    Algebra,
    basis_element,
    check_fermionic,
    check_left_symmetric,
)
from .forms import SymForm


class ScrambleError(RuntimeError):
    pass


def make_family(variant: int, n: int) -> Algebra:
    """The zero algebra (variant 0) or one of the three one-product
    families: e1 e1 = e2, e1 e2 = e2, e1 e3 = e2 (variants 1-3), padded
    with zero directions up to dimension n."""
    minimum = {0: 0, 1: 2, 2: 2, 3: 3}
    if variant not in minimum:
        raise ValueError(f"unknown family variant {variant}")
    if n < minimum[variant]:
        raise ValueError(f"variant {variant} needs dimension >= {minimum[variant]}")
    A = Algebra.zero(n)
    if variant == 1:
        A.c[0][0][1] = ONE
    elif variant == 2:
        A.c[0][1][1] = ONE
    elif variant == 3:
        A.c[0][2][1] = ONE
    return A


def _is_commutative(A: Algebra) -> bool:
    n = A.dim
    return all(
        A.c[i][j] == A.c[j][i] for i in range(n) for j in range(i + 1, n)
    )


def _derived_basis(A: Algebra):
    rows = [A.c[i][j] for i in range(A.dim) for j in range(A.dim)]
    basis = []
    for vec in rows:
        if not any(vec):
            continue
        v = list(vec)
        for pivot, b in basis:
            if v[pivot]:
                f = v[pivot]
                for t in range(A.dim):
                    v[t] = v[t] - f * b[t]
        for col, x in enumerate(v):
            if x:
                inv = ONE / x
                basis.append((col, [inv * y for y in v]))
                break
    return [b for _, b in basis]


def classify_k1(A: Algebra) -> int:
    """Which of the three one-dimensional-derived-subspace families A is
    isomorphic to: 1 if commutative, else 2 if A(AA) != 0, else 3."""
    if not (check_left_symmetric(A) and check_fermionic(A)):
        raise ValueError("algebra must satisfy both defining identities")
    derived = _derived_basis(A)
    if len(derived) != 1:
        raise ValueError("derived subspace must be one-dimensional")
    if _is_commutative(A):
        return 1
    v = derived[0]
    for i in range(A.dim):
        if any(A.multiply(basis_element(A.dim, i), v)):
            return 2
    return 3


@dataclass
class K2Params:
    """Parameters of the two-dimensional-derived-subspace family:
    e1 e_i = lam_i e2 + mu_i e4, e3 e_i = mu_i e2 + gam_i e4."""

    n: int
    lam: list
    mu: list
    gam: list

    def __post_init__(self):
        if self.n < 5:
            raise ValueError("dimension must be at least 5")
        for name in ("lam", "mu", "gam"):
            vec = getattr(self, name)
            if len(vec) != self.n:
                raise ValueError(f"{name} must have length {self.n}")
            setattr(self, name, [QQ(x) for x in vec])


def make_k2(params: K2Params) -> Algebra:
    A = Algebra.zero(params.n)
    for i in range(params.n):
        A.c[0][i][1] = params.lam[i]
        A.c[0][i][3] = params.mu[i]
        A.c[2][i][1] = params.mu[i]
        A.c[2][i][3] = params.gam[i]
    return A


def k2_condition(A: Algebra) -> bool:
    """Left multiplications of e1 and e3 commute.  On make_k2 outputs this
    is equivalent to the full identity checks."""
    L1 = A.left_op(basis_element(A.dim, 0))
    L3 = A.left_op(basis_element(A.dim, 2))
    return (L1 * L3 - L3 * L1).is_zero()


def random_k2(rnd: random.Random, n: int, structured: bool = True) -> K2Params:
    """Random parameters; with structured=True the vectors vanish on the
    two image directions, which forces the commutation condition."""

    def vec():
        v = [QQ(rnd.randint(-3, 3)) for _ in range(n)]
        if structured:
            v[1] = ZERO
            v[3] = ZERO
        return v

    return K2Params(n=n, lam=vec(), mu=vec(), gam=vec())


def transport_basis(A: Algebra, B, P: Mat):
    """Rewrite the algebra (and optional form) in the basis given by the
    columns of the invertible matrix P."""
    n = A.dim
    Pinv = inverse(P) if n else Mat.zeros(0, 0)
    new = Algebra.zero(n)
    for i in range(n):
        fi = P.col(i)
        for j in range(n):
            new.c[i][j] = Pinv.apply(A.multiply(fi, P.col(j)))
    newB = SymForm(P.transpose() * B.matrix * P) if B is not None else None
    return new, newB


def scramble(A: Algebra, B, seed):
    """Transport the algebra (and optional form) through a seeded random
    invertible integer basis change P with entries in [-3, 3].

    Returns (Algebra, SymForm or None, P).  All identity checks, the
    derived dimension, the signature and the generic rank are invariant
    under this transport.
    """
    n = A.dim
    rnd = random.Random(seed)
    P = None
    for _ in range(64):
        cand = Mat([[rnd.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        if n == 0 or det(cand):
            P = cand
            break
    if P is None:
        raise ScrambleError("no invertible basis change found in 64 attempts")
    new, newB = transport_basis(A, B, P)
    return new, newB, P


def generate_corpus(seed, count):
    """Seeded corpus for end-to-end verification: the three families with
    random padding dimension, plus two-dimensional-derived-subspace draws
    admitting a nondegenerate invariant form, each scrambled.

    Yields (name, Algebra, SymForm)."""
    from .forms import find_nondegenerate, invariant_form_space

    rnd = random.Random(seed)
    made = 0
    while made < count:
        kind = rnd.randrange(4)
        if kind < 3:
            variant = kind + 1
            n = rnd.randint(3 if variant == 3 else 2, 8)
            A = make_family(variant, n)
            name = f"family{variant}_dim{n}"
        else:
            n = rnd.randint(5, 8)
            A = make_k2(random_k2(rnd, n))
            if not k2_condition(A):
                continue
            name = f"k2_dim{n}"
        B = find_nondegenerate(invariant_form_space(A), seed=rnd.randrange(2**30))
        if B is None:
            continue
        A2, B2, _ = scramble(A, B, rnd.randrange(2**30))
        yield f"{name}_{made}", A2, B2
        made += 1
