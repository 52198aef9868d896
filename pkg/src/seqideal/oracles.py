"""Independent reference implementations for cross-validation.

Three classics live here, deliberately sharing no code with the
synthesis engine:

* the Berlekamp-Massey LFSR synthesis algorithm, in its textbook
  connection-polynomial formulation (gamma stored ascending with
  gamma_0 = 1; note gamma may have degree below L);
* a brute-force minimal polynomial finder that solves the defining
  linear recurrence system by Gaussian elimination, degree by degree;
* the extended-Euclidean construction of minimal polynomials from
  convergent denominators (Dai's construction for the binary case,
  written field-generically).

The connection-polynomial convention is the reverse of the natural
coefficient order used everywhere else in this package, so comparisons
against minimal polynomials should go through :func:`reciprocal`.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .bivariate import UniPoly
from .field import Field, FieldError

__all__ = [
    "BMResult",
    "berlekamp_massey",
    "BruteForceResult",
    "brute_force_min_poly",
    "EAResult",
    "dai_ea",
    "reciprocal",
    "connection_equals",
]


class BMResult(NamedTuple):
    L: int
    gamma: UniPoly


def berlekamp_massey(seq: Sequence, field: Field) -> BMResult:
    """Shortest LFSR for a finite sequence.

    Returns the register length L (the linear complexity) and the
    connection polynomial gamma with gamma_0 = 1 satisfying
    gamma_0 s_j + ... + gamma_L s_(j-L) = 0 for L <= j <= n - 1.
    """
    s = [field.coerce(a) for a in seq]
    n = len(s)
    c = [field.one]  # current connection polynomial, ascending
    b = [field.one]  # copy from before the last length change
    L = 0
    m = 1            # steps since the last length change
    bb = field.one   # discrepancy at the last length change
    for j in range(n):
        # discrepancy of the current register against s_j
        hi = min(L, j, len(c) - 1)
        d = field.dot(c[: hi + 1], s[j - hi : j + 1][::-1])
        if field.is_zero(d):
            m += 1
            continue
        coef = field.div(d, bb)
        new_c = list(c) + [field.zero] * max(0, m + len(b) - len(c))
        field.submul_at(new_c, m, b, coef)
        if 2 * L <= j:
            b = c
            bb = d
            L = j + 1 - L
            m = 1
        else:
            m += 1
        c = new_c
    return BMResult(L, UniPoly(field, c))


class BruteForceResult(NamedTuple):
    """``witnesses`` is the set of all monic minimal polynomials, or None
    when that set is infinite (possible only over the rationals)."""

    lam: int
    witnesses: Optional[frozenset]


def _solve_affine(field: Field, rows: list[list], rhs: list):
    """Solve rows * c = rhs over the field.

    Returns None when inconsistent, otherwise (particular, basis) where
    basis spans the homogeneous solutions.  Plain exact elimination; all
    arithmetic stays in the field so there is no rounding anywhere.
    """
    m = len(rows)
    cols = len(rows[0]) if rows else 0
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    piv_of_col: dict[int, int] = {}
    r = 0
    for col in range(cols):
        sel = None
        for i in range(r, m):
            if not field.is_zero(a[i][col]):
                sel = i
                break
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        inv = field.inv(a[r][col])
        a[r] = [field.mul(inv, v) for v in a[r]]
        for i in range(m):
            if i != r and not field.is_zero(a[i][col]):
                fct = a[i][col]
                a[i] = [field.sub(v, field.mul(fct, w)) for v, w in zip(a[i], a[r])]
        piv_of_col[col] = r
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if not field.is_zero(a[i][cols]):
            return None
    particular = [field.zero] * cols
    for col, row in piv_of_col.items():
        particular[col] = a[row][cols]
    free_cols = [c for c in range(cols) if c not in piv_of_col]
    basis = []
    for fc in free_cols:
        vec = [field.zero] * cols
        vec[fc] = field.one
        for col, row in piv_of_col.items():
            vec[col] = field.neg(a[row][fc])
        basis.append(vec)
    return particular, basis


def _span(field: Field, particular: list, basis: list):
    """All points of the affine space particular + <basis> (finite field)."""
    points = [list(particular)]
    for vec in basis:
        extended = []
        for p in points:
            for t in field.elements():
                if field.is_zero(t):
                    extended.append(p)
                else:
                    extended.append(
                        [field.add(pi, field.mul(t, vi)) for pi, vi in zip(p, vec)]
                    )
        points = extended
    return points


def brute_force_min_poly(
    seq: Sequence, field: Field, max_len: int = 16
) -> BruteForceResult:
    """Minimal polynomials straight from the defining recurrence.

    For each candidate degree l the linear system
    c_l s_(k+l) + ... + c_0 s_k = 0, 0 <= k <= n - l - 1, c_l = 1,
    is solved by exact Gaussian elimination; the first feasible l is the
    linear complexity.  Cost grows quickly, hence the length guard.
    """
    s = [field.coerce(a) for a in seq]
    n = len(s)
    if n > max_len:
        raise FieldError(f"brute force is limited to length {max_len}, got {n}")
    for l in range(n + 1):
        if l == n:
            # every monic polynomial of degree n annihilates vacuously
            if not field.is_finite:
                return BruteForceResult(n, None)
            polys = frozenset(
                UniPoly(field, list(p) + [field.one])
                for p in _span(field, [field.zero] * n, _identity_basis(field, n))
            )
            return BruteForceResult(n, polys)
        rows = [[s[k + i] for i in range(l)] for k in range(n - l)]
        rhs = [field.neg(s[k + l]) for k in range(n - l)]
        sol = _solve_affine(field, rows, rhs)
        if sol is None:
            continue
        particular, basis = sol
        if basis and not field.is_finite:
            return BruteForceResult(l, None)
        if field.is_finite:
            pts = _span(field, particular, basis)
        else:
            pts = [particular]
        polys = frozenset(UniPoly(field, p + [field.one]) for p in pts)
        return BruteForceResult(l, polys)
    raise AssertionError("unreachable: degree n is always feasible")


def _identity_basis(field: Field, n: int):
    out = []
    for i in range(n):
        v = [field.zero] * n
        v[i] = field.one
        out.append(v)
    return out


class EAResult(NamedTuple):
    """Convergent denominator c with the quotient and remainder-degree
    history of the division cascade; c_i = q_i c_(i-1) + c_(i-2) with
    c_(-1) = 0 and c_0 = 1."""

    c: UniPoly
    quotients: tuple
    remainder_degrees: tuple


def dai_ea(k: int, seq: Sequence, field: Field) -> EAResult:
    """Minimal polynomial of a 2k-term sequence by the division cascade.

    Runs the Euclidean algorithm on x^(2k) and the sequence polynomial
    s_0 x^(2k-1) + ... + s_(2k-1), accumulating convergent denominators,
    and stops at the first remainder of degree below k (or zero).  The
    quotients are signed so that r_i = q_i r_(i-1) + r_(i-2) holds
    verbatim; over GF(2) they are the plain division quotients.
    """
    if k < 1:
        raise FieldError("need k >= 1")
    s = [field.coerce(a) for a in seq]
    if len(s) != 2 * k:
        raise FieldError(f"need exactly {2 * k} terms, got {len(s)}")
    r_prev = UniPoly.x_power(field, 2 * k)
    r_cur = UniPoly(field, list(reversed(s)))
    c_prev = UniPoly.zero(field)
    c_cur = UniPoly.one(field)
    quotients = []
    degrees = []
    while not r_cur.is_zero and r_cur.degree >= k:
        quot, rem = divmod(r_prev, r_cur)
        q = -quot
        c_prev, c_cur = c_cur, q * c_cur + c_prev
        r_prev, r_cur = r_cur, rem
        quotients.append(q)
        degrees.append(rem.degree)
    return EAResult(c_cur, tuple(quotients), tuple(degrees))


def reciprocal(c: UniPoly) -> UniPoly:
    """Coefficient reversal at deg c, made monic.

    An involution on polynomials with nonzero constant term; a zero
    constant term collapses the degree instead.
    """
    if c.is_zero:
        raise FieldError("the zero polynomial has no reciprocal")
    return UniPoly(c.field, list(reversed(c.coeffs))).monic()


def connection_equals(bm: BMResult, c: UniPoly) -> bool:
    """Whether the connection polynomial matches the minimal polynomial c.

    gamma relates to c by coefficient reversal at degree L.  The reversal
    is taken on the zero-padded length L + 1 vector because gamma's top
    coefficient (c's constant term) may vanish, and it preserves
    gamma_0 = 1 as c's leading coefficient, so monic c compares exactly.
    """
    field = bm.gamma.field
    if c.degree != bm.L:
        return False
    padded = [bm.gamma.coeff(i) for i in range(bm.L + 1)]
    return UniPoly(field, list(reversed(padded))) == c
