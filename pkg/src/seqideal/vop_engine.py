"""Inductive construction of annihilator generator pairs.

Given a finite sequence over an exact field, this module builds a pair
of monic homogeneous forms (f, g) generating the annihilator ideal of
its inverse form: f is a leading form (z does not divide its leading
term), z divides g, and the total degrees satisfy |f| + |g| = n + 1 for
a length-n sequence.  Such a pair is called a viable ordered pair, VOP
for short.  The total degree of f is the linear complexity of the
sequence and its dehomogenization is a minimal polynomial.

The construction consumes one sequence term at a time.  Each step costs
one windowed dot product (the discrepancy) plus one coefficient update,
so a full synthesis is O(n^2) coefficient operations.  Because the state
after k terms is exactly the state needed for k + 1, the engine supports
streaming: callers may push terms as they arrive.

The per-prefix records (k, lambda_k, delta_k, d_k) form the linear
complexity profile.  A profile is perfect when lambda of every length-n
prefix is floor((n + 1) / 2); ``is_plcp`` tests that via the profile and
independently via the equivalent shift pattern of the construction, and
insists the two agree.

Setting the environment variable SEQIDEAL_DEBUG_ASSERTS=1 makes every
step re-verify the pair invariants (leading/monic/z-divisibility, degree
sum, annihilation, coprimality).  That turns the engine cubic; it is a
debugging aid, not a production mode.
"""

from __future__ import annotations

import os
from itertools import product as _cartesian
from typing import NamedTuple, Optional, Sequence

from .bivariate import (
    Form,
    InverseForm,
    UniPoly,
    apply,
    dehomogenize,
    discrepancy_window,
    form_gcd,
)
from .field import Field, FieldError

__all__ = [
    "VOP",
    "ProfileEntry",
    "StepRecord",
    "VOPState",
    "EngineError",
    "init",
    "step",
    "synthesize",
    "synthesize_trace",
    "linear_complexity",
    "minimal_polynomial",
    "Theta",
    "minimal_leading_forms",
    "is_plcp",
    "random_plcp_sequence",
]


class EngineError(ValueError):
    pass


class VOP(NamedTuple):
    """A viable ordered pair.  ``degenerate`` marks the all-zero-input
    convention (f = 1, g = z^(n+1)), which keeps the degree-sum property
    formally true but does not describe a nonzero inverse form."""

    f: Form
    g: Form
    degenerate: bool = False


class ProfileEntry(NamedTuple):
    """Per-prefix record: after k + 1 terms the pair has f of degree
    ``lam``; ``delta`` is the discrepancy met when consuming term k + 1
    (None on the final entry) and ``d`` is |g| - |f| at that moment."""

    k: int
    lam: int
    delta: object
    d: int


class StepRecord(NamedTuple):
    """Trace row k: the (d, delta', delta, q) that produced the pair
    (f, g) for the first k + 1 terms.  Row 0 is the basis; its update
    fields are None."""

    k: int
    d: Optional[int]
    delta_prime: object
    delta: object
    q: object
    f: Form
    g: Form


def _debug_enabled() -> bool:
    return os.environ.get("SEQIDEAL_DEBUG_ASSERTS") == "1"


class VOPState:
    """Mutable synthesis state. Feed terms with :meth:`push`, advance with
    :meth:`advance` (or the module-level :func:`step`), fork with
    :meth:`copy`.  A single state must be advanced sequentially; copies
    are independent."""

    def __init__(
        self,
        field: Field,
        trace: bool = False,
        basis: Optional[tuple[Form, Form]] = None,
    ):
        self.field = field
        self._buf: list = []          # all pushed terms, raw
        self._consumed = 0            # how many terms the pair accounts for
        self._active = False          # basis found (first nonzero term seen)
        self._f: list = [field.one]   # coefficients of f by x-exponent
        self._g: list = [field.one]   # x-coefficients of g
        self._gdeg = 1                # total degree of g
        self._d = 1                   # |g| - |f|
        self._dp = field.one          # last pivot discrepancy, never zero
        self._basis = basis           # replaces (x, z) when s_0 is nonzero
        self.profile: list[ProfileEntry] = []
        self.trace: Optional[list[StepRecord]] = [] if trace else None
        self._debug = _debug_enabled()

    # -- feeding ---------------------------------------------------------

    def push(self, a) -> "VOPState":
        self._buf.append(self.field.coerce(a))
        return self

    def push_many(self, seq) -> "VOPState":
        for a in seq:
            self.push(a)
        return self

    @property
    def pending(self) -> int:
        return len(self._buf) - self._consumed

    @property
    def consumed(self) -> int:
        return self._consumed

    # -- views -----------------------------------------------------------

    @property
    def d(self) -> int:
        return self._d

    @property
    def delta_prime(self):
        return self._dp

    def f_form(self) -> Form:
        return Form(self.field, self._f)

    def g_form(self) -> Form:
        pad = self._gdeg + 1 - len(self._g)
        return Form(self.field, list(self._g) + [self.field.zero] * pad)

    def vop(self) -> VOP:
        return VOP(self.f_form(), self.g_form(), degenerate=not self._active)

    def copy(self) -> "VOPState":
        other = VOPState.__new__(VOPState)
        other.field = self.field
        other._buf = list(self._buf)
        other._consumed = self._consumed
        other._active = self._active
        other._f = list(self._f)
        other._g = list(self._g)
        other._gdeg = self._gdeg
        other._d = self._d
        other._dp = self._dp
        other.profile = list(self.profile)
        other.trace = None if self.trace is None else list(self.trace)
        other._debug = self._debug
        return other

    # -- the inductive step ------------------------------------------------

    def advance(self) -> "VOPState":
        """Consume one pending term."""
        if self.pending <= 0:
            raise EngineError("no pending terms to consume")
        field = self.field
        t = self._consumed  # index of the term being consumed
        a = self._buf[t]

        if not self._active:
            if t >= 1:
                # all-zero prefix so far: the degenerate pair (1, z^(t+1))
                self.profile.append(ProfileEntry(t - 1, 0, a, t + 1))
            if field.is_zero(a):
                self._gdeg += 1
                self._d += 1
                self._consumed += 1
                return self
            # basis: first nonzero term at index t gives order v = -t,
            # and the starting pair is (x^(1-v), z) unless the caller
            # supplied another valid pair for the one-term prefix
            v = -t
            if self._basis is not None:
                if t != 0:
                    raise EngineError(
                        "a custom basis only applies when the first term is nonzero"
                    )
                bf, bg = self._basis
                if not (bf.in_ll and bf.is_monic and bg.z_divides and bg.is_monic
                        and bf.degree >= 1 and bf.degree + bg.degree == 2):
                    raise EngineError("custom basis is not a valid pair for one term")
                self._f = list(bf.coeffs)
                top = max(i for i, c in enumerate(bg.coeffs) if not field.is_zero(c))
                self._g = list(bg.coeffs[: top + 1])
                self._gdeg = bg.degree
                self._d = bg.degree - bf.degree
            else:
                self._f = [field.zero] * (1 - v) + [field.one]
                self._g = [field.one]
                self._gdeg = 1
                self._d = v
            # the cogenerator's own discrepancy against the next prefix is
            # the first nonzero term itself (z-shifting each augmentation
            # keeps it constant until a pivot swap replaces it), so an
            # unnormalized leading term lands in the pivot here
            self._dp = a
            self._active = True
            self._consumed += 1
            if self.trace is not None:
                self.trace.append(
                    StepRecord(t, None, self._dp, None, None, self.f_form(), self.g_form())
                )
            if self._debug:
                self._assert_invariants()
            return self

        n_new = t + 1  # prefix length after this step
        k = t - 1      # index of the discrepancy being resolved
        d = self._d
        dp = self._dp
        delta = discrepancy_window(field, self._f, self._buf, n_new)
        q = field.div(delta, dp)
        self.profile.append(ProfileEntry(k, len(self._f) - 1, delta, d))

        if not field.is_zero(delta):
            if d <= 0:
                field.submul_at(self._f, -d, self._g, q)
            else:
                new_f = [field.zero] * d + self._f
                field.submul_at(new_f, 0, self._g, q)
                self._g = self._f
                self._f = new_f
                self._gdeg = len(self._g) - 1
                self._dp = delta
                self._d = -d
        self._gdeg += 1
        self._d += 1
        self._consumed += 1

        if self.trace is not None:
            self.trace.append(
                StepRecord(t, d, dp, delta, q, self.f_form(), self.g_form())
            )
        if self._debug:
            self._assert_invariants()
        return self

    def run(self) -> "VOPState":
        while self.pending:
            self.advance()
        return self

    def finish_profile(self) -> list[ProfileEntry]:
        """Profile including the closing entry for the full prefix."""
        out = list(self.profile)
        if self._consumed:
            out.append(
                ProfileEntry(self._consumed - 1, len(self._f) - 1, None, self._d)
            )
        return out

    # -- slow invariant checks (debug mode) --------------------------------

    def _assert_invariants(self):
        if not self._active:
            return
        f, g = self.f_form(), self.g_form()
        n = self._consumed
        G = InverseForm(self.field, self._buf[:n])
        ok = (
            f.in_ll
            and f.is_monic
            and g.z_divides
            and g.is_monic
            and f.degree + g.degree == n + 1
            and apply(f, G).is_zero
            and apply(g, G).is_zero
            and form_gcd(f, g) == Form(self.field, [self.field.one])
        )
        if not ok:
            raise AssertionError(
                f"pair invariants violated after {n} terms: f={f}, g={g}"
            )


# -- module-level operations ----------------------------------------------


def init(F: InverseForm) -> VOPState:
    """Basis state for a nonzero inverse form: scans to the first nonzero
    term s_t (order v = -t) and starts from the pair (x^(1-v), z)."""
    if F.is_zero:
        raise EngineError("cannot initialize from the zero inverse form")
    state = VOPState(F.field)
    state.push_many(F.seq)
    while not state._active:
        state.advance()
    return state


def step(state: VOPState) -> VOPState:
    """Advance one term; errors when nothing is pending."""
    return state.advance()


def _run(F: InverseForm, trace: bool, basis=None):
    state = VOPState(F.field, trace=trace, basis=basis)
    state.push_many(F.seq)
    state.run()
    return state


def synthesize(F: InverseForm, basis: Optional[tuple[Form, Form]] = None):
    """Full synthesis: returns (vop, profile).

    The all-zero sequence yields the degenerate convention f = 1,
    g = z^(n+1) with the ``degenerate`` flag set.  A caller that knows a
    different valid pair for the one-term prefix may pass it as
    ``basis``; later pairs (though not the linear complexity) depend on
    that choice.
    """
    state = _run(F, trace=False, basis=basis)
    return state.vop(), state.finish_profile()


def synthesize_trace(F: InverseForm, basis: Optional[tuple[Form, Form]] = None):
    """Like :func:`synthesize` but also returns the per-step trace rows."""
    state = _run(F, trace=True, basis=basis)
    return state.vop(), state.finish_profile(), list(state.trace or [])


def _as_inverse_form(seq, field: Optional[Field]) -> InverseForm:
    if isinstance(seq, InverseForm):
        return seq
    if field is None:
        raise EngineError("field must be given for raw sequences")
    return InverseForm(field, seq)


def linear_complexity(seq, field: Optional[Field] = None) -> int:
    """Linear complexity of a finite sequence (0 for the zero sequence)."""
    vop, _ = synthesize(_as_inverse_form(seq, field))
    return 0 if vop.degenerate else vop.f.degree


def minimal_polynomial(seq, field: Optional[Field] = None) -> UniPoly:
    """A monic minimal polynomial of the sequence (1 for the zero one)."""
    vop, _ = synthesize(_as_inverse_form(seq, field))
    return dehomogenize(vop.f)


# -- minimal leading forms -------------------------------------------------


class Theta:
    """The monic leading annihilating forms of minimal degree.

    Either the single form f (when |g| > |f|) or the family
    f + psi * g over all forms psi of degree |f| - |g|.  The family can
    be expanded over a finite field; over the rationals it is infinite.
    """

    def __init__(self, f: Form, g: Form):
        self.f = f
        self.g = g
        self.unique = g.degree > f.degree
        self.psi_degree = None if self.unique else f.degree - g.degree

    def describe(self) -> str:
        return "unique" if self.unique else f"parametric({self.psi_degree})"

    def count(self) -> int:
        """Number of minimal leading forms (finite fields only)."""
        if self.unique:
            return 1
        order = self.f.field.order
        if order is None:
            raise FieldError("infinitely many minimal leading forms over QQ")
        return order ** (self.psi_degree + 1)

    def enumerate(self) -> set[Form]:
        """Expand the family; errors over an infinite field."""
        if self.unique:
            return {self.f}
        field = self.f.field
        if not field.is_finite:
            raise FieldError("cannot enumerate minimal leading forms over QQ")
        out = set()
        universe = list(field.elements())
        for coeffs in _cartesian(universe, repeat=self.psi_degree + 1):
            psi = Form(field, coeffs)
            out.add(self.f if psi.is_zero else self.f + psi * self.g)
        return out


def minimal_leading_forms(vop: VOP) -> Theta:
    return Theta(vop.f, vop.g)


# -- profile utilities ------------------------------------------------------


def is_plcp(profile: Sequence[ProfileEntry]) -> bool:
    """Whether a synthesis profile is a perfect linear complexity profile.

    Perfect means the first term is nonzero and lambda of every length-n
    prefix equals floor((n + 1) / 2).  The equivalent step-level pattern
    (a nonzero discrepancy with d = 1 exactly at odd k) is evaluated as
    well and the two answers are required to agree.
    """
    if not profile:
        return False
    entries = list(profile)
    starts_nonzero = entries[0].lam == 1  # lambda of the first prefix
    by_profile = starts_nonzero and all(
        e.lam == (e.k + 2) // 2 for e in entries
    )
    by_shifts = starts_nonzero
    if starts_nonzero:
        for e in entries:
            if e.delta is None:
                continue
            is_shift = e.delta != 0 and e.d == 1
            if is_shift != (e.k % 2 == 1):
                by_shifts = False
                break
    if by_profile != by_shifts:
        raise AssertionError(
            "profile and shift criteria disagree; engine invariant broken"
        )
    return by_profile


def random_plcp_sequence(n: int, seed: int = 0) -> list[int]:
    """A binary sequence of length n with a perfect profile.

    Starts with 1 and picks each next bit so the discrepancy comes out 1
    at odd steps and pseudo-random at even ones, which forces the perfect
    profile while staying statistically close to a random sequence.
    """
    import random as _random

    from .field import GF2

    if n < 1:
        raise EngineError("need n >= 1")
    rng = _random.Random(seed)
    state = VOPState(GF2)
    state.push(1)
    state.advance()
    seq = [1]
    for k in range(n - 1):
        target = 1 if k % 2 == 1 else rng.randrange(2)
        # the new term enters the discrepancy through f's leading
        # coefficient, which is 1, so solve base + a = target for a
        fc = state._f
        e = len(fc) - 1
        off = len(seq) - e
        i0 = -off if off < 0 else 0
        base = GF2.dot(fc[i0:e], seq[off + i0 : off + e])
        a = target ^ base
        seq.append(a)
        state.push(a)
        state.advance()
    return seq
