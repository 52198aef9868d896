"""Exact field arithmetic for GF(2), GF(p) and the rationals.

Three field kinds sit behind one interface: the two-element field, prime
fields GF(p), and the rational numbers.  Scalars use a raw representation
chosen per field: the ints 0/1 for GF(2), residues in [0, p) for GF(p),
and ``fractions.Fraction`` (arbitrary precision, always reduced, positive
denominator) for the rationals.  All arithmetic is exact; floating point
is never used anywhere in this package.

A :class:`Field` instance owns the arithmetic on raw values (``add``,
``mul``, ``inv``, ...) plus two vector kernels (:meth:`Field.dot` and
:meth:`Field.submul_at`) that the synthesis engine calls in its inner
loops.  :class:`FieldElement` wraps a raw value together with its field
and overloads the usual operators; mixing elements of different fields
raises :class:`FieldMismatchError`.  Containers elsewhere in the package
(forms, sequences, polynomials) store raw values and use the kernels
directly.

Parsing is deliberately asymmetric.  GF(2) accepts only the literal
tokens ``0`` and ``1``: a stray ``2`` in a keystream is a data error, not
a residue, and coercing it would hide the bug.  GF(p) accepts any signed
integer and reduces it mod p.  The rationals accept ``a`` or ``a/b`` with
``b != 0``.
"""

from __future__ import annotations

import operator
from fractions import Fraction

__all__ = [
    "Field",
    "FieldElement",
    "FieldError",
    "FieldMismatchError",
    "ParseError",
    "GF2",
    "QQ",
    "GF",
    "parse_element",
]


class FieldError(ValueError):
    """Base class for field-level errors."""


class FieldMismatchError(FieldError):
    """Raised when values from different fields are combined."""


class ParseError(FieldError):
    """Raised when a token cannot be parsed as a field element."""


def _is_prime(p: int) -> bool:
    # deterministic trial division; moduli here are desk scale
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """Descriptor and raw-value arithmetic for one exact field.

    Subclasses fix the raw representation and override the kernels.  Two
    Field objects compare equal iff they describe the same field.
    """

    kind: str = ""
    p = None  # modulus for prime fields, None otherwise

    # -- identity ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self) -> int:
        return hash((self.kind, self.p))

    def __repr__(self) -> str:
        return self.name

    @property
    def name(self) -> str:
        raise NotImplementedError

    @property
    def tag(self) -> str:
        """Short machine tag used in reports: ``gf2``, ``gfp:7`` or ``q``."""
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    order = None  # number of elements, None when infinite

    # -- scalar kernels (raw values in, raw values out, no checking) ----

    zero = 0
    one = 1

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    # -- vector kernels --------------------------------------------------

    def dot(self, u, v):
        """Sum of u[i] * v[i] over equal-length raw sequences."""
        acc = self.zero
        for x, y in zip(u, v):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def submul_at(self, dst, offset, src, q):
        """In place dst[offset + i] -= q * src[i] for all i."""
        j = offset
        for s in src:
            dst[j] = self.sub(dst[j], self.mul(q, s))
            j += 1

    # -- conversions -----------------------------------------------------

    def coerce(self, x):
        """Validate x (raw value, int, or FieldElement) into a raw value."""
        raise NotImplementedError

    def parse(self, text: str):
        """Parse a text token into a raw value."""
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def element(self, x) -> "FieldElement":
        return FieldElement(self, self.coerce(x))

    def elements(self):
        """Iterate over all raw values of a finite field."""
        raise FieldError(f"{self.name} is not finite")

    def random(self, rng):
        raise NotImplementedError

    def random_nonzero(self, rng):
        while True:
            a = self.random(rng)
            if not self.is_zero(a):
                return a


class _GF2(Field):
    kind = "gf2"
    order = 2

    @property
    def name(self) -> str:
        return "GF(2)"

    @property
    def tag(self) -> str:
        return "gf2"

    def add(self, a, b):
        return a ^ b

    sub = add

    def mul(self, a, b):
        return a & b

    def neg(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2)")
        return 1

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(2)")
        return a

    def dot(self, u, v):
        return sum(map(operator.and_, u, v)) & 1

    def submul_at(self, dst, offset, src, q):
        if not q:
            return
        j = offset
        for s in src:
            if s:
                dst[j] ^= 1
            j += 1

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatchError(f"expected {self.name}, got {x.field.name}")
            return x.value
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int) and x in (0, 1):
            return x
        raise FieldError(f"not a GF(2) value: {x!r}")

    def parse(self, text: str):
        if text == "0":
            return 0
        if text == "1":
            return 1
        raise ParseError(f"GF(2) accepts only the tokens 0 and 1, got {text!r}")

    def elements(self):
        yield 0
        yield 1

    def random(self, rng):
        return rng.randrange(2)


class _PrimeField(Field):
    kind = "gfp"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"GF(p) needs a prime modulus, got {p}")
        self.p = p
        self.order = p

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    @property
    def tag(self) -> str:
        return f"gfp:{self.p}"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return pow(a, self.p - 2, self.p)

    def dot(self, u, v):
        return sum(map(operator.mul, u, v)) % self.p

    def submul_at(self, dst, offset, src, q):
        p = self.p
        j = offset
        for s in src:
            dst[j] = (dst[j] - q * s) % p
            j += 1

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatchError(f"expected {self.name}, got {x.field.name}")
            return x.value
        if isinstance(x, int) and not isinstance(x, bool):
            return x % self.p
        raise FieldError(f"not a {self.name} value: {x!r}")

    def parse(self, text: str):
        try:
            return int(text, 10) % self.p
        except ValueError:
            raise ParseError(f"not an integer for {self.name}: {text!r}") from None

    def elements(self):
        return iter(range(self.p))

    def random(self, rng):
        return rng.randrange(self.p)


class _Rationals(Field):
    kind = "q"
    order = None

    zero = Fraction(0)
    one = Fraction(1)

    @property
    def name(self) -> str:
        return "QQ"

    @property
    def tag(self) -> str:
        return "q"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return Fraction(a) / b

    def dot(self, u, v):
        acc = Fraction(0)
        for x, y in zip(u, v):
            acc += x * y
        return acc

    def submul_at(self, dst, offset, src, q):
        j = offset
        for s in src:
            dst[j] = dst[j] - q * s
            j += 1

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatchError(f"expected QQ, got {x.field.name}")
            return x.value
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Fraction(x)
        raise FieldError(f"not a rational value: {x!r}")

    def parse(self, text: str):
        if "." in text:
            raise ParseError(f"rationals are written a or a/b, got {text!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {text!r}") from None

    def random(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


GF2 = _GF2()
QQ = _Rationals()

_prime_fields: dict[int, _PrimeField] = {}


def GF(p: int) -> Field:
    """Return the field with p elements (p prime); GF(2) is a singleton."""
    if p == 2:
        return GF2
    f = _prime_fields.get(p)
    if f is None:
        f = _PrimeField(p)
        _prime_fields[p] = f
    return f


def field_from_tag(tag: str) -> Field:
    """Inverse of Field.tag: gf2, gfp:<p> or q."""
    if tag == "gf2":
        return GF2
    if tag == "q":
        return QQ
    if tag.startswith("gfp:"):
        return GF(int(tag[4:]))
    raise FieldError(f"unknown field tag {tag!r}")


class FieldElement:
    """One field scalar: a raw value plus the field it belongs to.

    Immutable and hashable.  Arithmetic between elements of different
    fields raises FieldMismatchError; plain ints (and Fractions over QQ)
    are coerced through the field on the fly.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot mix {self.field.name} and {other.field.name}"
                )
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    @property
    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except FieldError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"{self.field.name}({self})"


def parse_element(text: str, field: Field) -> FieldElement:
    """Parse a single token into an element of the given field."""
    return FieldElement(field, field.parse(text))
