"""The Rueppel sequence and its specialized machinery.

The Rueppel sequence is the binary sequence with ones exactly at the
indices 2^k - 1: it starts 1, 1, 0, 1, 0, 0, 0, 1, ...  Its linear
complexity profile is perfect, lambda of the first n terms is
floor((n + 1) / 2), and the annihilator pair construction specializes on
it to a loop with no field multiplications or divisions at all: the
update is gated purely by the parity of the loop index (``ralg``).

Everything here works on bit-packed GF(2) polynomials: a homogeneous
form of known degree is a Python int whose bit i is the coefficient of
x^i (the z-exponents are implied by homogeneity), so adding forms is
XOR, multiplying by x is a left shift, and multiplying by z just raises
the recorded degree.  That packing is what makes the desk-scale sweeps
(n up to 2^15) fast.

Also here: the two-by-two matrix recurrence that replays the same pair
by accumulated products, the closed form of the leading generator at
power-of-two sizes, and the quadratic extension identity that certifies
the dehomogenized generators against the ring GF(2)[x][rho] with
rho^2 = x rho + 1 (rho is invertible there, with inverse rho + x).
"""

from __future__ import annotations

from typing import NamedTuple

from .bivariate import Form, InverseForm
from .field import GF2, FieldError
from .vop_engine import VOP, synthesize

__all__ = [
    "rueppel_sequence",
    "rueppel_bits",
    "rueppel_inverse_form",
    "rueppel_basis",
    "synthesize_rueppel",
    "pack_bits",
    "unpack_bits",
    "PackedForm",
    "ralg",
    "ralg_packed",
    "ralg_lambda_sweep",
    "closed_form",
    "matrix_recurrence",
    "delta_parity_check",
    "clmul",
    "QuadExt",
    "quad_ext_identity",
    "quad_ext_sweep",
]


def rueppel_bits(n: int) -> int:
    """The first n Rueppel bits packed into an int (bit i = r_i)."""
    if n < 1:
        raise FieldError("need n >= 1")
    mask = 0
    k = 1  # 2^0
    while k - 1 < n:
        mask |= 1 << (k - 1)
        k <<= 1
    return mask


def rueppel_sequence(n: int) -> list[int]:
    """The first n Rueppel bits as a list of 0/1 ints."""
    return unpack_bits(rueppel_bits(n), n)


def rueppel_inverse_form(n: int) -> InverseForm:
    """Inverse form of the first n Rueppel bits over GF(2)."""
    return InverseForm(GF2, rueppel_sequence(n))


def rueppel_basis() -> tuple[Form, Form]:
    """The distinguished starting pair (x + z, z) for the one-bit prefix.

    Both (x, z) and (x + z, z) generate the annihilators of a single
    nonzero bit; starting from the latter is what makes every generator
    evaluate to 1 at (0, 1) and the discrepancies come out as the parity
    of the step index.
    """
    return Form(GF2, [1, 1]), Form(GF2, [1, 0])


def synthesize_rueppel(n: int):
    """Run the generic engine on the first n Rueppel bits from the
    distinguished basis; returns (vop, profile)."""
    return synthesize(rueppel_inverse_form(n), basis=rueppel_basis())


def pack_bits(bits) -> int:
    """Pack an iterable of 0/1 into an int, index i at bit i."""
    mask = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise FieldError(f"not a bit: {b!r}")
        mask |= b << i
    return mask


def unpack_bits(mask: int, n: int) -> list[int]:
    return [(mask >> i) & 1 for i in range(n)]


class PackedForm(NamedTuple):
    """Bit-packed homogeneous GF(2) form: bit i of mask is the x^i
    coefficient, deg is the total degree."""

    mask: int
    deg: int

    def to_form(self) -> Form:
        return Form(GF2, unpack_bits(self.mask, self.deg + 1))


def _packed_vop(f: PackedForm, g: PackedForm) -> VOP:
    return VOP(f.to_form(), g.to_form())


def _ralg_packed_state(n: int):
    if n < 1:
        raise FieldError("need n >= 1")
    f_mask, f_deg = 0b11, 1  # x + z
    g_mask, g_deg = 0b01, 1  # z
    for i in range(n - 1):
        if i & 1:
            f_mask, f_deg, g_mask, g_deg = (f_mask << 1) ^ g_mask, f_deg + 1, f_mask, f_deg
        g_deg += 1  # times z
    return f_mask, f_deg, g_mask, g_deg


def ralg_packed(n: int) -> tuple[PackedForm, PackedForm]:
    """Division-free pair construction for the first n Rueppel bits.

    Starts from (x + z, z) and per consumed term does at most one
    parity-gated update f <- x f + g, g <- old f, followed by g <- z g.
    No sequence storage, no multiplications, no divisions.
    """
    f_mask, f_deg, g_mask, g_deg = _ralg_packed_state(n)
    return PackedForm(f_mask, f_deg), PackedForm(g_mask, g_deg)


def ralg(n: int) -> VOP:
    """Like :func:`ralg_packed` but returning ordinary forms."""
    f, g = ralg_packed(n)
    return _packed_vop(f, g)


def ralg_lambda_sweep(max_n: int) -> list[int]:
    """Linear complexity of every Rueppel prefix up to max_n.

    One incremental run; entry i is lambda of the first i + 1 bits.
    """
    if max_n < 1:
        raise FieldError("need max_n >= 1")
    out = [1]
    f_mask, f_deg, g_mask, g_deg = 0b11, 1, 0b01, 1
    for i in range(max_n - 1):
        if i & 1:
            f_mask, f_deg, g_mask, g_deg = (f_mask << 1) ^ g_mask, f_deg + 1, f_mask, f_deg
        g_deg += 1
        out.append(f_deg)
    return out


def closed_form(l: int) -> Form:
    """The leading generator for 2l Rueppel bits when l is a power of two:
    x^l plus the sum of x^(l - 2^j) z^(2^j) over 0 <= j <= log2(l)."""
    if l < 1 or l & (l - 1):
        raise FieldError(f"need a power of two, got {l}")
    mask = 1 << l
    p = 1
    while p <= l:
        mask |= 1 << (l - p)
        p <<= 1
    return PackedForm(mask, l).to_form()


# -- matrix recurrence -----------------------------------------------------

# matrix entries are (mask, deg) pairs; None encodes the zero form
def _ent_add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if a[1] != b[1]:
        raise AssertionError("inhomogeneous matrix entry")
    m = a[0] ^ b[0]
    return (m, a[1]) if m else None


def _ent_x(a):
    return None if a is None else (a[0] << 1, a[1] + 1)


def _ent_z(a):
    return None if a is None else (a[0], a[1] + 1)


def matrix_recurrence(n: int) -> VOP:
    """Replay the pair for n Rueppel bits as a row vector times an
    accumulated product of step matrices.

    The step matrix is diag(1, z) at even steps and ((x, z), (1, 0)) at
    odd ones; the product is accumulated entrywise over packed forms and
    applied once to the starting row (x + z, z).  Must agree bit for bit
    with :func:`ralg`.
    """
    if n < 1:
        raise FieldError("need n >= 1")
    # accumulated product, row-major 2x2, starting from the identity
    p11, p12, p21, p22 = (1, 0), None, None, (1, 0)
    for i in range(n - 1):
        if i & 1:
            # right-multiply by U = ((x, z), (1, 0))
            p11, p12 = _ent_add(_ent_x(p11), p12), _ent_z(p11)
            p21, p22 = _ent_add(_ent_x(p21), p22), _ent_z(p21)
        else:
            # right-multiply by E = diag(1, z)
            p12 = _ent_z(p12)
            p22 = _ent_z(p22)
    # row (x + z, z) times the product
    def xz_times(a):  # (x + z) * entry
        return None if a is None else ((a[0] << 1) ^ a[0], a[1] + 1)

    f_ent = _ent_add(xz_times(p11), _ent_z(p21))
    g_ent = _ent_add(xz_times(p12), _ent_z(p22))
    if f_ent is None or g_ent is None:
        raise AssertionError("matrix recurrence produced a zero generator")
    return _packed_vop(PackedForm(*f_ent), PackedForm(*g_ent))


# -- parity of the discrepancies -------------------------------------------


def delta_parity_check(n: int) -> bool:
    """Run the generic engine on the first n Rueppel bits (from the
    distinguished basis) and test that the discrepancy at step k is
    exactly the parity of k, with d = 1 whenever k is odd."""
    if n < 2:
        raise FieldError("need n >= 2")
    _, profile = synthesize_rueppel(n)
    for entry in profile:
        if entry.delta is None:
            continue
        if entry.delta != entry.k % 2:
            return False
        if entry.k % 2 == 1 and entry.d != 1:
            return False
    return True


# -- the quadratic extension ------------------------------------------------


def clmul(a: int, b: int) -> int:
    """Carryless product of two bit-packed GF(2) polynomials."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


class QuadExt(NamedTuple):
    """Element a(x) + b(x) rho of GF(2)[x][rho] with rho^2 = x rho + 1.

    Components are bit-packed GF(2)[x] polynomials.  rho has the
    polynomial inverse rho + x, so all powers rho^k and rho^-k stay in
    this ring.
    """

    a: int
    b: int

    def __mul__(self, other: "QuadExt") -> "QuadExt":
        if not isinstance(other, QuadExt):
            return NotImplemented
        ac = clmul(self.a, other.a)
        bd = clmul(self.b, other.b)
        ad_bc = clmul(self.a, other.b) ^ clmul(self.b, other.a)
        # rho^2 = x rho + 1 folds the bd rho^2 term back down
        return QuadExt(ac ^ bd, ad_bc ^ (bd << 1))

    def __add__(self, other: "QuadExt") -> "QuadExt":
        if not isinstance(other, QuadExt):
            return NotImplemented
        return QuadExt(self.a ^ other.a, self.b ^ other.b)

    def pow(self, e: int) -> "QuadExt":
        """Square and multiply; e >= 0."""
        result = QuadExt(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


RHO = QuadExt(0, 1)
RHO_INV = QuadExt(0b10, 1)  # x + rho


def _eta(k: int) -> QuadExt:
    """(1 + rho) rho^k + (1 + rho^-1) rho^-k."""
    one_plus_rho = QuadExt(1, 1)
    one_plus_rho_inv = QuadExt(1, 0) + RHO_INV
    return one_plus_rho * RHO.pow(k) + one_plus_rho_inv * RHO_INV.pow(k)


def _eta_checks(k: int, eta: QuadExt) -> bool:
    if eta.b != 0:
        return False
    poly = eta.a
    if poly & 1:
        return False  # x must divide it
    if poly.bit_length() - 1 != k + 1:
        return False
    f, _ = ralg_packed(2 * k)
    return poly == f.mask << 1  # equals x times the dehomogenized generator


def quad_ext_identity(k: int) -> bool:
    """Certify x f(x, 1) = (1 + rho) rho^k + (1 + rho^-1) rho^-k for the
    leading generator f of 2k Rueppel bits: the rho component vanishes,
    the rest is an x-divisible polynomial of degree k + 1 equal to x
    times the dehomogenized generator."""
    if k < 1:
        raise FieldError("need k >= 1")
    return _eta_checks(k, _eta(k))


def quad_ext_sweep(max_k: int) -> bool:
    """Run the identity for every k up to max_k, sharing the power
    ladder (one multiplication by rho and rho^-1 per step)."""
    if max_k < 1:
        raise FieldError("need max_k >= 1")
    one_plus_rho = QuadExt(1, 1)
    one_plus_rho_inv = QuadExt(1, 0) + RHO_INV
    rk = QuadExt(1, 0)
    rmk = QuadExt(1, 0)
    f_mask, f_deg, g_mask, g_deg = 0b11, 1, 0b01, 1  # packed pair, 1 bit in
    consumed = 1
    for k in range(1, max_k + 1):
        rk = rk * RHO
        rmk = rmk * RHO_INV
        eta = one_plus_rho * rk + one_plus_rho_inv * rmk
        while consumed < 2 * k:
            i = consumed - 1
            if i & 1:
                f_mask, f_deg, g_mask, g_deg = (
                    (f_mask << 1) ^ g_mask,
                    f_deg + 1,
                    f_mask,
                    f_deg,
                )
            g_deg += 1
            consumed += 1
        if eta.b != 0 or eta.a != f_mask << 1 or eta.a & 1:
            return False
        if eta.a.bit_length() - 1 != k + 1:
            return False
    return True
