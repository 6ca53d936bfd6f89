"""Genus-2 hyperelliptic Jacobian arithmetic and p-adic distance to the curve.

Curves are odd-degree models z^2 = f(t) with f monic quintic and squarefree,
embedded in the Jacobian via the single point at infinity.  Divisor classes
are carried in Mumford form (u, v) with u monic of degree <= 2 and u | v^2 - f,
over the rationals or over a residue ring Z/p^j.  The group law is Cantor
composition-and-reduction; divisions by non-units over Z/p^j raise
RepresentationDegenerate rather than guessing a representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    BudgetExceeded,
    HypothesisViolated,
    InvalidInput,
    NotPIntegral,
    RepresentationDegenerate,
    UnsupportedPrime,
)
from .logscale import LogScaledReal

_ENUM_BUDGET = 10**4


# ---------------------------------------------------------------------------
# Coefficient rings
# ---------------------------------------------------------------------------

class RationalField:
    """Exact rational coefficients (Fraction)."""

    modulus = None

    def coerce(self, x):
        return Fraction(x)

    def is_unit(self, x):
        return x != 0

    def inv(self, x):
        if x == 0:
            raise RepresentationDegenerate("division by zero over Q")
        return Fraction(1, 1) / x

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class ResidueRing:
    """Z/m with m = p^j; units are residues coprime to p."""

    def __init__(self, p: int, j: int):
        if j < 1:
            raise InvalidInput("exponent j must be >= 1")
        self.p = p
        self.j = j
        self.modulus = p**j

    def coerce(self, x):
        if isinstance(x, Fraction):
            if gcd(x.denominator, self.p) != 1:
                raise NotPIntegral(
                    f"denominator {x.denominator} not coprime to {self.p}"
                )
            return x.numerator * pow(x.denominator, -1, self.modulus) % self.modulus
        return int(x) % self.modulus

    def is_unit(self, x):
        return gcd(int(x), self.p) == 1

    def inv(self, x):
        if not self.is_unit(x):
            raise RepresentationDegenerate(
                f"{x} is not a unit modulo {self.p}^{self.j}"
            )
        return pow(int(x), -1, self.modulus)

    def __eq__(self, other):
        return isinstance(other, ResidueRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("Zmod", self.modulus))

    def __repr__(self):
        return f"Z/{self.p}^{self.j}"


QQ = RationalField()


# ---------------------------------------------------------------------------
# Dense polynomial helpers (tuples, low degree first) over a ring
# ---------------------------------------------------------------------------

def ptrim(R, a):
    a = list(a)
    while a and a[-1] == R.coerce(0):
        a.pop()
    return tuple(a)


def padd(R, a, b):
    n = max(len(a), len(b))
    zero = R.coerce(0)
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else zero
        y = b[i] if i < len(b) else zero
        s = x + y
        out.append(s % R.modulus if R.modulus else s)
    return ptrim(R, out)


def pneg(R, a):
    return tuple((-x) % R.modulus if R.modulus else -x for x in a)


def psub(R, a, b):
    return padd(R, a, pneg(R, b))


def pmul(R, a, b):
    if not a or not b:
        return ()
    out = [R.coerce(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
            if R.modulus:
                out[i + j] %= R.modulus
    return ptrim(R, out)


def pscale(R, c, a):
    return ptrim(
        R, tuple((c * x) % R.modulus if R.modulus else c * x for x in a)
    )


def pdivmod(R, a, b):
    """Euclidean division; requires the leading coefficient of b to be a unit."""
    if not b:
        raise RepresentationDegenerate("polynomial division by zero")
    inv_lc = R.inv(b[-1])
    a = list(a)
    q = [R.coerce(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        if a[-1] == R.coerce(0):
            a.pop()
            continue
        c = a[-1] * inv_lc
        if R.modulus:
            c %= R.modulus
        d = len(a) - len(b)
        q[d] = c
        for i, x in enumerate(b):
            a[d + i] = a[d + i] - c * x
            if R.modulus:
                a[d + i] %= R.modulus
        a.pop()
    return ptrim(R, q), ptrim(R, a)


def pmod(R, a, b):
    return pdivmod(R, a, b)[1]


def pxgcd(R, a, b):
    """Monic extended gcd: returns (d, s, t) with s*a + t*b = d."""
    r0, r1 = ptrim(R, a), ptrim(R, b)
    s0, s1 = (R.coerce(1),), ()
    t0, t1 = (), (R.coerce(1),)
    while r1:
        q, r = pdivmod(R, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(R, s0, pmul(R, q, s1))
        t0, t1 = t1, psub(R, t0, pmul(R, q, t1))
    if r0:
        inv = R.inv(r0[-1])
        r0, s0, t0 = pscale(R, inv, r0), pscale(R, inv, s0), pscale(R, inv, t0)
    return r0, s0, t0


def peval(R, a, x):
    acc = R.coerce(0)
    for c in reversed(a):
        acc = acc * x + c
        if R.modulus:
            acc %= R.modulus
    return acc


def _resultant(a, b):
    """Resultant over Q by the Euclidean recurrence."""
    a, b = ptrim(QQ, a), ptrim(QQ, b)
    if not b:
        return Fraction(0)
    if len(b) == 1:
        return b[0] ** (len(a) - 1)
    r = pmod(QQ, a, b)
    if not r:
        return Fraction(0)
    da, db, dr = len(a) - 1, len(b) - 1, len(r) - 1
    return (-1) ** (da * db) * b[-1] ** (da - dr) * _resultant(b, r)


# ---------------------------------------------------------------------------
# Curve and divisors
# ---------------------------------------------------------------------------

class HyperellipticCurve:
    """z^2 = f(t) with f monic quintic over Z, squarefree."""

    def __init__(self, f_coeffs):
        f = tuple(int(c) for c in f_coeffs)
        if len(f) != 6 or f[-1] != 1:
            raise InvalidInput("f must be monic of degree exactly 5")
        self.f = f
        fq = tuple(Fraction(c) for c in f)
        dfq = tuple(Fraction(i * f[i]) for i in range(1, 6))
        disc = _resultant(fq, dfq)
        if disc == 0:
            raise InvalidInput("f must be squarefree")
        self.disc_f = int(disc)

    def f_in(self, R):
        return tuple(R.coerce(c) for c in self.f)

    def __repr__(self):
        return f"HyperellipticCurve(f={self.f})"


@dataclass(frozen=True)
class MumfordDivisor:
    """Reduced Mumford pair (u, v): u monic, deg u <= 2, u | v^2 - f."""

    u: tuple
    v: tuple
    ring: object

    def is_zero(self):
        return len(self.u) == 1

    def key(self):
        return (self.u, self.v)

    def __repr__(self):
        return f"MumfordDivisor(u={self.u}, v={self.v}, ring={self.ring})"


def make_divisor(curve: HyperellipticCurve, u, v, ring=QQ) -> MumfordDivisor:
    """Validate and build a reduced Mumford divisor over the given ring."""
    R = ring
    u = ptrim(R, tuple(R.coerce(c) for c in u))
    v = ptrim(R, tuple(R.coerce(c) for c in v))
    if not u or len(u) - 1 > 2:
        raise InvalidInput("u must be nonzero of degree <= 2")
    if not R.is_unit(u[-1]) or u[-1] != R.coerce(1):
        raise InvalidInput("u must be monic")
    if len(v) >= max(len(u), 2):
        raise InvalidInput("v must have degree < max(deg u, 1)")
    if len(u) == 1 and v:
        raise InvalidInput("the zero class carries v = 0")
    rem = pmod(R, psub(R, pmul(R, v, v), curve.f_in(R)), u)
    if rem:
        raise InvalidInput("u does not divide v^2 - f")
    return MumfordDivisor(u=u, v=v, ring=R)


def zero_divisor(ring=QQ) -> MumfordDivisor:
    return MumfordDivisor(u=(ring.coerce(1),), v=(), ring=ring)


def divisor_from_strings(curve: HyperellipticCurve, u_strs, v_strs) -> MumfordDivisor:
    """Build a rational divisor from 'num/den' coefficient strings (low to high)."""
    u = [Fraction(s) for s in u_strs]
    v = [Fraction(s) for s in v_strs]
    return make_divisor(curve, u, v, QQ)


# ---------------------------------------------------------------------------
# Group law (Cantor)
# ---------------------------------------------------------------------------

def add(curve: HyperellipticCurve, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    """Cantor composition followed by reduction to deg u <= 2."""
    if D1.ring != D2.ring:
        raise InvalidInput("divisors live over different rings")
    R = D1.ring
    f = curve.f_in(R)
    u1, v1 = D1.u, D1.v
    u2, v2 = D2.u, D2.v
    d1, e1, e2 = pxgcd(R, u1, u2)
    d, c1, c2 = pxgcd(R, d1, padd(R, v1, v2))
    s1 = pmul(R, c1, e1)
    s2 = pmul(R, c1, e2)
    s3 = c2
    u, rem = pdivmod(R, pmul(R, u1, u2), pmul(R, d, d))
    if rem:
        raise RepresentationDegenerate("composition denominator does not divide")
    num = padd(
        R,
        padd(R, pmul(R, pmul(R, s1, u1), v2), pmul(R, pmul(R, s2, u2), v1)),
        pmul(R, s3, padd(R, pmul(R, v1, v2), f)),
    )
    num_q, rem = pdivmod(R, num, d)
    if rem:
        raise RepresentationDegenerate("composition numerator does not divide")
    v = pmod(R, num_q, u)
    # reduction to genus-2 size
    while len(u) - 1 > 2:
        u_new = pdivmod(R, psub(R, f, pmul(R, v, v)), u)[0]
        u_new = pscale(R, R.inv(u_new[-1]), u_new)
        v = pmod(R, pneg(R, v), u_new)
        u = u_new
    if not u:
        u = (R.coerce(1),)
    elif u[-1] != R.coerce(1):
        u = pscale(R, R.inv(u[-1]), u)
    return MumfordDivisor(u=u, v=v, ring=R)


def neg(curve: HyperellipticCurve, D: MumfordDivisor) -> MumfordDivisor:
    """Hyperelliptic involution: (u, -v mod u)."""
    R = D.ring
    return MumfordDivisor(u=D.u, v=pmod(R, pneg(R, D.v), D.u), ring=R)


def scalar_mul(curve: HyperellipticCurve, n: int, D: MumfordDivisor) -> MumfordDivisor:
    """n*D by double-and-add; negative n via the involution."""
    if n < 0:
        return scalar_mul(curve, -n, neg(curve, D))
    acc = zero_divisor(D.ring)
    base = D
    while n:
        if n & 1:
            acc = add(curve, acc, base)
        n >>= 1
        if n:
            base = add(curve, base, base)
    return acc


def order_of(curve: HyperellipticCurve, D: MumfordDivisor, search_bound: int = 1000):
    """Smallest n >= 1 with n*D = 0, or the string 'exceeds-bound'."""
    acc = D
    for n in range(1, search_bound + 1):
        if acc.is_zero():
            return n
        acc = add(curve, acc, D)
    return "exceeds-bound"


# ---------------------------------------------------------------------------
# Reduction mod p^j and curve membership
# ---------------------------------------------------------------------------

def reduce_mod(curve: HyperellipticCurve, D: MumfordDivisor, p: int, j: int) -> MumfordDivisor:
    """Coefficient-wise reduction of a rational divisor into Z/p^j."""
    if D.ring != QQ:
        raise InvalidInput("reduce_mod expects a divisor over the rationals")
    if curve.disc_f % p == 0:
        raise UnsupportedPrime(f"{p} divides disc(f): bad reduction")
    R = ResidueRing(p, j)
    return make_divisor(curve, D.u, D.v, R)


def enumerate_curve_points_mod(curve: HyperellipticCurve, p: int, j: int):
    """All embedded curve points over Z/p^j: zero plus every (t - a, b) with
    b^2 = f(a).  Solutions found by a full square table over the ring."""
    mod = p**j
    if mod > _ENUM_BUDGET:
        raise BudgetExceeded(f"p^j = {mod} exceeds the enumeration budget")
    R = ResidueRing(p, j)
    squares: dict[int, list] = {}
    for b in range(mod):
        squares.setdefault(b * b % mod, []).append(b)
    out = [zero_divisor(R)]
    f = curve.f_in(R)
    for a in range(mod):
        c = peval(R, f, a)
        for b in squares.get(c, ()):
            out.append(MumfordDivisor(u=((-a) % mod, 1), v=(b,) if b else (), ring=R))
    return out


def on_curve_mod(curve: HyperellipticCurve, Dmod: MumfordDivisor, p: int, j: int) -> bool:
    """Is Dmod the image over Z/p^j of a point of the embedded curve?

    Fast path at j = 1 (field case): zero and degree-1 pairs are decided
    directly; a degree-2 u is off the curve unless it carries a double root a
    with v(a) = 0, in which case the conjugate pair is stripped and the class
    is the base point.  For j >= 2, membership is decided against the
    enumeration oracle (Mumford uniqueness over non-field rings is delicate).
    """
    R = Dmod.ring
    mod = R.modulus
    if Dmod.is_zero():
        return True
    if len(Dmod.u) == 2:
        a = (-Dmod.u[0]) % mod
        b = Dmod.v[0] if Dmod.v else 0
        return b * b % mod == peval(R, curve.f_in(R), a)
    if j == 1 and p > 2:
        u0, u1 = Dmod.u[0], Dmod.u[1]
        disc_u = (u1 * u1 - 4 * u0) % p
        if disc_u != 0:
            return False
        alpha = (-u1 * R.inv(2)) % p
        if peval(R, Dmod.v, alpha) == 0:
            # conjugate pair of a Weierstrass point: the class is the base point
            return True
        return False
    member_keys = {d.key() for d in enumerate_curve_points_mod(curve, p, j)}
    return Dmod.key() in member_keys


# ---------------------------------------------------------------------------
# p-adic valuation and distance
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PadicDistanceResult:
    """v_p and the distance d_p = p^(-v_p/e), kept as an exact pair."""

    p: int
    v_p: int
    at_least: bool = False   # true when membership still holds at j_max
    infinite: bool = False   # the class is itself a point of the embedded curve
    e: int = 1

    def d_p_exponent(self):
        if self.infinite:
            return None  # d_p is formally 0
        return Fraction(-self.v_p, self.e)


def vp_distance(curve: HyperellipticCurve, D: MumfordDivisor, p: int, j_max: int) -> PadicDistanceResult:
    """Largest j <= j_max with D mod p^j on the embedded curve (v_p >= 0 by
    convention); 'infinite' when D is the class of a curve point over Q."""
    if D.ring != QQ:
        raise InvalidInput("vp_distance expects a divisor over the rationals")
    if len(D.u) - 1 <= 1:
        return PadicDistanceResult(p=p, v_p=0, infinite=True)
    v = 0
    for j in range(1, j_max + 1):
        if on_curve_mod(curve, reduce_mod(curve, D, p, j), p, j):
            if v != j - 1:
                raise AssertionError("membership levels are not downward closed")
            v = j
        else:
            break
    return PadicDistanceResult(p=p, v_p=v, at_least=(v == j_max))


def jacobian_order_mod_p(curve: HyperellipticCurve, p: int) -> int:
    """#Jac(F_p) by brute enumeration of reduced Mumford pairs (p small)."""
    if p > 7:
        raise BudgetExceeded("brute-force Jacobian count restricted to p <= 7")
    R = ResidueRing(p, 1)
    f = curve.f_in(R)
    count = 1  # the zero class
    squares: dict[int, list] = {}
    for b in range(p):
        squares.setdefault(b * b % p, []).append(b)
    for a in range(p):
        count += len(squares.get(peval(R, f, a), ()))
    for u0 in range(p):
        for u1 in range(p):
            u = (u0, u1, 1)
            for v0 in range(p):
                for v1 in range(p):
                    v = ptrim(R, (v0, v1))
                    if not pmod(R, psub(R, pmul(R, v, v), f), u):
                        count += 1
    return count


# ---------------------------------------------------------------------------
# End-to-end verification harness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyRow:
    order: object
    v_p: int | None
    d_p: tuple | None            # (p, -v_p/e) as an exact pair
    bound_exponent_log10: object
    inequality_holds: bool | None
    rejected_reason: str | None = None


def verify_bound(curve: HyperellipticCurve, preset_data, torsion_list, p: int, j_max: int):
    """Check d_p(T, C) >= p^(-(1 + D*H_p)) on concrete off-curve torsion classes.

    Comparison happens on exponents in log scale; rows for torsion orders
    divisible by p are rejected (hypothesis (5)).
    """
    from .arakelov import constant_D
    from .bounds import admissible_prime, h_bound, tate_voloch_exponent_main

    if not admissible_prime(p, preset_data):
        raise HypothesisViolated(f"p = {p} is not an admissible prime for this curve")
    D_const = constant_D(preset_data)
    H_p = h_bound(p, preset_data.g, preset_data.deg_K0)
    exponent = tate_voloch_exponent_main(D_const, H_p)
    exp_log10 = exponent.log10()
    rows = []
    for T in torsion_list:
        n = order_of(curve, T, search_bound=1000)
        if n == "exceeds-bound":
            rows.append(
                VerifyRow(n, None, None, exp_log10, None, "order exceeds search bound")
            )
            continue
        if n % p == 0:
            rows.append(
                VerifyRow(n, None, None, exp_log10, None, "order divisible by p (hypothesis (5))")
            )
            continue
        res = vp_distance(curve, T, p, j_max)
        if res.infinite:
            continue  # T lies on the curve; the bound does not apply
        holds = LogScaledReal.from_int(res.v_p) <= exponent
        rows.append(
            VerifyRow(n, res.v_p, (p, res.d_p_exponent()), exp_log10, holds)
        )
    return rows
