"""Exact arithmetic in the cyclotomic field Q(z), z a primitive n-th root of unity.

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) of
Q[x]/(Phi_n(x)) with :class:`gmpy2.mpq` coordinates, so every value has a
unique representation and equality is coordinatewise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from gmpy2 import mpq

__all__ = [
    "Cyc",
    "cyclotomic_poly",
    "make_root",
    "arith",
    "qbinom",
    "qbinom_product",
    "ZERO_COORD",
]

ZERO_COORD = mpq(0)
_ONE_COORD = mpq(1)


# ---------------------------------------------------------------------------
# polynomials over Q, coefficient lists, lowest degree first

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a, b):
    out = [ZERO_COORD] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [ZERO_COORD] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_divmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [ZERO_COORD] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        quot[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a = _trim(a)
    return _trim(quot), a


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    p = [mpq(-1)] + [ZERO_COORD] * (n - 1) + [_ONE_COORD]
    for d in range(1, n):
        if n % d == 0:
            p, rem = _poly_divmod(p, [mpq(c) for c in cyclotomic_poly(d)])
            assert not rem
    assert all(c.denominator == 1 for c in p)
    return tuple(int(c) for c in p)


@lru_cache(maxsize=None)
def _field(n: int):
    """(degree, reduction table) for Q(z_n); table[k] is x^k mod Phi_n."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    table = []
    cur = [0] * deg
    if deg:
        cur[0] = 1
    for _ in range(max(2 * deg - 1, 1)):
        table.append(tuple(cur))
        # multiply by x and reduce using x^deg = -sum phi[i] x^i
        top = cur[-1] if deg else 0
        cur = [0] + cur[:-1] if deg else []
        for i in range(deg):
            cur[i] -= top * phi[i]
    return deg, tuple(table)


def _coerce_rational(x):
    if isinstance(x, bool):
        raise TypeError("bool is not a field element")
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if type(x).__name__ == "mpq" or isinstance(x, Rational):
        return mpq(x)
    return None


class Cyc:
    """An element of Q(z_n) in canonical power-basis form.

    >>> z = make_root(4)
    >>> z * z
    Cyc(4, '-1')
    """

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coeffs=()):
        deg, _ = _field(n)
        c = [_coerce_rational(x) for x in coeffs]
        if any(x is None for x in c):
            raise TypeError("coordinates must be rational")
        if len(c) > deg:
            c = _reduce(n, c)
        c = c + [ZERO_COORD] * (deg - len(c))
        self.n = n
        self.c = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, n, c):
        obj = object.__new__(cls)
        obj.n = n
        obj.c = c
        obj._hash = None
        return obj

    @classmethod
    def const(cls, n: int, value) -> "Cyc":
        deg, _ = _field(n)
        v = _coerce_rational(value)
        if v is None:
            raise TypeError(f"cannot embed {value!r} into Q(z_{n})")
        return cls._raw(n, (v,) + (ZERO_COORD,) * (deg - 1))

    @classmethod
    def zero(cls, n: int) -> "Cyc":
        return cls.const(n, 0)

    @classmethod
    def one(cls, n: int) -> "Cyc":
        return cls.const(n, 1)

    @classmethod
    def root_power(cls, n: int, k: int) -> "Cyc":
        """z_n ** k for any integer k."""
        return _root_power(n, k % n)

    @classmethod
    def from_poly(cls, n: int, coeffs) -> "Cyc":
        """Reduce the polynomial sum coeffs[i] x^i modulo Phi_n."""
        c = [_coerce_rational(x) for x in coeffs]
        return cls._raw(n, tuple(_reduce_full(n, c)))

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        x = self.c[0]
        return Fraction(int(x.numerator), int(x.denominator))

    # -- arithmetic ---------------------------------------------------------
    def _other(self, other):
        if isinstance(other, Cyc):
            if other.n != self.n:
                raise ValueError(f"modulus mismatch: Q(z_{self.n}) vs Q(z_{other.n})")
            return other
        v = _coerce_rational(other)
        if v is None:
            return NotImplemented
        return Cyc.const(self.n, v)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Cyc._raw(self.n, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Cyc._raw(self.n, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Cyc._raw(self.n, tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, Cyc):
            if other.n != self.n:
                raise ValueError(f"modulus mismatch: Q(z_{self.n}) vs Q(z_{other.n})")
            return _mul(self, other)
        v = _coerce_rational(other)
        if v is None:
            return NotImplemented
        return Cyc._raw(self.n, tuple(a * v for a in self.c))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(z_%d)" % self.n)
        if self.is_rational():
            return Cyc.const(self.n, 1 / self.c[0])
        phi = [mpq(x) for x in cyclotomic_poly(self.n)]
        # invariant: r_i = s_i * a  (mod phi)
        r0, r1 = phi, _trim(self.c)
        s0, s1 = [], [_ONE_COORD]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element not invertible (Phi_n reducible?)")
        c = r1[0]
        return Cyc.from_poly(self.n, [x / c for x in s1])

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Cyc":
        """Image under the automorphism z -> z^-1."""
        total = Cyc.zero(self.n)
        for i, a in enumerate(self.c):
            if a:
                total = total + _root_power(self.n, (-i) % self.n) * a
        return total

    # -- comparison / hashing -----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyc):
            return self.n == other.n and self.c == other.c
        v = _coerce_rational(other) if not isinstance(other, bool) else None
        if v is None:
            return NotImplemented
        return self.c[0] == v and not any(self.c[1:])

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(int(self.c[0].numerator), int(self.c[0].denominator)))
            else:
                self._hash = hash((self.n, self.c))
        return self._hash

    # -- text form ------------------------------------------------------------
    def __str__(self):
        terms = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            mag = abs(a)
            sign = "-" if a < 0 else "+"
            if i == 0:
                body = str(mag)
            else:
                mono = "z" if i == 1 else f"z^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Cyc({self.n}, {str(self)!r})"

    @classmethod
    def parse(cls, n: int, text: str) -> "Cyc":
        """Inverse of ``str``: parse ``'1/2 + 3*z^2'``-style text."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty field element")
        if s[0] not in "+-":
            s = "+" + s
        terms = []
        i = 0
        while i < len(s):
            j = i + 1
            while j < len(s) and s[j] not in "+-":
                j += 1
            terms.append(s[i:j])
            i = j
        coeffs: dict[int, mpq] = {}
        for t in terms:
            sign = -1 if t[0] == "-" else 1
            body = t[1:]
            if "z" in body:
                coef_txt, _, mono = body.partition("z") if "*" not in body else body.partition("*z")
                coef_txt = coef_txt.rstrip("*")
                coef = mpq(coef_txt) if coef_txt else _ONE_COORD
                power = int(mono[1:]) if mono.startswith("^") else 1
            else:
                coef, power = mpq(body), 0
            coeffs[power] = coeffs.get(power, ZERO_COORD) + sign * coef
        size = max(coeffs) + 1
        return cls.from_poly(n, [coeffs.get(k, ZERO_COORD) for k in range(size)])


def _reduce(n, c):
    deg, table = _field(n)
    if len(c) <= deg:
        return list(c)
    return _reduce_full(n, c)


def _reduce_full(n, c):
    deg, table = _field(n)
    if deg == 0:
        return []
    out = [ZERO_COORD] * deg
    for k, a in enumerate(c):
        if not a:
            continue
        if k < len(table):
            row = table[k]
        else:
            row = _power_row(n, k)
        for i, t in enumerate(row):
            if t:
                out[i] += a * t
    return out


def _power_row(n, k):
    return _slow_power_row(n, k % n)


@lru_cache(maxsize=None)
def _slow_power_row(n, k):
    deg, table = _field(n)
    phi = cyclotomic_poly(n)
    cur = list(table[0])
    for _ in range(k):
        top = cur[-1]
        cur = [0] + cur[:-1]
        for i in range(deg):
            cur[i] -= top * phi[i]
    return tuple(cur)


def _mul(a: Cyc, b: Cyc) -> Cyc:
    ca, cb = a.c, b.c
    deg = len(ca)
    if deg == 1:
        return Cyc._raw(a.n, (ca[0] * cb[0],))
    if not any(cb[1:]):
        s = cb[0]
        return Cyc._raw(a.n, tuple(x * s for x in ca))
    if not any(ca[1:]):
        s = ca[0]
        return Cyc._raw(a.n, tuple(y * s for y in cb))
    nza = [(i, x) for i, x in enumerate(ca) if x]
    nzb = [(j, y) for j, y in enumerate(cb) if y]
    if not nza or not nzb:
        return Cyc.zero(a.n)
    prod = [ZERO_COORD] * (2 * deg - 1)
    for i, x in nza:
        for j, y in nzb:
            prod[i + j] += x * y
    _, table = _field(a.n)
    out = list(prod[:deg])
    for k in range(deg, 2 * deg - 1):
        p = prod[k]
        if p:
            for i, t in enumerate(table[k]):
                if t:
                    out[i] += p * t
    return Cyc._raw(a.n, tuple(out))


@lru_cache(maxsize=None)
def _root_power(n: int, k: int) -> Cyc:
    deg, _ = _field(n)
    if deg == 0:
        raise ValueError("degenerate field")
    row = _slow_power_row(n, k)
    return Cyc._raw(n, tuple(mpq(x) for x in row))


def make_root(n: int) -> Cyc:
    """The canonical primitive n-th root of unity z_n (the class of x); 1 when n = 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"make_root needs a positive integer, got {n!r}")
    return _root_power(n, 1 % n)


def arith(a: Cyc, b: Cyc, op: str) -> Cyc:
    """Named binary operation: one of ``add``, ``sub``, ``mul``, ``div``."""
    if a.n != b.n:
        raise ValueError(f"modulus mismatch: {a.n} vs {b.n}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero in Q(z_%d)" % a.n)
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def qbinom(m: int, k: int, q):
    """Gaussian binomial [m choose k]_q by the division-free Pascal recurrence.

    ``C(m, k) = C(m-1, k-1) + q^k C(m-1, k)``.  Works for any ring element q
    (Cyc, int, Fraction); at roots of unity the q-factorials vanish, which is
    why no division is used.
    """
    if m < 0 or k < 0:
        raise ValueError("qbinom needs nonnegative arguments")
    if k > m:
        raise ValueError(f"qbinom: k={k} exceeds m={m}")
    one = q ** 0 if not isinstance(q, Cyc) else Cyc.one(q.n)
    powers = [one]
    for _ in range(m):
        powers.append(powers[-1] * q)
    row = [one]
    for i in range(1, m + 1):
        new = [one] * (i + 1)
        for j in range(1, i):
            new[j] = row[j - 1] + powers[j] * row[j]
        row = new
    return row[k]


def qbinom_product(m: int, k: int, q):
    """Product formula prod_{i=1..k} (1 - q^(m-k+i)) / (1 - q^i).

    Only meaningful where no denominator factor vanishes; used as a test oracle.
    """
    if k > m:
        raise ValueError(f"qbinom: k={k} exceeds m={m}")
    num = Fraction(1)
    den = Fraction(1)
    for i in range(1, k + 1):
        num *= 1 - Fraction(q) ** (m - k + i)
        den *= 1 - Fraction(q) ** i
    if den == 0:
        raise ZeroDivisionError("product formula degenerates at this q")
    return num / den
