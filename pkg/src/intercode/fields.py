"""Exact arithmetic in finite fields GF(p^m) with p^m <= 2^20.

Elements are encoded as plain integers in ``range(p**m)``: the base-p digits
of the encoding are the coefficients of the residue polynomial, least
significant digit first.  For GF(4) = GF(2)[x]/(x^2+x+1) the encodings are
therefore 0, 1, 2 (= x) and 3 (= x+1), and enc(2)*enc(2) = enc(3).

Default modulus polynomials: degree-1 fields use x; for p^m <= 512 the
modulus is the Conway polynomial (frozen table below); above that, the monic
irreducible polynomial with the smallest integer encoding, found by brute
force.  A caller may also pass an explicit modulus.
"""
from __future__ import annotations

from typing import Iterable, Sequence

MAX_FIELD_ORDER = 1 << 20

# order up to which multiplication is served from exp/log tables
_TABLE_LIMIT = 1 << 16

# Conway polynomials for all prime powers p^m <= 512 with m >= 2, as
# little-endian coefficient tuples (constant term first, monic).  Degree-1
# defaults are handled separately (modulus x), so no m = 1 rows are kept.
CONWAY_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
    (17, 2): (3, 16, 1),
    (19, 2): (2, 18, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p), little-endian coefficient lists


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    deg = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, deg - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(deg):
                res[i - deg + j] = (res[i - deg + j] - c * mod[j]) % p
    res = res[:deg]
    while res and res[-1] == 0:
        res.pop()
    return res


def _poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    b = list(base)
    while e:
        if e & 1:
            result = _poly_mulmod(result, b, mod, p)
        b = _poly_mulmod(b, b, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while True:
        while a and a[-1] == 0:
            a.pop()
        while b and b[-1] == 0:
            b.pop()
        if not b:
            return a
        if len(a) < len(b):
            a, b = b, a
            continue
        inv = pow(b[-1], p - 2, p)
        while a and len(a) >= len(b):
            if a[-1] == 0:
                a.pop()
                continue
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for j in range(len(b)):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a


def is_irreducible_poly(coeffs: Sequence[int], p: int) -> bool:
    """Whether the monic polynomial with the given little-endian coefficients
    is irreducible over GF(p)."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        return False
    if m == 1:
        return True
    f = list(coeffs)
    x = [0, 1]
    if _poly_powmod(x, p**m, f, p) != x:
        return False
    for r in prime_factors(m):
        xe = _poly_powmod(x, p ** (m // r), f, p)
        diff = list(xe) + [0] * max(0, 2 - len(xe))
        diff[1] = (diff[1] - 1) % p
        while diff and diff[-1] == 0:
            diff.pop()
        if len(_poly_gcd(diff, f, p)) - 1 > 0:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over GF(p) with the smallest integer
    encoding of its lower coefficients (brute force)."""
    for t in range(p**m):
        coeffs = []
        tt = t
        for _ in range(m):
            coeffs.append(tt % p)
            tt //= p
        coeffs.append(1)
        if is_irreducible_poly(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------


class FieldSpec:
    """GF(p^m) with arithmetic on integer-encoded elements.

    Equality and hashing are by (p, m, modulus), so specs built twice with the
    same parameters are interchangeable.  Multiplication uses exp/log tables
    (built lazily) for orders up to 2^16 and falls back to direct polynomial
    arithmetic above that.
    """

    __slots__ = ("p", "m", "order", "modulus", "_exp", "_log")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = modulus
        self._exp: list[int] | None = None
        self._log: list[int] | None = None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={self.modulus})"

    # -- encoding helpers

    def digits(self, a: int) -> tuple[int, ...]:
        """Base-p digits of an encoding = polynomial coefficients, length m."""
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_digits(self, coeffs: Iterable[int]) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + c % self.p
        return a

    def elements(self) -> range:
        return range(self.order)

    def units(self) -> range:
        return range(1, self.order)

    def check_element(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not an element encoding of GF({self.order})")
        return a

    # -- arithmetic

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        while a:
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        if self.order <= _TABLE_LIMIT:
            exp, log = self._tables()
            return exp[(log[a] + log[b]) % (self.order - 1)]
        return self._polymul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self.order <= _TABLE_LIMIT:
            exp, log = self._tables()
            return exp[(self.order - 1 - log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # -- internals

    def _polymul(self, a: int, b: int) -> int:
        prod = _poly_mulmod(self.digits(a), self.digits(b), self.modulus, self.p)
        return self.from_digits(prod + [0] * (self.m - len(prod)))

    def _tables(self) -> tuple[list[int], list[int]]:
        if self._exp is None:
            self._build_tables()
        assert self._exp is not None and self._log is not None
        return self._exp, self._log

    def _build_tables(self) -> None:
        q = self.order
        for g in range(2, q):
            exp = [1] * (q - 1)
            acc = 1
            ok = True
            for i in range(1, q - 1):
                acc = self._polymul(acc, g)
                if acc == 1:  # order of g divides i < q-1
                    ok = False
                    break
                exp[i] = acc
            if ok and self._polymul(acc, g) == 1:
                log = [0] * q
                for i, v in enumerate(exp):
                    log[v] = i
                self._exp = exp
                self._log = log
                return
        raise AssertionError(f"no multiplicative generator found for {self!r}")


_FIELD_CACHE: dict[tuple[int, int, tuple[int, ...] | None], FieldSpec] = {}


def field_from_order(q: int) -> FieldSpec:
    """GF(q) with the default modulus, for q = p^m a prime power."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    p = min(prime_factors(q))
    m = 0
    n = q
    while n % p == 0:
        n //= p
        m += 1
    if n != 1:
        raise ValueError(f"{q} is not a prime power")
    return field_make(p, m)


def field_make(p: int, m: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Construct GF(p^m).

    ``modulus`` is a little-endian coefficient sequence of a monic irreducible
    degree-m polynomial over GF(p); when omitted the designated default is
    used (x for m = 1, the Conway polynomial for p^m <= 512, otherwise the
    smallest-encoding irreducible).
    """
    key = (p, m, tuple(modulus) if modulus is not None else None)
    cached = _FIELD_CACHE.get(key)
    if cached is not None:
        return cached

    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_ORDER:
        raise ValueError(f"field order {p}^{m} exceeds the supported maximum 2^20")

    if modulus is None:
        if m == 1:
            mod = (0, 1)
        elif p**m <= 512:
            mod = CONWAY_POLYNOMIALS[(p, m)]
        else:
            mod = smallest_irreducible(p, m)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}, got {modulus!r}")
        if m > 1 and not is_irreducible_poly(mod, p):
            raise ValueError(f"modulus {modulus!r} is reducible over GF({p})")

    spec = FieldSpec(p, m, mod)
    _FIELD_CACHE[key] = spec
    return spec
