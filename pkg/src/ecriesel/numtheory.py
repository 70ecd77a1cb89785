"""Integer and modular-arithmetic substrate for Riesel-form primality testing.

Everything here is exact integer arithmetic: Jacobi symbols, three-way
modular inversion (the divisor branch doubles as a factor extractor),
integer roots, the applicability gates for the elliptic tests, the
special-form fast reduction for moduli 2^k*n - 1, and the classical
baselines (trial division, Miller-Rabin, Lucas-Lehmer) used as oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd, isqrt

# Hard cap for exact trial-division answers.
ORACLE_LIMIT = 10**12

# First 12 primes; Composite answers are always exact, and at this base
# count the test is known exact far beyond anything this package feeds it.
# Used only as a prefilter or cross-check, never as the verdict of record.
MR_DEFAULT_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True, slots=True)
class FormCandidate:
    """An integer p = 2^k * n - 1 carried with its decomposition (k, n).

    k >= 2 and n odd force p = 3 (mod 4).  ``n_factors`` optionally records
    a known factorization of n (never computed here; factoring n is out of
    scope and the two-prime test needs it supplied).
    """

    k: int
    n: int
    n_factors: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.n < 1 or self.n % 2 == 0:
            raise ValueError("n must be a positive odd integer")
        if self.n_factors is not None:
            if math.prod(self.n_factors) != self.n:
                raise ValueError("n_factors does not multiply out to n")
            if any(f < 2 for f in self.n_factors):
                raise ValueError("n_factors entries must exceed 1")

    @property
    def p(self) -> int:
        return (self.n << self.k) - 1


@dataclass(frozen=True, slots=True)
class InverseOutcome:
    """Result of inverting a mod N.

    Exactly one of three shapes:
      * ``inverse`` set: a is a unit, a * inverse = 1 (mod N);
      * ``divisor`` set: gcd(a, N) is a proper divisor of N (data, not an
        error: this is the factor side-channel the curve layer relies on);
      * neither set: a = 0 (mod N), the whole modulus divides a.
    """

    inverse: int | None = None
    divisor: int | None = None

    @property
    def is_zero(self) -> bool:
        return self.inverse is None and self.divisor is None


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 3; 0 iff gcd(a, n) > 1."""
    if n < 3 or n % 2 == 0:
        raise ValueError("Jacobi symbol needs an odd modulus >= 3")
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def mod_inverse(a: int, n: int) -> InverseOutcome:
    """Invert a mod n, or report the proper divisor / zero outcome instead."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    a %= n
    g = gcd(a, n)
    if g == 1:
        return InverseOutcome(inverse=pow(a, -1, n))
    if g == n:
        return InverseOutcome()
    return InverseOutcome(divisor=g)


def iroot4(t: int) -> int:
    # floor(t^(1/4)) == isqrt(isqrt(t)) exactly for all t >= 0.
    return isqrt(isqrt(t))


def gate_small_n(c: FormCandidate) -> bool:
    """Whether the small-n test's prime verdict is justified for c.

    Integer form of the feasibility condition n * (p^(1/4) + 1)^2 < p.
    Conservative: p = 3 (mod 4) is never a fourth power, so
    p^(1/4) + 1 < iroot4(p) + 2 strictly, and passing the integer check
    implies the exact one.  A conservative failure falls back to the
    small-input oracle.
    """
    p = c.p
    r = iroot4(p) + 2
    return c.n * r * r <= p


def gate_large_n(c: FormCandidate) -> bool:
    """Same idea as gate_small_n for the large-n tests: 2^k (p^(1/4)+1)^2 < p."""
    p = c.p
    r = iroot4(p) + 2
    return (r * r << c.k) <= p


def reduce_special(t: int, c: FormCandidate) -> int:
    """t mod p for p = 2^k * n - 1, by shift-and-fold instead of division.

    2^k * n = 1 (mod p), so t = a * 2^k * n + b folds to a + b.  Each fold
    strictly shrinks t while t >= 2^k * n, and the final value lies in
    [0, p] with p itself mapping to 0.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    k, n = c.k, c.n
    block = n << k
    while t >= block:
        a = (t >> k) // n
        t = a + t - a * block
    return 0 if t == block - 1 else t


def trial_division(n: int, *, limit: int = ORACLE_LIMIT) -> int:
    """Least prime factor of n by trial division; n is prime iff result == n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > limit:
        raise ValueError(f"{n} exceeds the exact-oracle limit {limit}")
    if n % 2 == 0:
        return 2
    if n % 3 == 0:
        return 3
    f = 5
    while f * f <= n:
        if n % f == 0:
            return f
        if n % (f + 2) == 0:
            return f + 2
        f += 6
    return n


def is_prime_oracle(n: int, *, limit: int = ORACLE_LIMIT) -> bool:
    """Exact primality for n <= limit (trial division ground truth)."""
    if n < 2:
        return False
    return trial_division(n, limit=limit) == n


def miller_rabin(n: int, bases: tuple[int, ...] = MR_DEFAULT_BASES) -> bool:
    """Strong probable-prime test of odd n >= 3 against the given bases.

    False is always correct (some base is a compositeness witness); True
    means no listed base is a witness.  Bases outside [2, n-2] are skipped.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for b in bases:
        if not 2 <= b <= n - 2:
            continue
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def lucas_lehmer(k: int) -> bool:
    """Classical exact test of M_k = 2^k - 1: fold s -> s^2 - 2, k-2 times.

    M_k is prime iff the final residue is 0.  Valid for every k >= 3, prime
    exponent or not (a composite M_k can never survive to a zero residue).
    """
    if k < 3:
        raise ValueError("exponent must be at least 3")
    c = FormCandidate(k=k, n=1)
    m = c.p
    s = 4
    for _ in range(k - 2):
        # + m keeps the argument nonnegative when s in {0, 1}
        s = reduce_special(s * s - 2 + m, c)
    return s == 0


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    mark = bytearray([1]) * (limit + 1)
    mark[0] = mark[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if mark[i]:
            mark[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, m in enumerate(mark) if m]
