"""Exact positive rationals kept as prime-to-exponent maps.

Keeping values factored makes p-adic valuations loss-free: the sum-formula
multiplicities are read off directly as negated exponents, with no reduction
or gcd step in between.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from math import isqrt

FACTORIZATION_BOUND = 10**9


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; n must lie in [1, 10^9]."""
    if not 1 <= n <= FACTORIZATION_BOUND:
        raise ValueError(f"expected an integer in [1, {FACTORIZATION_BOUND}], got {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class FactoredRational:
    """A positive rational as a map prime -> nonzero integer exponent.

    The unit 1 is the empty map. Instances are immutable and hashable;
    arithmetic returns new instances.
    """

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if factors:
            for p, e in factors.items():
                p, e = int(p), int(e)
                if e == 0:
                    continue
                if not is_prime(p):
                    raise ValueError(f"factor base {p} is not prime")
                clean[p] = e
        self._factors = clean

    @classmethod
    def one(cls) -> "FactoredRational":
        return cls()

    @classmethod
    def from_ratio(cls, num: int, den: int) -> "FactoredRational":
        """num/den in lowest terms; exponent arithmetic cancels common factors."""
        result = cls()
        factors = factorize(num)
        for p, e in factorize(den).items():
            factors[p] = factors.get(p, 0) - e
        result._factors = {p: e for p, e in factors.items() if e != 0}
        return result

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    @property
    def is_unit(self) -> bool:
        return not self._factors

    def mul(self, other: "FactoredRational") -> "FactoredRational":
        merged = dict(self._factors)
        for p, e in other._factors.items():
            merged[p] = merged.get(p, 0) + e
        result = FactoredRational()
        result._factors = {p: e for p, e in merged.items() if e != 0}
        return result

    __mul__ = mul

    def inv(self) -> "FactoredRational":
        result = FactoredRational()
        result._factors = {p: -e for p, e in self._factors.items()}
        return result

    def pow_sign(self, sign: int) -> "FactoredRational":
        """Identity for sign +1, reciprocal for sign -1."""
        if sign == 1:
            return self
        if sign == -1:
            return self.inv()
        raise ValueError(f"sign must be +1 or -1, got {sign}")

    def valuation(self, p: int) -> int:
        """Exponent of the prime p, zero when absent."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return self._factors.get(p, 0)

    def fraction(self) -> Fraction:
        num = den = 1
        for p, e in self._factors.items():
            if e > 0:
                num *= p**e
            else:
                den *= p**-e
        return Fraction(num, den)

    def render(self) -> str:
        """Lowest-terms "num/den" string; "1" for the unit."""
        f = self.fraction()
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    def factored(self) -> str:
        """Explicit prime-power string such as "2^-1 · 3^1"; "1" for the unit."""
        if not self._factors:
            return "1"
        return " · ".join(f"{p}^{e}" for p, e in sorted(self._factors.items()))

    def json_dict(self) -> dict:
        return {
            "value": self.render(),
            "factors": {str(p): e for p, e in sorted(self._factors.items())},
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self) -> int:
        return hash(frozenset(self._factors.items()))

    def __repr__(self) -> str:
        return f"FactoredRational({self._factors!r})"

    def __str__(self) -> str:
        return self.render()
