"""Base-p digit arithmetic: valuations, Lucas residues, Kummer carry counts.

Everything in this module is plain exact integer arithmetic. The binomial
residue and valuation functions work digit by digit, so they stay cheap even
when the binomial itself would have thousands of digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "PrimeModulus",
    "Digits",
    "require_odd_prime",
    "digits_base_p",
    "p_adic_val",
    "p_adic_length",
    "binom_mod_p",
    "binom_val_p",
    "all_binoms_divisible",
    "all_binoms_divisible_by_digits",
]


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_odd_prime(p: int) -> int:
    """Validate an odd prime modulus p >= 3 and return it."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"modulus must be an int, got {p!r}")
    if p < 3 or not _is_prime(p):
        raise ValueError(f"modulus must be a prime >= 3, got {p}")
    return p


@dataclass(frozen=True, slots=True)
class PrimeModulus:
    """An odd prime modulus, validated at construction."""

    p: int

    def __post_init__(self) -> None:
        require_odd_prime(self.p)


@dataclass(frozen=True, slots=True)
class Digits:
    """Little-endian base-p digits of a nonnegative integer.

    The digit list carries no trailing zeros, so it is empty exactly when
    value == 0 and its last entry is nonzero otherwise.
    """

    value: int
    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.digits and self.digits[-1] == 0:
            raise ValueError("digit tuple has a trailing zero")
        if any(not 0 <= d < self.base for d in self.digits):
            raise ValueError(f"digits out of range for base {self.base}")
        if sum(d * self.base**i for i, d in enumerate(self.digits)) != self.value:
            raise ValueError("digits do not encode the stated value")

    def digit(self, i: int) -> int:
        """Digit at position i, zero beyond the stored length."""
        return self.digits[i] if 0 <= i < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)


def digits_base_p(a: int, p: int) -> Digits:
    """Base-p expansion of a >= 0, least significant digit first."""
    require_odd_prime(p)
    if a < 0:
        raise ValueError(f"expected a nonnegative integer, got {a}")
    ds = []
    x = a
    while x:
        x, r = divmod(x, p)
        ds.append(r)
    return Digits(value=a, base=p, digits=tuple(ds))


def p_adic_val(a: int, p: int) -> int:
    """Largest e with p^e dividing a, for a >= 1."""
    require_odd_prime(p)
    if a < 1:
        raise ValueError(f"valuation needs a positive integer, got {a}")
    e = 0
    while a % p == 0:
        a //= p
        e += 1
    return e


def p_adic_length(a: int, p: int) -> int:
    """Position of the leading base-p digit of a >= 1 (so p^l <= a < p^(l+1))."""
    require_odd_prime(p)
    if a < 1:
        raise ValueError(f"digit length needs a positive integer, got {a}")
    return len(digits_base_p(a, p)) - 1


def binom_mod_p(m: int, k: int, p: int) -> int:
    """C(m, k) mod p by Lucas: the product of digitwise binomials.

    Returns 0 for k outside [0, m], matching the usual convention.
    """
    require_odd_prime(p)
    if m < 0:
        raise ValueError(f"expected a nonnegative top argument, got {m}")
    if k < 0 or k > m:
        return 0
    out = 1
    while k or m:
        mk, kk = m % p, k % p
        if kk > mk:
            return 0
        # digit binomial stays below p^2, fine for machine ints
        num, den = 1, 1
        for i in range(kk):
            num = num * (mk - i) % p
            den = den * (i + 1) % p
        out = out * num * pow(den, p - 2, p) % p
        m //= p
        k //= p
    return out


def binom_val_p(m: int, k: int, p: int) -> int:
    """p-adic valuation of C(m, k) by Kummer: carries when adding k + (m-k)."""
    require_odd_prime(p)
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")
    carries = 0
    carry = 0
    x, y = k, m - k
    while x or y or carry:
        s = x % p + y % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        x //= p
        y //= p
    return carries


def all_binoms_divisible(a: int, b: int, p: int) -> bool:
    """Whether p divides C(a+j, j) for every 1 <= j <= b.

    Ground truth by direct loop. The digit form below is the O(log) shortcut;
    the two are cross-checked in the test suite, and callers that only need
    a yes/no answer should prefer this one.
    """
    require_odd_prime(p)
    if a < 0 or b < 0:
        raise ValueError(f"need nonnegative a, b; got a={a}, b={b}")
    return all(binom_mod_p(a + j, j, p) == 0 for j in range(1, b + 1))


def all_binoms_divisible_by_digits(a: int, b: int, p: int) -> bool:
    """Digit criterion for the same family: a = -1 mod p^(l_p(b)+1), b >= 1."""
    require_odd_prime(p)
    if a < 0 or b < 1:
        raise ValueError(f"need a >= 0 and b >= 1; got a={a}, b={b}")
    return (a + 1) % p ** (p_adic_length(b, p) + 1) == 0
