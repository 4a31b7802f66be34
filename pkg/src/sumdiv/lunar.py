"""Base-b lunar arithmetic: digitwise-max addition, min/max multiplication.

Digits are kept least-significant first so the product digit j is the
max over i + k = j of min(x_i, y_k), mirroring an ordinary convolution
index.  Display order is most-significant first with an explicit base
annotation, e.g. "12468@10".
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .errors import (
    BaseMismatchError,
    BudgetError,
    ParseError,
    PreconditionError,
)
from .sets import FiniteSet

# Candidate-divisor enumeration is O(base ** length); beyond this we refuse.
DIVISOR_ENUM_BUDGET = 4_000_000


class LunarNumber:
    """A canonical base-b digit string (no most-significant zeros)."""

    __slots__ = ("_base", "_digits")

    def __init__(self, base: int, digits: Iterable[int] = ()):
        base = int(base)
        if base < 2:
            raise ValueError(f"base must be >= 2, got {base}")
        digits = tuple(int(d) for d in digits)
        for d in digits:
            if not 0 <= d < base:
                raise ValueError(f"digit {d} out of range for base {base}")
        while digits and digits[-1] == 0:
            digits = digits[:-1]
        self._base = base
        self._digits = digits

    @property
    def base(self) -> int:
        return self._base

    @property
    def digits(self) -> tuple[int, ...]:
        """Digits least-significant first; empty for zero."""
        return self._digits

    @property
    def is_zero(self) -> bool:
        return not self._digits

    def __len__(self) -> int:
        return len(self._digits)

    @classmethod
    def parse(cls, text: str) -> "LunarNumber":
        body, sep, base_text = text.partition("@")
        if not sep:
            raise ParseError(f"missing '@base' annotation in {text!r}")
        try:
            base = int(base_text)
        except ValueError:
            raise ParseError(f"invalid base {base_text!r} in {text!r}") from None
        if base < 2:
            raise ParseError(f"base must be >= 2, got {base}")
        if base > 10:
            raise ParseError("textual parsing supports bases up to 10")
        if not body:
            raise ParseError(f"empty digit string in {text!r}")
        digits = []
        for pos, ch in enumerate(body):
            if not ch.isdigit() or int(ch) >= base:
                raise ParseError(
                    f"invalid digit {ch!r} at position {pos} for base {base}"
                )
            digits.append(int(ch))
        return cls(base, reversed(digits))

    def __str__(self) -> str:
        body = "".join(str(d) for d in reversed(self._digits)) or "0"
        return f"{body}@{self._base}"

    def __repr__(self) -> str:
        return f"LunarNumber.parse({str(self)!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LunarNumber):
            return self._base == other._base and self._digits == other._digits
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._base, self._digits))


def _require_same_base(x: LunarNumber, y: LunarNumber) -> None:
    if x.base != y.base:
        raise BaseMismatchError(f"base mismatch: {x.base} vs {y.base}")


def lunar_add(x: LunarNumber, y: LunarNumber) -> LunarNumber:
    """Digitwise max; the shorter operand is padded with zeros."""
    _require_same_base(x, y)
    n = max(len(x), len(y))
    xd, yd = x.digits, y.digits
    return LunarNumber(
        x.base,
        (
            max(xd[i] if i < len(xd) else 0, yd[i] if i < len(yd) else 0)
            for i in range(n)
        ),
    )


def lunar_mul(x: LunarNumber, y: LunarNumber) -> LunarNumber:
    """Carry-free long multiplication: digit product min, column max."""
    _require_same_base(x, y)
    if x.is_zero or y.is_zero:
        return LunarNumber(x.base)
    xd, yd = x.digits, y.digits
    out = [0] * (len(xd) + len(yd) - 1)
    for i, a in enumerate(xd):
        for k, b in enumerate(yd):
            m = a if a < b else b
            if m > out[i + k]:
                out[i + k] = m
    return LunarNumber(x.base, out)


def identity(base: int) -> LunarNumber:
    """The multiplicative identity: the single digit base - 1."""
    return LunarNumber(base, (base - 1,))


def beta(a: FiniteSet) -> LunarNumber:
    """The binary number whose digit i is 1 iff i is in a."""
    if a.is_empty:
        return LunarNumber(2)
    return LunarNumber(2, (1 if i in a else 0 for i in range(a.max + 1)))


def beta_inv(x: LunarNumber) -> FiniteSet:
    """Inverse of beta; only defined for base-2 numbers."""
    if x.base != 2:
        raise PreconditionError(f"beta_inv needs base 2, got base {x.base}")
    return FiniteSet(i for i, d in enumerate(x.digits) if d)


def lunar_quotient_max(n: LunarNumber, y: LunarNumber) -> LunarNumber:
    """Digitwise-maximal candidate cofactor z of length len(n) - len(y) + 1.

    z_j is the largest digit d with min(y_i, d) <= n_{i+j} for every i;
    y divides n iff lunar_mul(y, z) == n, by digitwise monotonicity.
    """
    _require_same_base(n, y)
    if y.is_zero:
        raise PreconditionError("cannot divide by lunar zero")
    if len(y) > len(n):
        raise PreconditionError("divisor is longer than the dividend")
    b = n.base
    nd, yd = n.digits, y.digits
    out = []
    for j in range(len(nd) - len(yd) + 1):
        d = b - 1
        for i, yi in enumerate(yd):
            if yi > nd[i + j] and nd[i + j] < d:
                d = nd[i + j]
        out.append(d)
    return LunarNumber(b, out)


def lunar_divides(y: LunarNumber, n: LunarNumber) -> bool:
    _require_same_base(y, n)
    if y.is_zero or len(y) > len(n):
        return False
    return lunar_mul(y, lunar_quotient_max(n, y)) == n


def _check_enum_budget(base: int, length: int) -> None:
    if base ** length > DIVISOR_ENUM_BUDGET:
        raise BudgetError(
            f"divisor enumeration over base {base}, length {length} exceeds "
            f"the budget of {DIVISOR_ENUM_BUDGET} candidates"
        )


def lunar_divisors(n: LunarNumber) -> list[LunarNumber]:
    """All canonical y with y (x) z = n, ordered by (length, digit string)."""
    if n.is_zero:
        raise PreconditionError("lunar zero has no divisor list")
    b = n.base
    _check_enum_budget(b, len(n))
    out = []
    for length in range(1, len(n) + 1):
        found = []
        for top in range(1, b):
            for rest in itertools.product(range(b), repeat=length - 1):
                y = LunarNumber(b, rest + (top,))
                if lunar_divides(y, n):
                    found.append(y)
        found.sort(key=lambda y: tuple(reversed(y.digits)))
        out.extend(found)
    return out


def lunar_divisor_count(n: LunarNumber) -> int:
    """d_b(n), the number of lunar divisors of n."""
    return len(lunar_divisors(n))
