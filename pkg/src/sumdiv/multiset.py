"""Multisets of bounded multiplicity as descending set-arrays.

A multiset with multiplicities at most b is the chain (A_1, ..., A_b) with
a in A_i iff the multiplicity of a is at least i.  Addition is coordinatewise
sumset addition with the empty set absorbing, and reading the multiplicities
as base-(b+1) digits turns addition into lunar multiplication.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Mapping

from .errors import BudgetError, ParseError, PreconditionError
from .lunar import LunarNumber
from .sets import (
    EMPTY,
    FiniteSet,
    _iter_submasks,
    _quotient_mask,
    _sum_masks,
    sumset,
)

# The general divisor search is doubly exponential; it exists only as an
# oracle for the closed-form counts, so the budget is deliberately tight.
MAX_SEARCH_HEIGHT = 3
MAX_SEARCH_ELEMENT = 6


class SetArray:
    """A height-b descending chain of finite sets."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Iterable[FiniteSet]):
        coords = tuple(coords)
        if not coords:
            raise PreconditionError("a set-array needs height >= 1")
        for hi, lo in zip(coords, coords[1:]):
            if not lo.issubset(hi):
                raise PreconditionError(
                    f"coordinates must form a descending chain: "
                    f"{lo} is not contained in {hi}"
                )
        self._coords = coords

    @property
    def coords(self) -> tuple[FiniteSet, ...]:
        return self._coords

    @property
    def height(self) -> int:
        return len(self._coords)

    @property
    def is_zero(self) -> bool:
        return self._coords[0].is_empty

    @classmethod
    def neutral(cls, height: int) -> "SetArray":
        """The multiset {0, 0, ..., 0} with height repetitions of 0."""
        return cls([FiniteSet((0,))] * height)

    def multiplicity(self, e: int) -> int:
        return sum(1 for c in self._coords if e in c)

    def multiplicities(self) -> dict[int, int]:
        """Support-to-multiplicity view of the multiset."""
        if self.is_zero:
            return {}
        return {e: self.multiplicity(e) for e in self._coords[0]}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SetArray):
            return self._coords == other._coords
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coords)

    def __str__(self) -> str:
        body = ",".join(
            "{" + ",".join(str(e) for e in c) + "}" for c in self._coords
        )
        return f"({body})@{self.height}"

    def __repr__(self) -> str:
        return f"SetArray.parse({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "SetArray":
        body, sep, height_text = text.partition("@")
        if not sep:
            raise ParseError(f"missing '@height' annotation in {text!r}")
        try:
            height = int(height_text)
        except ValueError:
            raise ParseError(f"invalid height {height_text!r}") from None
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError(f"set-array body must be parenthesized: {text!r}")
        inner = body[1:-1]
        coords = []
        depth = 0
        chunk = ""
        for ch in inner + ",":
            if ch == "," and depth == 0:
                chunk = chunk.strip()
                if not (chunk.startswith("{") and chunk.endswith("}")):
                    raise ParseError(f"malformed coordinate {chunk!r}")
                elems = chunk[1:-1].strip()
                if elems:
                    try:
                        coords.append(FiniteSet(int(e) for e in elems.split(",")))
                    except ValueError:
                        raise ParseError(
                            f"malformed coordinate {chunk!r}"
                        ) from None
                else:
                    coords.append(EMPTY)
                chunk = ""
                continue
            if ch == "{":
                depth += 1
            elif ch == "}":
                depth -= 1
            chunk += ch
        if len(coords) != height:
            raise ParseError(
                f"height annotation {height} does not match "
                f"{len(coords)} coordinates"
            )
        return cls(coords)


def to_set_array(f: Mapping[int, int], b: int) -> SetArray:
    """Chain representation of a multiplicity function with values <= b."""
    if b < 1:
        raise PreconditionError("set-array height must be >= 1")
    for e, m in f.items():
        if m < 0:
            raise PreconditionError(f"negative multiplicity for element {e}")
        if m > b:
            raise PreconditionError(
                f"multiplicity {m} of element {e} overflows height {b}"
            )
    return SetArray(
        FiniteSet(e for e, m in f.items() if m >= i) for i in range(1, b + 1)
    )


def multisum(x: SetArray, y: SetArray) -> SetArray:
    """Coordinatewise sumset addition with the empty set absorbing."""
    if x.height != y.height:
        raise PreconditionError(
            f"height mismatch: {x.height} vs {y.height}"
        )
    return SetArray(
        EMPTY if a.is_empty or b.is_empty else sumset(a, b)
        for a, b in zip(x.coords, y.coords)
    )


def beta_b(x: SetArray) -> LunarNumber:
    """The base-(height+1) number whose digit i is the multiplicity of i."""
    base = x.height + 1
    if x.is_zero:
        return LunarNumber(base)
    return LunarNumber(
        base, (x.multiplicity(i) for i in range(x.coords[0].max + 1))
    )


def star_collapse(x: SetArray) -> SetArray:
    """Replace every coordinate above the first with the empty set.

    Every divisor of x divides the result; the divisor count strictly
    increases when the second coordinate is nonempty.
    """
    if x.is_zero:
        raise PreconditionError("star_collapse needs a nonzero multiset")
    return SetArray((x.coords[0],) + (EMPTY,) * (x.height - 1))


@functools.lru_cache(maxsize=1 << 18)
def _cofactor_masks(xmask: int, ymask: int) -> tuple[int, ...]:
    """All nonempty C with y + C = x, as masks (empty if y does not divide)."""
    if ymask == 0 or ymask.bit_length() > xmask.bit_length():
        return ()
    qmask = _quotient_mask(xmask, ymask)
    return tuple(
        c
        for c in _iter_submasks(qmask)
        if c and _sum_masks(ymask, c) == xmask
    )


def _divides_masks(xmasks: tuple[int, ...], ymasks: tuple[int, ...]) -> bool:
    """Mask-level divisibility for same-height chains (x nonzero)."""
    sets = []
    for xm, ym in zip(xmasks, ymasks):
        if xm == 0:
            # Trailing empty coordinates: z_i = {} always works.
            break
        if ym == 0:
            return False
        cof = _cofactor_masks(xm, ym)
        if not cof:
            return False
        sets.append(cof)
    return _has_cofactor_chain(sets)


def _has_cofactor_chain(cofactor_sets: list) -> bool:
    """Is there a descending chain (Z_1 contains ... contains Z_t) picking one
    mask from each per-coordinate cofactor set?  Backtracks bottom-up."""

    def rec(i: int, need: int) -> bool:
        if i < 0:
            return True
        return any(
            z & need == need and rec(i - 1, z) for z in cofactor_sets[i]
        )

    return rec(len(cofactor_sets) - 1, 0)


def setarray_divides(y: SetArray, x: SetArray) -> bool:
    """True iff some chain z exists with multisum(y, z) = x."""
    if x.height != y.height:
        raise PreconditionError(
            f"height mismatch: {x.height} vs {y.height}"
        )
    if x.is_zero:
        raise PreconditionError("divisibility is defined for nonzero x only")
    return _divides_masks(
        tuple(c.mask for c in x.coords), tuple(c.mask for c in y.coords)
    )


def setarray_divisors(
    x: SetArray,
    *,
    max_height: int = MAX_SEARCH_HEIGHT,
    max_element: int = MAX_SEARCH_ELEMENT,
) -> list[SetArray]:
    """All same-height divisors of x, by brute force.

    Candidate chains live inside the bounding box [0, max(A_1)]; each is
    validated by searching for a chain-compatible cofactor coordinate by
    coordinate.  Strictly budget-limited.
    """
    if x.is_zero:
        raise PreconditionError("the zero multiset has no divisor list")
    h = x.height
    top = x.coords[0].max
    if h > max_height or top > max_element:
        raise BudgetError(
            f"set-array divisor search over height {h}, max element {top} "
            f"exceeds the budget (height <= {max_height}, "
            f"element <= {max_element})"
        )
    out = []
    for mults in itertools.product(range(h + 1), repeat=top + 1):
        if not any(mults):
            continue
        y = SetArray(
            FiniteSet(e for e, m in enumerate(mults) if m >= i)
            for i in range(1, h + 1)
        )
        if setarray_divides(y, x):
            out.append(y)
    out.sort(key=lambda y: tuple(c.elements for c in y.coords))
    return out


def setarray_divisor_count_formula(a: FiniteSet, b: int) -> int:
    """Divisor count of the set-array (a, {}, ..., {}) of height b.

    Each divisor B of a contributes one divisor per descending chain below
    it, i.e. b ** |B| in total.
    """
    from .sets import divisors

    if b < 1:
        raise PreconditionError("height must be >= 1")
    return sum(b ** len(d) for d in divisors(a))
