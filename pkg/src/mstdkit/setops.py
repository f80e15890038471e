"""Exact arithmetic on finite sets of integers.

An :class:`IntSet` is an immutable, strictly increasing tuple of signed
64-bit integers.  Sumsets and difference sets run on a dense bitmask
kernel: a set with minimum ``m`` becomes a big integer whose bit
``e - m`` is set for every element ``e``, and ``A+B`` is the union of
shifted copies of A's mask, one shift per element of B.  Spans in this
problem domain stay in the thousands of bits, where the dense kernel
beats pairwise enumeration by a wide margin.

All element arithmetic is range-checked against signed 64-bit bounds;
a result outside them raises ``OverflowError`` instead of wrapping.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

I64_MIN = -(1 << 63)
I64_MAX = (1 << 63) - 1

# Hard cap on the bit length of any dense mask (16 MiB of bits).  Spans
# beyond this are out of scope for the dense kernel.
MAX_SPAN_BITS = 1 << 27


def _check_i64(value: int) -> int:
    if value < I64_MIN or value > I64_MAX:
        raise OverflowError(f"value {value} exceeds the signed 64-bit range")
    return value


def _check_span(span: int) -> int:
    if span > MAX_SPAN_BITS:
        raise ValueError(
            f"span {span} exceeds the dense-kernel limit of {MAX_SPAN_BITS} bits"
        )
    return span


def _bit_positions(mask: int) -> np.ndarray:
    """Ascending positions of the set bits of a nonnegative int."""
    if mask == 0:
        return np.empty(0, dtype=np.int64)
    raw = mask.to_bytes((mask.bit_length() + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return np.nonzero(bits)[0].astype(np.int64)


class IntSet:
    """Immutable finite set of integers, stored sorted and deduplicated."""

    __slots__ = ("_elements", "_mask_cache")

    def __init__(self, elements: Iterable[int] = ()):
        elems = sorted({int(e) for e in elements})
        if elems:
            _check_i64(elems[0])
            _check_i64(elems[-1])
        self._elements = tuple(elems)
        self._mask_cache: Optional[int] = None

    @classmethod
    def _from_sorted(cls, elems: Iterable[int]) -> "IntSet":
        """Trusted constructor: ``elems`` already strictly increasing and in range."""
        out = cls.__new__(cls)
        out._elements = tuple(elems)
        out._mask_cache = None
        return out

    # -- basic accessors ----------------------------------------------------

    @property
    def elements(self) -> tuple[int, ...]:
        return self._elements

    @property
    def min(self) -> int:
        if not self._elements:
            raise ValueError("empty set has no minimum")
        return self._elements[0]

    @property
    def max(self) -> int:
        if not self._elements:
            raise ValueError("empty set has no maximum")
        return self._elements[-1]

    @property
    def span(self) -> int:
        return self.max - self.min

    @property
    def mask(self) -> int:
        """Dense bitmask relative to ``self.min`` (bit ``e - min`` per element)."""
        m = self._mask_cache
        if m is None:
            _check_span(self.span)
            base = self._elements[0]
            m = 0
            for e in self._elements:
                m |= 1 << (e - base)
            self._mask_cache = m
        return m

    def __len__(self) -> int:
        return len(self._elements)

    def __bool__(self) -> bool:
        return bool(self._elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self._elements)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or not self._elements:
            return False
        i = bisect_left(self._elements, x)
        return i < len(self._elements) and self._elements[i] == x

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntSet) and self._elements == other._elements

    def __hash__(self) -> int:
        return hash(self._elements)

    def __or__(self, other: "IntSet") -> "IntSet":
        if not isinstance(other, IntSet):
            return NotImplemented
        return IntSet(self._elements + other._elements)

    def __repr__(self) -> str:
        return f"IntSet({{{', '.join(map(str, self._elements))}}})"

    # -- serialization ------------------------------------------------------

    @classmethod
    def _validated(cls, elems: list[int], where: str) -> "IntSet":
        for prev, cur in zip(elems, elems[1:]):
            if cur <= prev:
                raise ValueError(
                    f"{where}: elements must be strictly increasing "
                    f"(saw {prev} then {cur})"
                )
        if elems:
            _check_i64(elems[0])
            _check_i64(elems[-1])
        return cls._from_sorted(elems)

    @classmethod
    def from_text(cls, text: str) -> "IntSet":
        """Parse space-separated, strictly ascending integers."""
        elems = [int(tok) for tok in text.split()]
        return cls._validated(elems, "text input")

    @classmethod
    def from_json(cls, text: str) -> "IntSet":
        """Parse ``{"elements": [...]}`` with strictly ascending integers."""
        data = json.loads(text)
        if not isinstance(data, dict) or "elements" not in data:
            raise ValueError('JSON input must be an object with an "elements" key')
        raw = data["elements"]
        if not isinstance(raw, list) or not all(
            isinstance(e, int) and not isinstance(e, bool) for e in raw
        ):
            raise ValueError('"elements" must be a list of integers')
        return cls._validated(list(raw), "JSON input")

    def to_text(self) -> str:
        return " ".join(map(str, self._elements))

    def to_json(self) -> str:
        return json.dumps({"elements": list(self._elements)})


def interval(lo: int, hi: int) -> IntSet:
    """The integer interval ``{lo, lo+1, ..., hi}`` (empty when ``hi < lo``)."""
    if hi < lo:
        return IntSet()
    _check_i64(lo)
    _check_i64(hi)
    return IntSet._from_sorted(range(lo, hi + 1))


@dataclass(frozen=True)
class SymmetryWitness:
    """Center c with A = c - A."""

    center: int


@dataclass(frozen=True)
class MstdDelta:
    """Cardinalities |A+A|, |A-A| and their difference."""

    sum_card: int
    diff_card: int
    delta: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "delta", self.sum_card - self.diff_card)

    @property
    def is_mstd(self) -> bool:
        return self.delta > 0


# -- kernel ------------------------------------------------------------------


def _shift_or(big: IntSet, shifts: Iterable[int]) -> int:
    """OR together ``big.mask << s`` over nonnegative shifts ``s``."""
    mask = big.mask
    acc = 0
    for s in shifts:
        acc |= mask << s
    return acc


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """A+B = {x + y : x in A, y in B}; empty if either operand is empty."""
    if not a or not b:
        return IntSet()
    base = _check_i64(a.min + b.min)
    _check_i64(a.max + b.max)
    _check_span(a.span + b.span)
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    smin = small.min
    acc = _shift_or(big, (y - smin for y in small))
    return IntSet._from_sorted((_bit_positions(acc) + base).tolist())


def _negated(a: IntSet) -> IntSet:
    if not a:
        return a
    _check_i64(-a.max)
    _check_i64(-a.min)
    return IntSet._from_sorted(-e for e in reversed(a.elements))


def diffset(a: IntSet, b: IntSet) -> IntSet:
    """A-B = {x - y : x in A, y in B}."""
    return sumset(a, _negated(b))


def h_fold(a: IntSet, h: int) -> IntSet:
    """h-fold sumset: 0-fold is {0}, 1-fold is A, then inductively (h-1)A + A."""
    if h < 0:
        raise ValueError("fold count must be nonnegative")
    if h == 0:
        return IntSet((0,))
    acc = a
    for _ in range(h - 1):
        acc = sumset(acc, a)
    return acc


def sum_diff(a: IntSet, h: int, k: int) -> IntSet:
    """Generalized sum-difference set hA - kA (sums of h elements minus sums of k)."""
    if h < 0 or k < 0:
        raise ValueError("fold counts must be nonnegative")
    return diffset(h_fold(a, h), h_fold(a, k))


def affine(a: IntSet, x: int, y: int) -> IntSet:
    """Elementwise map e -> x*e + y; requires x != 0 so cardinality is preserved."""
    if x == 0:
        raise ValueError("scale factor must be nonzero")
    imgs = [x * e + y for e in a.elements]
    if x < 0:
        imgs.reverse()
    if imgs:
        _check_i64(imgs[0])
        _check_i64(imgs[-1])
    return IntSet._from_sorted(imgs)


def symmetry_witness(a: IntSet) -> Optional[SymmetryWitness]:
    """Center c = min+max if A = c - A, else None.

    Checking that single candidate is complete: a symmetric finite set's
    center must map min to max.
    """
    if not a:
        raise ValueError("symmetry is undefined for the empty set")
    c = a.min + a.max
    elems = a.elements
    n = len(elems)
    for i in range(n):
        if elems[i] != c - elems[n - 1 - i]:
            return None
    return SymmetryWitness(c)


def mstd_delta(a: IntSet) -> MstdDelta:
    """|A+A|, |A-A| and their difference; positive delta means A is MSTD."""
    return MstdDelta(len(sumset(a, a)), len(diffset(a, a)))


def normalize(a: IntSet) -> IntSet:
    """Canonical form under translation and positive dilation.

    Translates the minimum to 0 and, for sets of size >= 2, divides by the
    gcd of the shifted elements.  Idempotent; singletons map to {0}.
    """
    if not a:
        raise ValueError("cannot normalize the empty set")
    base = a.min
    shifted = [e - base for e in a.elements]
    if len(shifted) == 1:
        return IntSet((0,))
    g = math.gcd(*shifted)
    if g > 1:
        shifted = [e // g for e in shifted]
    return IntSet._from_sorted(shifted)
