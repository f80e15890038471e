"""Finite abelian groups, lattice embeddings, and transfer to the integers.

A finite abelian group is a product of cyclic groups given by its moduli.
Subsets embed canonically into the integer lattice Z^d by taking the
reduced representative of each coordinate; the reverse direction reduces
lattice points coordinatewise.  Thickening a group subset by a box of
sublattice translates produces lattice sets whose iterated sum-difference
cardinalities eventually order the same way as in the group, and a base-m
positional map linearizes lattice sets into integer sets while preserving
those cardinalities up to a chosen fold budget.

Iterated lattice sum-differences run on the same dense bitmask idea as
the integer kernel: points are encoded into a mixed-radix index wide
enough that coordinate sums never carry between axes, so a Minkowski sum
is a handful of shifted ORs on one big integer.  Plain pairwise loops on
hash sets were an order of magnitude too slow for the fold/thickness
ranges exercised here.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .setops import IntSet, MstdDelta, _bit_positions, _check_i64, _check_span, mstd_delta


@dataclass(frozen=True)
class GroupSpec:
    """Moduli (m_1, ..., m_d) of Z/m_1 x ... x Z/m_d, each at least 2."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        if len(self.moduli) < 1:
            raise ValueError("a group needs at least one modulus")
        if any(m < 2 for m in self.moduli):
            raise ValueError("all moduli must be at least 2")
        order = 1
        for m in self.moduli:
            order = _check_i64(order * m)

    @property
    def dim(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    def elements(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*(range(m) for m in self.moduli))


@dataclass(frozen=True)
class GroupSubset:
    """Subset of a finite abelian group, stored as reduced residue vectors."""

    spec: GroupSpec
    elements: frozenset

    def __post_init__(self):
        elems = frozenset(tuple(int(c) for c in e) for e in self.elements)
        object.__setattr__(self, "elements", elems)
        moduli = self.spec.moduli
        for e in elems:
            if len(e) != len(moduli):
                raise ValueError(f"element {e} has wrong dimension")
            if any(not (0 <= c < m) for c, m in zip(e, moduli)):
                raise ValueError(f"element {e} is not reduced modulo {moduli}")

    def __len__(self) -> int:
        return len(self.elements)

    @classmethod
    def from_json(cls, text: str) -> "GroupSubset":
        """Parse ``{"moduli": [...], "elements": [[...], ...]}``."""
        data = json.loads(text)
        if not isinstance(data, dict) or "moduli" not in data or "elements" not in data:
            raise ValueError('JSON input must carry "moduli" and "elements"')
        moduli = data["moduli"]
        elements = data["elements"]
        if not isinstance(moduli, list) or not isinstance(elements, list):
            raise ValueError('"moduli" and "elements" must be lists')
        if not all(
            isinstance(e, list) and all(isinstance(c, int) for c in e)
            for e in elements
        ):
            raise ValueError("elements must be lists of integers")
        vecs = [tuple(e) for e in elements]
        if len(set(vecs)) != len(vecs):
            raise ValueError("duplicate elements in JSON input")
        return cls(GroupSpec(tuple(moduli)), frozenset(vecs))

    def to_json(self) -> str:
        return json.dumps(
            {
                "moduli": list(self.spec.moduli),
                "elements": [list(e) for e in sorted(self.elements)],
            }
        )


@dataclass(frozen=True)
class LatticeSet:
    """Finite subset of Z^d."""

    dim: int
    points: frozenset

    def __post_init__(self):
        pts = frozenset(tuple(int(c) for c in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} has wrong dimension")
            for c in p:
                _check_i64(c)

    def __len__(self) -> int:
        return len(self.points)


# -- group arithmetic ----------------------------------------------------------


def group_sum_diff(a: GroupSubset, h: int, k: int) -> GroupSubset:
    """hA - kA inside the group, by exact modular arithmetic."""
    if not a.elements:
        raise ValueError("subset must be nonempty")
    if h < 0 or k < 0 or h + k < 1:
        raise ValueError("fold counts must be nonnegative with h + k >= 1")
    moduli = a.spec.moduli
    acc = {tuple(0 for _ in moduli)}
    for sign in (1,) * h + (-1,) * k:
        acc = {
            tuple((u + sign * v) % m for u, v, m in zip(x, p, moduli))
            for x in acc
            for p in a.elements
        }
    return GroupSubset(a.spec, frozenset(acc))


# -- lattice embeddings ---------------------------------------------------------


def to_lattice(a: GroupSubset) -> LatticeSet:
    """Canonical embedding: each residue vector as its reduced representative."""
    return LatticeSet(a.spec.dim, frozenset(a.elements))


def reduce_to_cell(s: LatticeSet, spec: GroupSpec) -> LatticeSet:
    """Coordinatewise reduction into the fundamental cell [0,m_i)^d."""
    if s.dim != spec.dim:
        raise ValueError("dimension mismatch")
    return LatticeSet(
        s.dim,
        frozenset(tuple(c % m for c, m in zip(p, spec.moduli)) for p in s.points),
    )


def sublattice_box(spec: GroupSpec, lo: int, hi: int) -> LatticeSet:
    """Points (q_1 m_1, ..., q_d m_d) with lo <= q_i < hi; (hi-lo)^d of them."""
    if lo > hi:
        raise ValueError("need lo <= hi")
    pts = frozenset(
        tuple(q * m for q, m in zip(qs, spec.moduli))
        for qs in itertools.product(range(lo, hi), repeat=spec.dim)
    )
    return LatticeSet(spec.dim, pts)


def minkowski_sum(a: LatticeSet, b: LatticeSet) -> LatticeSet:
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    return LatticeSet(
        a.dim,
        frozenset(
            tuple(x + y for x, y in zip(p, q)) for p in a.points for q in b.points
        ),
    )


def minkowski_diff(a: LatticeSet, b: LatticeSet) -> LatticeSet:
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    return LatticeSet(
        a.dim,
        frozenset(
            tuple(x - y for x, y in zip(p, q)) for p in a.points for q in b.points
        ),
    )


# -- dense fold kernel -----------------------------------------------------------


def _fold_mask(s: LatticeSet, h: int, k: int):
    """Dense mixed-radix mask of hS - kS plus the decode geometry.

    Returns (mask, base, weights, radixes) where a set bit at index
    ``sum_i offs_i * weights_i`` encodes the point ``base + offs``.
    """
    pts = [tuple(p) for p in s.points]
    dim = s.dim
    los = [min(p[i] for p in pts) for i in range(dim)]
    his = [max(p[i] for p in pts) for i in range(dim)]
    spans = [hi - lo for lo, hi in zip(los, his)]
    total = h + k
    radixes = [total * sp + 1 for sp in spans]
    _check_span(math.prod(radixes))
    weights = [1] * dim
    for i in range(1, dim):
        weights[i] = weights[i - 1] * radixes[i - 1]

    def code(offs):
        return sum(o * w for o, w in zip(offs, weights))

    add_shifts = [code([p[i] - los[i] for i in range(dim)]) for p in pts]
    sub_shifts = [code([his[i] - p[i] for i in range(dim)]) for p in pts]

    acc = 1  # the single all-zero offset: empty sum
    base = [0] * dim
    for _ in range(h):
        acc = _or_shifted(acc, add_shifts)
        base = [b + lo for b, lo in zip(base, los)]
    for _ in range(k):
        acc = _or_shifted(acc, sub_shifts)
        base = [b - hi for b, hi in zip(base, his)]
    for b, sp in zip(base, spans):
        _check_i64(b)
        _check_i64(b + total * sp)
    return acc, base, weights, radixes


def _or_shifted(mask: int, shifts: list[int]) -> int:
    acc = 0
    for sh in shifts:
        acc |= mask << sh
    return acc


def _decode_mask(mask, base, weights, radixes, dim) -> frozenset:
    pos = _bit_positions(mask)
    cols = []
    for i in range(dim):
        cols.append((pos // weights[i]) % radixes[i] + base[i])
    return frozenset(map(tuple, np.stack(cols, axis=1).tolist()))


def lattice_sum_diff(s: LatticeSet, h: int, k: int) -> LatticeSet:
    """hS - kS by exact vector arithmetic (dense mixed-radix kernel)."""
    if not s.points:
        raise ValueError("lattice set must be nonempty")
    if h < 0 or k < 0 or h + k < 1:
        raise ValueError("fold counts must be nonnegative with h + k >= 1")
    mask, base, weights, radixes = _fold_mask(s, h, k)
    return LatticeSet(s.dim, _decode_mask(mask, base, weights, radixes, s.dim))


def lattice_sum_diff_card(s: LatticeSet, h: int, k: int) -> int:
    """|hS - kS| without materializing the points."""
    if not s.points:
        raise ValueError("lattice set must be nonempty")
    if h < 0 or k < 0 or h + k < 1:
        raise ValueError("fold counts must be nonnegative with h + k >= 1")
    mask, *_ = _fold_mask(s, h, k)
    return mask.bit_count()


# -- thickening and transfer ------------------------------------------------------


def thicken(a: GroupSubset, t: int) -> LatticeSet:
    """The lattice set phi(A) + box(0, t); has exactly |A| * t^d points."""
    if not a.elements:
        raise ValueError("subset must be nonempty")
    if t < 1:
        raise ValueError("thickness must be at least 1")
    return minkowski_sum(to_lattice(a), sublattice_box(a.spec, 0, t))


@dataclass(frozen=True)
class EmbeddingConsistency:
    """Outcome of the three compatibility checks between group and lattice folds."""

    identity_holds: bool
    lift_covered: bool
    embed_covered: bool

    @property
    def all_hold(self) -> bool:
        return self.identity_holds and self.lift_covered and self.embed_covered


def embedding_consistency(a: GroupSubset, h: int, k: int) -> EmbeddingConsistency:
    """Check how lattice folds of phi(A) relate to the embedded group fold.

    identity: reducing h*phi(A) - k*phi(A) into the cell gives phi(hA - kA);
    lift_covered: h*phi(A) - k*phi(A) lies in phi(hA - kA) + box(-k, h);
    embed_covered: phi(hA - kA) lies in h*phi(A) - k*phi(A) + box(-h+1, k+1).
    """
    if not a.elements:
        raise ValueError("subset must be nonempty")
    if h < 1 or k < 0:
        raise ValueError("need h >= 1 and k >= 0")
    spec = a.spec
    embedded = to_lattice(group_sum_diff(a, h, k))
    lifted = lattice_sum_diff(to_lattice(a), h, k)
    identity = reduce_to_cell(lifted, spec).points == embedded.points
    lift_cov = lifted.points <= minkowski_sum(
        embedded, sublattice_box(spec, -k, h)
    ).points
    embed_cov = embedded.points <= minkowski_sum(
        lifted, sublattice_box(spec, -h + 1, k + 1)
    ).points
    return EmbeddingConsistency(identity, lift_cov, embed_cov)


def find_thickness(
    a: GroupSubset,
    pair1: tuple[int, int],
    pair2: tuple[int, int],
    t_max: int,
) -> int:
    """Smallest t <= t_max where the group fold inequality transfers to B_t.

    Requires h1, h2 >= 1, equal fold totals h1+k1 == h2+k2, and the strict
    group inequality |h1 A - k1 A| > |h2 A - k2 A|; such a t exists for all
    sufficiently large t, so the scan fails only if t_max is too small.
    """
    (h1, k1), (h2, k2) = pair1, pair2
    if h1 < 1 or h2 < 1 or k1 < 0 or k2 < 0:
        raise ValueError("need h1, h2 >= 1 and k1, k2 >= 0")
    if h1 + k1 != h2 + k2:
        raise ValueError("fold totals must match: h1 + k1 == h2 + k2")
    c1 = len(group_sum_diff(a, h1, k1))
    c2 = len(group_sum_diff(a, h2, k2))
    if c1 <= c2:
        raise ValueError(
            f"group inequality fails: |{h1}A-{k1}A| = {c1} <= |{h2}A-{k2}A| = {c2}"
        )
    for t in range(1, t_max + 1):
        bt = thicken(a, t)
        if lattice_sum_diff_card(bt, h1, k1) > lattice_sum_diff_card(bt, h2, k2):
            return t
    raise RuntimeError(f"no thickness up to {t_max} transfers the inequality")


@dataclass(frozen=True)
class ThickeningBounds:
    """Whether |h B_t - k B_t| obeys the two cardinality bounds."""

    upper_ok: bool
    lower_ok: bool


def thickening_bounds(a: GroupSubset, h: int, k: int, t: int) -> ThickeningBounds:
    """Check |h B_t - k B_t| against |hA - kA| scaled by the box-size bounds.

    Upper bound factor: ((h+k) t)^d.  Lower bound factor:
    ((h+k) t - 2 (h+k-1))^d, applied only when its base is nonnegative
    (reported vacuously true otherwise).
    """
    if not a.elements:
        raise ValueError("subset must be nonempty")
    if h < 1 or k < 0 or t < 1:
        raise ValueError("need h >= 1, k >= 0, t >= 1")
    d = a.spec.dim
    group_card = len(group_sum_diff(a, h, k))
    lat_card = lattice_sum_diff_card(thicken(a, t), h, k)
    upper_ok = lat_card <= group_card * ((h + k) * t) ** d
    base = (h + k) * t - 2 * (h + k - 1)
    lower_ok = True if base < 0 else lat_card >= group_card * base**d
    return ThickeningBounds(upper_ok=upper_ok, lower_ok=lower_ok)


# -- linearization to the integers -------------------------------------------------


@dataclass(frozen=True)
class LinearImage:
    """Base-radix positional image of a lattice set."""

    radix: int
    image: IntSet


def linearize(s: LatticeSet, cap_l: int) -> LinearImage:
    """Flatten Z^d to Z by p -> sum_i p_i * radix^i with the minimal safe radix.

    radix = 2 * cap_l * max-norm(S) + 1 is the smallest value for which
    |hS - kS| = |h psi(S) - k psi(S)| is guaranteed for every h + k <= cap_l;
    keeping it minimal keeps images within 64-bit range.
    """
    if not s.points:
        raise ValueError("lattice set must be nonempty")
    if cap_l < 1:
        raise ValueError("fold budget must be at least 1")
    maxnorm = max((abs(c) for p in s.points for c in p), default=0)
    radix = _check_i64(2 * cap_l * maxnorm + 1)
    images = []
    for p in s.points:
        val = 0
        power = 1
        for i, c in enumerate(p):
            if c:
                val += _check_i64(c * power)
                _check_i64(val)
            if i + 1 < len(p):
                power *= radix
        images.append(val)
    return LinearImage(radix=radix, image=IntSet(images))


# -- full pipeline -------------------------------------------------------------------


class EmbedError(RuntimeError):
    """A stage of the group-to-integer pipeline failed."""


@dataclass(frozen=True)
class EmbedResult:
    """Integer MSTD set produced from a group MSTD subset, with stage data."""

    t: int
    radix: int
    image: IntSet
    delta: int


def embed_report(a: GroupSubset, t_max: int = 32, cap_l: int = 2) -> EmbedResult:
    """Run group -> thickened lattice set -> integers, verifying MSTD at the end."""
    if len(group_sum_diff(a, 2, 0)) <= len(group_sum_diff(a, 1, 1)):
        raise ValueError("input is not an MSTD subset of its group")
    try:
        t = find_thickness(a, (2, 0), (1, 1), t_max)
    except (ValueError, RuntimeError) as e:
        raise EmbedError(f"thickness search: {e}") from e
    try:
        bt = thicken(a, t)
        lin = linearize(bt, cap_l)
    except (ValueError, OverflowError) as e:
        raise EmbedError(f"linearization: {e}") from e
    d: MstdDelta = mstd_delta(lin.image)
    if d.delta < 1:
        raise EmbedError(f"verification: image delta = {d.delta}, expected >= 1")
    return EmbedResult(t=t, radix=lin.radix, image=lin.image, delta=d.delta)


def embed_pipeline(a: GroupSubset, t_max: int = 32) -> IntSet:
    """The integer MSTD set from :func:`embed_report` (fold budget 2)."""
    return embed_report(a, t_max=t_max, cap_l=2).image
