"""Matroids on small ground sets, represented by their bases.

A matroid here is an immutable value: a ground-set size ``n``, a rank, and
the canonically sorted tuple of basis bitmasks.  Everything else — rank
function, closure, flats, minors — is derived on demand and memoized.  The
representation is deliberately explicit: desk-scale instances (n <= 13 in
the bundled data, n <= 64 as a hard cap) make enumeration the simplest
correct tool, and every validation step is a complete axiom check rather
than a heuristic.

Construction goes through two doors:

* :func:`Matroid.from_bases` — direct basis list, exchange-axiom checked.
* :func:`matroid_from_flats` — ground size, rank, and the *nontrivial*
  flats (those with more elements than their rank); trivial flats are
  implied.  This mirrors how geometric data is usually tabulated: points
  and the lines with three or more points, say.

Derived constructions (minors, truncations, simplifications) skip the
exchange re-check — they are matroids by theorem — but remain covered by
the property test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .bitsets import (
    MAX_GROUND,
    canonical_key,
    coerce_mask,
    elements_of,
    format_set,
    full_mask,
    iter_elements,
    mask_of,
    sort_masks,
)
from .errors import (
    EmptyGroundSet,
    FormatError,
    GroundSetMismatch,
    GroundSetTooLarge,
    RankTooLow,
    ValidationError,
)

# Full 2^n rank tables are built below this ground-set size; above it the
# rank function falls back to scanning bases.
RANK_TABLE_LIMIT = 16

_SAMPLE_SEED = 0x5EED
_SAMPLE_COUNT = 200


@dataclass(frozen=True)
class GroundSet:
    """The set {0, ..., size-1}; a thin named wrapper."""

    size: int

    def __iter__(self):
        return iter(range(self.size))

    def __len__(self) -> int:
        return self.size

    def __contains__(self, e) -> bool:
        return isinstance(e, int) and 0 <= e < self.size

    @property
    def mask(self) -> int:
        return full_mask(self.size)


@dataclass(frozen=True)
class PointedMap:
    """A labelled injection between ground sets.

    ``images[i]`` is the image of element ``i`` of the domain.  When the map
    arises from collapsing parallel classes, ``classes[i]`` records the
    original elements that were merged into domain point ``i`` (and
    ``images[i]`` is the least of them).  Isomorphisms leave ``classes``
    as None.
    """

    images: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if len(set(self.images)) != len(self.images):
            raise ValidationError("PointedMap images must be distinct")
        if any(i < 0 for i in self.images):
            raise ValidationError("PointedMap images must be non-negative")
        if self.classes is not None and len(self.classes) != len(self.images):
            raise ValidationError("PointedMap classes must match images in length")

    def __call__(self, element: int) -> int:
        return self.images[element]

    def apply_set(self, elements: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.images[e] for e in elements))

    @property
    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images))

    @staticmethod
    def identity(n: int) -> "PointedMap":
        return PointedMap(tuple(range(n)))


@dataclass(frozen=True)
class FlatLattice:
    """All flats of a matroid, grouped by rank, masks in canonical order."""

    n: int
    rank: int
    by_rank: tuple[tuple[int, ...], ...]

    def __iter__(self):
        for level in self.by_rank:
            yield from level

    def at(self, k: int) -> tuple[int, ...]:
        return self.by_rank[k]

    def nontrivial_at(self, k: int) -> tuple[int, ...]:
        """Flats of rank k with more than k elements."""
        return tuple(f for f in self.by_rank[k] if f.bit_count() > k)

    def all_flats(self) -> frozenset[int]:
        return frozenset(f for level in self.by_rank for f in level)


class Matroid:
    """An immutable matroid given by its bases.

    Public surface works with element iterables (or raw bitmasks); the
    ``*_mask`` methods are the internal fast path.  Instances compare equal
    exactly when ground size, rank and canonical basis list coincide.
    """

    __slots__ = ("n", "rank", "basis_masks", "_basis_set", "_indep", "_ranks",
                 "_lattice")

    def __init__(self, n: int, rank: int, basis_masks: Sequence[int], *,
                 _validated: bool = False):
        if n < 1:
            raise EmptyGroundSet("matroid needs at least one element")
        if n > MAX_GROUND:
            raise GroundSetTooLarge(f"ground set of size {n} exceeds the cap of {MAX_GROUND}")
        masks = sort_masks(set(basis_masks))
        if not masks:
            raise ValidationError("matroid needs at least one basis")
        if any(b < 0 or b >= (1 << n) for b in masks):
            raise FormatError("basis element out of range")
        if any(b.bit_count() != rank for b in masks):
            raise ValidationError("all bases must have cardinality equal to the rank")
        self.n = n
        self.rank = rank
        self.basis_masks = masks
        self._basis_set = frozenset(masks)
        self._indep = None
        self._ranks = None
        self._lattice = None
        if not _validated:
            _check_exchange(self)

    # -- construction --------------------------------------------------

    @staticmethod
    def from_bases(n: int, bases: Iterable[Iterable[int] | int]) -> "Matroid":
        """Build and fully validate a matroid from an explicit basis list."""
        masks = [coerce_mask(b, n, what="basis") for b in bases]
        if not masks:
            raise ValidationError("matroid needs at least one basis")
        return Matroid(n, masks[0].bit_count(), masks)

    @property
    def ground(self) -> GroundSet:
        return GroundSet(self.n)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    # -- independence and rank ------------------------------------------

    @property
    def independent_masks(self) -> frozenset[int]:
        """Every independent set, as masks (all subsets of bases)."""
        if self._indep is None:
            indep = set()
            for b in self.basis_masks:
                sub = b
                while True:
                    indep.add(sub)
                    if sub == 0:
                        break
                    sub = (sub - 1) & b
            self._indep = frozenset(indep)
        return self._indep

    def _rank_table(self) -> bytearray | None:
        if self.n > RANK_TABLE_LIMIT:
            return None
        if self._ranks is None:
            # subset DP: table[X] = size of the largest independent subset of X
            size = 1 << self.n
            table = bytearray(size)
            indep = self.independent_masks
            for m in range(1, size):
                best = m.bit_count() if m in indep else 0
                rest = m
                while rest:
                    low = rest & -rest
                    v = table[m ^ low]
                    if v > best:
                        best = v
                    rest ^= low
                table[m] = best
            self._ranks = table
        return self._ranks

    def rank_of_mask(self, x: int) -> int:
        table = self._rank_table()
        if table is not None:
            return table[x]
        best = 0
        for b in self.basis_masks:
            c = (x & b).bit_count()
            if c > best:
                best = c
                if best == self.rank:
                    break
        return best

    def rank_of(self, x: Iterable[int] | int) -> int:
        return self.rank_of_mask(coerce_mask(x, self.n))

    def is_independent(self, x: Iterable[int] | int) -> bool:
        return coerce_mask(x, self.n) in self.independent_masks

    def spans(self, x: Iterable[int] | int) -> bool:
        return self.rank_of_mask(coerce_mask(x, self.n)) == self.rank

    # -- closure and flats ----------------------------------------------

    def closure_mask(self, x: int) -> int:
        r = self.rank_of_mask(x)
        out = x
        rest = self.full & ~x
        for e in iter_elements(rest):
            if self.rank_of_mask(x | (1 << e)) == r:
                out |= 1 << e
        return out

    def closure_of(self, x: Iterable[int] | int) -> tuple[int, ...]:
        return elements_of(self.closure_mask(coerce_mask(x, self.n)))

    def flat_lattice(self) -> FlatLattice:
        if self._lattice is None:
            by_rank = []
            for k in range(self.rank + 1):
                seen = {self.closure_mask(m)
                        for m in self.independent_masks if m.bit_count() == k}
                by_rank.append(sort_masks(seen))
            self._lattice = FlatLattice(self.n, self.rank, tuple(by_rank))
        return self._lattice

    def flats_at_masks(self, k: int) -> tuple[int, ...]:
        if not 0 <= k <= self.rank:
            raise ValueError(f"flat rank {k} outside 0..{self.rank}")
        return self.flat_lattice().at(k)

    def flats_at(self, k: int, *, min_size: int = 0) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(f) for f in self.flats_at_masks(k)
                     if f.bit_count() >= min_size)

    def nontrivial_flats(self) -> tuple[tuple[int, int], ...]:
        """(rank, flat mask) for every flat with more elements than rank, ranks 1..r-1."""
        out = []
        for k in range(1, self.rank):
            out.extend((k, f) for f in self.flat_lattice().nontrivial_at(k))
        return tuple(out)

    @property
    def loops_mask(self) -> int:
        return self.closure_mask(0)

    @property
    def is_simple(self) -> bool:
        if self.loops_mask:
            return False
        return all(f.bit_count() == 1 for f in self.flats_at_masks(1)) if self.rank >= 1 else True

    # -- bases ------------------------------------------------------------

    def bases(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(b) for b in self.basis_masks)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matroid)
                and self.n == other.n
                and self.rank == other.rank
                and self.basis_masks == other.basis_masks)

    def __hash__(self) -> int:
        return hash((self.n, self.rank, self.basis_masks))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.basis_masks)})"


# ---------------------------------------------------------------------------
# validation helpers


def _check_exchange(m: Matroid) -> None:
    """Basis-exchange axiom over every ordered pair — a complete certificate.

    For equal-cardinality set families this axiom *characterizes* matroid
    basis systems, so passing it proves the input is a matroid.
    """
    bases = m.basis_masks
    basis_set = m._basis_set
    for b1 in bases:
        for b2 in bases:
            need = b2 & ~b1
            if not need:
                continue
            avail = b1 & ~b2
            for f in iter_elements(need):
                fbit = 1 << f
                ok = False
                for e in iter_elements(avail):
                    if (b1 ^ (1 << e)) | fbit in basis_set:
                        ok = True
                        break
                if not ok:
                    raise ValidationError(
                        f"basis exchange fails for B={format_set(b1)}, "
                        f"B'={format_set(b2)}, f={f}")


def _sampled_rank_checks(m: Matroid) -> None:
    """Deterministic spot checks: unit increase and submodularity."""
    rng = random.Random(_SAMPLE_SEED)
    space = 1 << m.n
    for _ in range(_SAMPLE_COUNT):
        x = rng.randrange(space)
        e = 1 << rng.randrange(m.n)
        rx = m.rank_of_mask(x)
        if m.rank_of_mask(x | e) - rx not in (0, 1):
            raise ValidationError(f"rank not unit-increasing at {format_set(x)}")
        y = rng.randrange(space)
        if (m.rank_of_mask(x | y) + m.rank_of_mask(x & y)
                > rx + m.rank_of_mask(y)):
            raise ValidationError(
                f"rank not submodular at {format_set(x)}, {format_set(y)}")


def matroid_from_flats(n: int, rank: int,
                       nontrivial_flats: Iterable[tuple[int, Iterable[int] | int]],
                       ) -> Matroid:
    """Build a simple matroid from its nontrivial flats.

    ``nontrivial_flats`` lists pairs (k, flat) with 1 <= k < rank and
    |flat| > k; every independent k-set inside no listed flat of lower rank
    is implicitly its own (trivial) flat.  The rank function realized is

        rk(X) = min(|X|, rank, min{k : X is inside a listed rank-k flat}).

    Validation is complete, not heuristic: listed flats must be mutually
    consistent, the resulting basis family must satisfy the exchange axiom
    for every ordered pair (which certifies matroidness), and the derived
    nontrivial flats must round-trip to exactly the listed ones.  Unit
    increase and submodularity of the rank function are additionally
    spot-checked on a fixed pseudo-random sample.
    """
    if n < 1:
        raise EmptyGroundSet("matroid needs at least one element")
    if n > MAX_GROUND:
        raise GroundSetTooLarge(f"ground set of size {n} exceeds the cap of {MAX_GROUND}")
    if not 1 <= rank <= n:
        raise ValidationError(f"rank {rank} outside 1..{n}")

    listed: dict[int, list[int]] = {}
    for k, flat in nontrivial_flats:
        if isinstance(flat, int):
            fmask = flat
            if fmask < 0 or fmask >= (1 << n):
                raise FormatError("flat element out of range")
        else:
            elems = tuple(flat)
            if any(not isinstance(e, int) or e < 0 or e >= n for e in elems):
                raise FormatError("flat element out of range")
            if len(set(elems)) != len(elems):
                raise FormatError("flat lists an element twice")
            fmask = mask_of(elems)
        if not 1 <= k < rank:
            raise ValidationError(f"listed flat rank {k} outside 1..{rank - 1}")
        if fmask.bit_count() <= k:
            raise ValidationError(
                f"rank-{k} flat {format_set(fmask)} is trivial and must not be listed")
        bucket = listed.setdefault(k, [])
        if fmask not in bucket:
            bucket.append(fmask)
    for k in listed:
        listed[k] = list(sort_masks(listed[k]))

    ks = sorted(listed)

    def formula_rank(x: int) -> int:
        r = min(x.bit_count(), rank)
        for k in ks:
            if k >= r:
                break
            if any((x & ~f) == 0 for f in listed[k]):
                return k
        return r

    # Listed-flat consistency: each flat must realize its own rank, and two
    # distinct same-rank flats may not share a rank-k subset.
    for k in ks:
        flats_k = listed[k]
        for f in flats_k:
            if formula_rank(f) != k:
                raise ValidationError(
                    f"listed rank-{k} flat {format_set(f)} has rank {formula_rank(f)}")
        for i, f in enumerate(flats_k):
            for g in flats_k[i + 1:]:
                shared = f & g
                if formula_rank(shared) >= k:
                    raise ValidationError(
                        f"rank-{k} flats {format_set(f)} and {format_set(g)} "
                        f"share the rank-{k} set {format_set(shared)}")

    # Candidate bases: rank-subsets inside no listed flat of lower rank.
    low_flats = [f for k in ks for f in listed[k] if k < rank]
    bases = []
    for combo in combinations(range(n), rank):
        bmask = mask_of(combo)
        if all((bmask & ~f) != 0 for f in low_flats):
            bases.append(bmask)
    if not bases:
        raise ValidationError("flat list admits no basis")

    m = Matroid(n, rank, bases, _validated=True)
    _check_exchange(m)

    # Round-trip: derived nontrivial flats must equal the listed ones.
    for k in range(1, rank):
        derived = m.flat_lattice().nontrivial_at(k)
        if set(derived) != set(listed.get(k, ())):
            missing = set(listed.get(k, ())) - set(derived)
            extra = set(derived) - set(listed.get(k, ()))
            detail = []
            if missing:
                detail.append("not realized: "
                              + " ".join(format_set(f) for f in sort_masks(missing)))
            if extra:
                detail.append("unlisted: "
                              + " ".join(format_set(f) for f in sort_masks(extra)))
            raise ValidationError(
                f"rank-{k} flats do not round-trip ({'; '.join(detail)})")

    _sampled_rank_checks(m)
    return m


# ---------------------------------------------------------------------------
# the operation surface


def rank_of(m: Matroid, x: Iterable[int] | int) -> int:
    return m.rank_of(x)


def closure_of(m: Matroid, x: Iterable[int] | int) -> tuple[int, ...]:
    return m.closure_of(x)


def flats_at(m: Matroid, k: int, *, min_size: int = 0) -> tuple[tuple[int, ...], ...]:
    return m.flats_at(k, min_size=min_size)


def bases(m: Matroid) -> tuple[tuple[int, ...], ...]:
    return m.bases()


def removal_map(n: int, removed: Iterable[int] | int) -> PointedMap:
    """The order-preserving relabelling left by removing elements.

    Deletion and contraction re-index the surviving elements to 0..m-1 in
    increasing original order; this map sends each new index to its
    original label.
    """
    rmask = coerce_mask(removed, n, what="removed set")
    kept = [e for e in range(n) if not (rmask >> e) & 1]
    return PointedMap(tuple(kept))


def delete(m: Matroid, x: Iterable[int] | int) -> Matroid:
    """Restrict to E minus x; survivors are re-indexed order-preservingly.

    The rank may drop.  Use :func:`removal_map` to recover original labels.
    """
    xmask = coerce_mask(x, m.n)
    if xmask == m.full:
        raise EmptyGroundSet("cannot delete the whole ground set")
    keep = m.full & ~xmask
    kept = elements_of(keep)
    pos = {e: i for i, e in enumerate(kept)}
    new_rank = m.rank_of_mask(keep)
    new_bases = set()
    for ind in m.independent_masks:
        if ind & ~keep == 0 and ind.bit_count() == new_rank:
            new_bases.add(mask_of(pos[e] for e in iter_elements(ind)))
    return Matroid(len(kept), new_rank, new_bases, _validated=True)


def contract(m: Matroid, x: Iterable[int] | int) -> Matroid:
    """Contract x; survivors re-indexed as in :func:`delete`.

    Implemented through the rank function of the minor,
    rk(Y) = rk(Y ∪ X) - rk(X); loops and parallel elements may appear.
    """
    xmask = coerce_mask(x, m.n)
    if xmask == m.full:
        raise EmptyGroundSet("cannot contract the whole ground set")
    kept = elements_of(m.full & ~xmask)
    rk_x = m.rank_of_mask(xmask)
    new_rank = m.rank - rk_x
    new_bases = []
    for combo in combinations(range(len(kept)), new_rank):
        ymask = mask_of(kept[i] for i in combo)
        if m.rank_of_mask(ymask | xmask) == rk_x + new_rank:
            new_bases.append(mask_of(combo))
    return Matroid(len(kept), new_rank, new_bases, _validated=True)


def simplify(m: Matroid) -> tuple[Matroid, PointedMap]:
    """Drop loops, collapse parallel classes onto least representatives.

    Returns the simple matroid together with a PointedMap whose classes
    record, for each new point, the original elements it absorbs.
    """
    loops = m.loops_mask
    nonloops = m.full & ~loops
    if nonloops == 0:
        raise EmptyGroundSet("every element is a loop")
    class_masks = []
    seen = 0
    for e in iter_elements(nonloops):
        if (seen >> e) & 1:
            continue
        cls = m.closure_mask(1 << e) & nonloops
        class_masks.append(cls)
        seen |= cls
    # order classes by least representative, so point order follows labels
    class_masks.sort(key=lambda c: c & -c)
    index_of = {}
    for i, cls in enumerate(class_masks):
        for e in iter_elements(cls):
            index_of[e] = i
    new_bases = {mask_of(index_of[e] for e in iter_elements(b))
                 for b in m.basis_masks}
    simple = Matroid(len(class_masks), m.rank, new_bases, _validated=True)
    pmap = PointedMap(tuple(min(iter_elements(c)) for c in class_masks),
                      tuple(elements_of(c) for c in class_masks))
    return simple, pmap


def truncation(m: Matroid) -> Matroid:
    """Lower the rank by one: bases become the independent (r-1)-sets."""
    if m.rank <= 1:
        raise RankTooLow(f"cannot truncate a matroid of rank {m.rank}")
    new_bases = [i for i in m.independent_masks if i.bit_count() == m.rank - 1]
    return Matroid(m.n, m.rank - 1, new_bases, _validated=True)


def is_weak_map_image(m: Matroid, other: Matroid) -> bool:
    """True iff every independent set of ``m`` is independent in ``other``."""
    if m.n != other.n:
        raise GroundSetMismatch(
            f"ground sets differ: {m.n} vs {other.n}")
    return m.independent_masks <= other.independent_masks


def is_quotient(m: Matroid, other: Matroid) -> bool:
    """Weak map image whose flats all remain flats of ``other``."""
    if not is_weak_map_image(m, other):
        return False
    return m.flat_lattice().all_flats() <= other.flat_lattice().all_flats()


# ---------------------------------------------------------------------------
# isomorphism


def _element_signatures(m: Matroid) -> list[tuple]:
    lattice = m.flat_lattice()
    sigs: list[tuple] = []
    for e in range(m.n):
        bit = 1 << e
        sig = []
        for k in range(1, m.rank):
            sizes = sorted(f.bit_count() for f in lattice.nontrivial_at(k)
                           if f & bit)
            sig.append(tuple(sizes))
        sigs.append(tuple(sig))
    return sigs


def are_isomorphic(m1: Matroid, m2: Matroid) -> PointedMap | None:
    """Search for a bijection carrying bases exactly onto bases.

    Invariant pruning first (rank, basis count, per-rank flat size
    multisets, per-element flat membership signatures), then plain
    backtracking in ascending element order; for identical inputs this
    finds the identity.  Returns the PointedMap from ``m1``'s elements to
    ``m2``'s, or None.
    """
    if m1.n != m2.n or m1.rank != m2.rank:
        return None
    if len(m1.basis_masks) != len(m2.basis_masks):
        return None
    lat1, lat2 = m1.flat_lattice(), m2.flat_lattice()
    for k in range(1, m1.rank):
        sizes1 = sorted(f.bit_count() for f in lat1.nontrivial_at(k))
        sizes2 = sorted(f.bit_count() for f in lat2.nontrivial_at(k))
        if sizes1 != sizes2:
            return None
    sig1, sig2 = _element_signatures(m1), _element_signatures(m2)
    candidates = [[t for t in range(m2.n) if sig2[t] == sig1[d]]
                  for d in range(m1.n)]
    if any(not c for c in candidates):
        return None

    n, r = m1.n, m1.rank
    ind1, ind2 = m1.independent_masks, m2.independent_masks
    image = [-1] * n
    used = [False] * n

    def consistent(d: int, t: int) -> bool:
        # check every <= r sized subset whose largest domain element is d
        prior = list(range(d))
        for size in range(min(r, d + 1)):
            for combo in combinations(prior, size):
                dm = mask_of(combo) | (1 << d)
                im = mask_of(image[e] for e in combo) | (1 << t)
                if (dm in ind1) != (im in ind2):
                    return False
        return True

    def backtrack(d: int) -> bool:
        if d == n:
            return True
        for t in candidates[d]:
            if used[t]:
                continue
            if consistent(d, t):
                image[d] = t
                used[t] = True
                if backtrack(d + 1):
                    return True
                used[t] = False
                image[d] = -1
        return False

    if backtrack(0):
        return PointedMap(tuple(image))
    return None


def relabel(m: Matroid, pmap: PointedMap, n_target: int | None = None) -> Matroid:
    """Apply a PointedMap to every element: element e becomes pmap(e)."""
    n = n_target if n_target is not None else m.n
    new_bases = [mask_of(pmap(e) for e in iter_elements(b)) for b in m.basis_masks]
    return Matroid(n, m.rank, new_bases, _validated=True)
