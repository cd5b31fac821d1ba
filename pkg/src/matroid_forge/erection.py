"""Erections: inverting truncation through the copoint characterization.

A rank-(r+1) matroid N on the same ground set is an *erection* of a rank-r
matroid M when truncating N gives back M; M counts as its own (trivial)
erection.  The nontrivial ones are found through their copoints: a family
of blocks is the copoint set of an erection exactly when

  (i)   every block spans M,
  (ii)  every block is (r-1)-closed with respect to M,
  (iii) every basis of M lies in exactly one block.

Condition (iii) is an exact-cover problem over the bases, which is how the
enumeration below works: candidates are all proper spanning (r-1)-closed
subsets, and each exact cover materializes into a matroid one rank up.
The *free* erection is the unique maximum of the family under the weak
order (every independent set of the smaller is independent in the larger).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bitsets import (
    elements_of,
    format_set,
    full_mask,
    iter_elements,
    mask_of,
    sort_masks,
)
from .errors import (
    GroundSetTooLarge,
    MaximalityViolation,
    RankTooLow,
    SearchBudgetExceeded,
    ValidationError,
)
from .matroid import Matroid, is_weak_map_image, matroid_from_flats, truncation

# Exhaustive subset scans stop here; 2^20 is the most we are willing to walk.
EXHAUSTIVE_LIMIT = 20

DEFAULT_NODE_BUDGET = 10 ** 8


@dataclass(frozen=True)
class BlockFamily:
    """A candidate copoint family: subsets of the ground set, canonical order."""

    n: int
    blocks: tuple[int, ...]

    @staticmethod
    def of(n: int, blocks) -> "BlockFamily":
        masks = []
        for b in blocks:
            masks.append(b if isinstance(b, int) else mask_of(b))
        return BlockFamily(n, sort_masks(set(masks)))

    def as_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(b) for b in self.blocks)


@dataclass(frozen=True)
class ErectionCheck:
    """Outcome of the three-condition block test; falsy when any fails."""

    ok: bool
    condition: int | None  # 1-based index of the first violated condition
    witness: str

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ErectionFamily:
    """All erections of a matroid: the trivial one first, then the rest.

    ``weak_order[i][j]`` records whether erection i is a weak map image of
    erection j.  The family always has a unique maximum, the free erection.
    """

    base: Matroid
    erections: tuple[Matroid, ...]
    weak_order: tuple[tuple[bool, ...], ...]

    def __len__(self) -> int:
        return len(self.erections)

    def nontrivial(self) -> tuple[Matroid, ...]:
        return self.erections[1:]

    def free(self) -> Matroid:
        k = len(self.erections)
        maxima = [i for i in range(k)
                  if all(self.weak_order[j][i] for j in range(k))]
        if len(maxima) != 1:
            raise MaximalityViolation(
                f"weak order has {len(maxima)} maxima, expected exactly one")
        return self.erections[maxima[0]]


def is_k_closed(m: Matroid, x, k: int) -> bool:
    """Does x contain the closure of each of its k-element subsets?"""
    xmask = x if isinstance(x, int) else mask_of(x)
    elems = elements_of(xmask)
    for combo in combinations(elems, k):
        if m.closure_mask(mask_of(combo)) & ~xmask:
            return False
    return True


def _closure_table(m: Matroid, k: int) -> list[tuple[int, int]]:
    """(subset, closure) for the k-subsets whose closure gains elements."""
    table = []
    for combo in combinations(range(m.n), k):
        smask = mask_of(combo)
        cmask = m.closure_mask(smask)
        if cmask != smask:
            table.append((smask, cmask))
    return table


def spanning_k_closed_masks(m: Matroid, k: int, *, proper_only: bool = True) -> tuple[int, ...]:
    if k < 1:
        raise ValueError("k must be at least 1")
    if m.n > EXHAUSTIVE_LIMIT:
        raise GroundSetTooLarge(
            f"exhaustive scan caps at {EXHAUSTIVE_LIMIT} elements, got {m.n}")
    table = _closure_table(m, k)
    full = full_mask(m.n)
    out = []
    for x in range(full + 1):
        if proper_only and x == full:
            continue
        if m.rank_of_mask(x) != m.rank:
            continue
        if all(cl & ~x == 0 for s, cl in table if s & ~x == 0):
            out.append(x)
    return tuple(sort_masks(out))


def spanning_k_closed_sets(m: Matroid, k: int, *, proper_only: bool = True
                           ) -> tuple[tuple[int, ...], ...]:
    """All spanning k-closed subsets of the ground set, canonically sorted.

    Exhaustive over all 2^n subsets (n capped at 20), pruned through a
    precomputed table of k-subset closures.  With ``proper_only`` the full
    ground set itself is excluded.
    """
    return tuple(elements_of(x)
                 for x in spanning_k_closed_masks(m, k, proper_only=proper_only))


def check_erection_blocks(m: Matroid, family) -> ErectionCheck:
    """Test the three copoint conditions, reporting the first violation."""
    if isinstance(family, BlockFamily):
        blocks = family.blocks
    else:
        blocks = BlockFamily.of(m.n, family).blocks
    k = m.rank - 1
    for b in blocks:
        if m.rank_of_mask(b) != m.rank:
            return ErectionCheck(False, 1, f"block {format_set(b)} does not span")
    for b in blocks:
        if not is_k_closed(m, b, k):
            return ErectionCheck(False, 2, f"block {format_set(b)} is not {k}-closed")
    for basis in m.basis_masks:
        hits = sum(1 for b in blocks if basis & ~b == 0)
        if hits != 1:
            return ErectionCheck(
                False, 3, f"basis {format_set(basis)} lies in {hits} blocks")
    return ErectionCheck(True, None,
                         f"{len(blocks)} blocks span, are {k}-closed, "
                         f"and partition the bases")


def _exact_covers(num_items: int, cover_masks: list[int], budget: int
                  ) -> list[tuple[int, ...]]:
    """All exact covers of {0..num_items-1} by the given item masks.

    Plain recursive Algorithm X: branch on the uncovered item with the
    fewest compatible candidates (first such item on ties), candidates in
    ascending index order, so the solution list is deterministic.  Every
    explored branch costs one node against the budget.
    """
    full = full_mask(num_items)
    containing: list[list[int]] = [[] for _ in range(num_items)]
    for ci, cm in enumerate(cover_masks):
        for item in iter_elements(cm):
            containing[item].append(ci)
    solutions: list[tuple[int, ...]] = []
    chosen: list[int] = []
    nodes = 0

    def rec(covered: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(
                f"exact cover search exceeded {budget} nodes")
        if covered == full:
            solutions.append(tuple(chosen))
            return
        best: list[int] | None = None
        for item in iter_elements(full & ~covered):
            avail = [ci for ci in containing[item]
                     if cover_masks[ci] & covered == 0]
            if best is None or len(avail) < len(best):
                best = avail
                if not avail:
                    break
        assert best is not None
        for ci in best:
            chosen.append(ci)
            rec(covered | cover_masks[ci])
            chosen.pop()

    rec(0)
    return solutions


def _materialize(m: Matroid, blocks: tuple[int, ...]) -> Matroid:
    """Build the erection whose copoints are the given blocks.

    The new matroid keeps every nontrivial flat of m at ranks 1..r-1 and
    gains the blocks with more than r elements as rank-r flats; blocks of
    exactly r elements become trivial flats on their own.  Full validation
    runs inside matroid_from_flats, so a bad block family cannot slip
    through as a non-matroid.
    """
    r = m.rank
    flats: list[tuple[int, int]] = list(m.nontrivial_flats())
    flats.extend((r, b) for b in blocks if b.bit_count() > r)
    erected = matroid_from_flats(m.n, r + 1, flats)
    if truncation(erected) != m:
        raise ValidationError("materialized erection does not truncate back")
    return erected


def enumerate_erections(m: Matroid, *, budget: int | None = None) -> ErectionFamily:
    """Every erection of m, trivial first, with the weak-order matrix.

    Candidates are the proper spanning (r-1)-closed sets; exact cover of
    the bases picks out the families satisfying the copoint conditions,
    and each solution is materialized and verified to truncate back to m.
    """
    if m.rank < 2:
        raise RankTooLow(f"erections need rank >= 2, got {m.rank}")
    if not m.is_simple:
        raise ValidationError("erection enumeration expects a simple matroid")
    node_budget = DEFAULT_NODE_BUDGET if budget is None else budget
    candidates = spanning_k_closed_masks(m, m.rank - 1, proper_only=True)
    basis_index = {b: i for i, b in enumerate(m.basis_masks)}
    cover_masks = []
    for cand in candidates:
        cover = 0
        for b, i in basis_index.items():
            if b & ~cand == 0:
                cover |= 1 << i
        cover_masks.append(cover)
    solutions = _exact_covers(len(m.basis_masks), list(cover_masks), node_budget)
    assert len(set(solutions)) == len(solutions)
    erections = [m]
    seen = set()
    materialized = []
    for sol in solutions:
        blocks = tuple(candidates[ci] for ci in sol)
        e = _materialize(m, blocks)
        if e not in seen:
            seen.add(e)
            materialized.append(e)
    materialized.sort(key=lambda e: e.basis_masks)
    erections.extend(materialized)
    order = tuple(tuple(is_weak_map_image(a, b) for b in erections)
                  for a in erections)
    return ErectionFamily(m, tuple(erections), order)


def free_erection(m: Matroid, *, budget: int | None = None) -> Matroid:
    """The unique weak-order maximum among all erections of m."""
    return enumerate_erections(m, budget=budget).free()


def tautness_witness(m: Matroid, *, budget: int | None = None) -> Matroid | None:
    """A nontrivial erection of m, if any — evidence that m is not taut.

    An erection has the same points and lines as m and admits m as a
    quotient, so its existence certifies non-tautness.  None means no
    one-step witness exists; it is *not* a tautness certificate, since
    higher-rank lifts beyond single erections are not searched.
    """
    family = enumerate_erections(m, budget=budget)
    if len(family) == 1:
        return None
    return family.free()
