"""Axiom batteries: machine checks that the algebra behaves like it must.

Each function returns a list of human-readable failure strings (empty means
clean), so the same battery can run inside the reproduction report and the
test suite.  Exhaustive checks cover every subset; the sampled variants use
a fixed seed and are deterministic.
"""

from __future__ import annotations

import random
from itertools import combinations

from .bitsets import format_set, full_mask, iter_elements
from .erection import ErectionFamily
from .linalg import (
    ExactMatrix,
    column_matroid,
    formalization,
    kernel_basis,
    weight3_subspace,
)
from .matroid import Matroid, is_quotient, truncation


def closure_axiom_failures(m: Matroid, *, samples: int | None = None,
                           seed: int = 0xC10) -> list[str]:
    """Extensive, monotone, idempotent closure plus the exchange property.

    With ``samples`` None every subset is visited (use only for small n);
    otherwise a fixed-seed random sample of subsets is checked.
    """
    failures: list[str] = []
    full = full_mask(m.n)
    if samples is None:
        subsets = range(full + 1)
    else:
        rng = random.Random(seed)
        subsets = [rng.randrange(full + 1) for _ in range(samples)]
    for x in subsets:
        cl = m.closure_mask(x)
        if x & ~cl:
            failures.append(f"closure not extensive at {format_set(x)}")
            continue
        if m.closure_mask(cl) != cl:
            failures.append(f"closure not idempotent at {format_set(x)}")
        rx = m.rank_of_mask(x)
        if m.rank_of_mask(cl) != rx:
            failures.append(f"closure changes rank at {format_set(x)}")
        for e in range(m.n):
            ebit = 1 << e
            bigger = m.closure_mask(x | ebit)
            if cl & ~bigger:
                failures.append(
                    f"closure not monotone at {format_set(x)} + {e}")
            # exchange: f in cl(X+e) - cl(X) implies e in cl(X+f)
            gained = bigger & ~cl & ~ebit
            for f in iter_elements(gained):
                if not (m.closure_mask(x | (1 << f)) >> e) & 1:
                    failures.append(
                        f"closure exchange fails at {format_set(x)}, e={e}, f={f}")
        if failures:
            break
    return failures


def rank_axiom_failures(m: Matroid, *, samples: int | None = None,
                        seed: int = 0xA5) -> list[str]:
    """Bounds, unit increase, and submodularity of the rank function."""
    failures: list[str] = []
    full = full_mask(m.n)
    if samples is None:
        pairs = ((x, y) for x in range(full + 1) for y in range(full + 1))
    else:
        rng = random.Random(seed)
        pairs = ((rng.randrange(full + 1), rng.randrange(full + 1))
                 for _ in range(samples))
    for x, y in pairs:
        rx = m.rank_of_mask(x)
        if not 0 <= rx <= min(x.bit_count(), m.rank):
            failures.append(f"rank out of bounds at {format_set(x)}")
            break
        e = (y % m.n) if m.n else 0
        step = m.rank_of_mask(x | (1 << e)) - rx
        if step not in (0, 1):
            failures.append(f"rank not unit-increasing at {format_set(x)} + {e}")
            break
        if (m.rank_of_mask(x | y) + m.rank_of_mask(x & y)
                > rx + m.rank_of_mask(y)):
            failures.append(
                f"rank not submodular at {format_set(x)}, {format_set(y)}")
            break
    return failures


def exchange_failures(m: Matroid) -> list[str]:
    """Basis exchange over every ordered pair of bases."""
    basis_set = frozenset(m.basis_masks)
    for b1 in m.basis_masks:
        for b2 in m.basis_masks:
            for f in iter_elements(b2 & ~b1):
                fbit = 1 << f
                if not any((b1 ^ (1 << e)) | fbit in basis_set
                           for e in iter_elements(b1 & ~b2)):
                    return [f"exchange fails for {format_set(b1)}, "
                            f"{format_set(b2)}, f={f}"]
    return []


def minor_commutation_failures(m: Matroid, *, samples: int = 30,
                               seed: int = 0xD7) -> list[str]:
    """(M/X) - Y equals (M - Y)/X for sampled disjoint X, Y.

    Both orders remove the same elements, so after the order-preserving
    re-indexings the two results must be canonically equal.
    """
    from .matroid import contract, delete  # local to avoid cycle at import
    failures = []
    rng = random.Random(seed)
    full = full_mask(m.n)
    for _ in range(samples):
        x = rng.randrange(full + 1) & rng.randrange(full + 1)
        y = rng.randrange(full + 1) & rng.randrange(full + 1) & ~x
        if x | y == full or (x | y) == 0:
            continue
        # translate the second operation's set into post-removal labels
        via_contract = contract(m, x)
        y_after = _relabel_into_complement(m.n, x, y)
        a = delete(via_contract, y_after) if y_after else via_contract
        via_delete = delete(m, y) if y else m
        x_after = _relabel_into_complement(m.n, y, x)
        b = contract(via_delete, x_after) if x_after else via_delete
        if a != b:
            failures.append(
                f"contract/delete disagree for X={format_set(x)}, Y={format_set(y)}")
            break
    return failures


def _relabel_into_complement(n: int, removed: int, subset: int) -> int:
    out = 0
    idx = 0
    for e in range(n):
        if (removed >> e) & 1:
            continue
        if (subset >> e) & 1:
            out |= 1 << idx
        idx += 1
    return out


def erection_family_failures(family: ErectionFamily) -> list[str]:
    """Truncation identity, weak-order antisymmetry, unique maximum."""
    failures = []
    base = family.base
    for e in family.nontrivial():
        if truncation(e) != base:
            failures.append("an erection does not truncate back to its base")
    order = family.weak_order
    k = len(family.erections)
    for i in range(k):
        if not order[i][i]:
            failures.append("weak order is not reflexive")
        for j in range(i + 1, k):
            if order[i][j] and order[j][i]:
                failures.append(
                    "weak order not antisymmetric on distinct erections")
    try:
        family.free()
    except Exception as exc:  # MaximalityViolation included
        failures.append(f"no unique weak-order maximum: {exc}")
    return failures


def formalization_quotient_failures(a: ExactMatrix) -> list[str]:
    """The rebuilt arrangement must dominate the original.

    Checks: the weight-3 subspace sits inside the kernel; the column
    matroid of A is a quotient of the formalization's with identical
    rank-1 and rank-2 flats; and rank(A_F) = rank(A) exactly for formal A.
    """
    failures = []
    ker = kernel_basis(a)
    w3 = weight3_subspace(a)
    if not w3.is_subspace_of(ker):
        failures.append("weight-3 relations escape the kernel")
    g = formalization(a)
    ma, mg = column_matroid(a), column_matroid(g)
    if not is_quotient(ma, mg):
        failures.append("column matroid is not a quotient of its formalization")
    for k in (1, 2):
        if ma.rank >= k and mg.rank >= k:
            if ma.flats_at_masks(k) != mg.flats_at_masks(k):
                failures.append(f"rank-{k} flats differ after formalization")
    formal = w3.dim == ker.dim
    if (g.rank() == a.rank()) != formal:
        failures.append("rank equality disagrees with formality")
    return failures


def quotient_order_failures(matroids: list[Matroid]) -> list[str]:
    """Reflexivity, antisymmetry, transitivity of the quotient relation."""
    failures = []
    n = len(matroids)
    rel = [[False] * n for _ in range(n)]
    for i, a in enumerate(matroids):
        for j, b in enumerate(matroids):
            if a.n == b.n:
                rel[i][j] = is_quotient(a, b)
    for i in range(n):
        if matroids[i].n and not rel[i][i]:
            failures.append("quotient relation not reflexive")
    for i in range(n):
        for j in range(n):
            if i != j and rel[i][j] and rel[j][i] and matroids[i] != matroids[j]:
                failures.append("quotient relation not antisymmetric")
            for k in range(n):
                if rel[i][j] and rel[j][k] and not rel[i][k]:
                    failures.append("quotient relation not transitive")
    return failures
