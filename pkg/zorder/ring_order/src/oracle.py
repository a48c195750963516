"""Brute-force reference implementations built from the order relation alone.

Everything here is derived from poset.leq (and arith.gcd); nothing calls the structure module, so the
theorem-based operations can be cross-checked against an independent computation. Performance is
not a goal: the relation is materialized as an n x n boolean matrix and searched.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from zorder.common.zorder.src.config import get_cap
from zorder.ring_order.src.errors import CapExceededError, NotGeneralizedProjectionError, TheoremViolationError
from zorder.ring_order.src.poset import ZnContext, leq

ABSENT = -1


@dataclass(frozen=True)
class BoundSet:
    elements: frozenset[int]


class Extreme(Enum):
    SMALLEST = "smallest"
    LARGEST = "largest"


@dataclass(frozen=True)
class BruteLatticeResult:
    is_lattice: bool
    witness: tuple[int, int] | None = None


@functools.lru_cache(maxsize=8)
def relation(ctx: ZnContext) -> np.ndarray:
    """Read-only matrix R with R[a, b] = leq(a, b)."""
    n = ctx.n
    matrix = np.array([[leq(ctx, a, b) for b in range(n)] for a in range(n)], dtype=bool)
    matrix.setflags(write=False)
    return matrix


def _least_elements(le: np.ndarray, bounds: np.ndarray) -> np.ndarray:
    """For each row of bounds (a boolean set), the least member under le or ABSENT.

    The least member of a set, if any, has the largest up-set among the members, so that member is
    the only candidate and just needs to be checked against the whole set.
    """
    up_size = le.sum(axis=1)
    candidates = np.where(bounds, up_size[None, :], -1).argmax(axis=1)
    nonempty = bounds.any(axis=1)
    is_least = (~bounds | le[candidates]).all(axis=1) & nonempty
    return np.where(is_least, candidates, ABSENT)


def _join_table(le: np.ndarray) -> np.ndarray:
    size = le.shape[0]
    table = np.empty((size, size), dtype=np.int64)
    for a in range(size):
        table[a] = _least_elements(le, le[a][None, :] & le)
    return table


def brute_join_table(ctx: ZnContext) -> np.ndarray:
    """T[a, b] = sup {a, b} or ABSENT."""
    return _join_table(relation(ctx))


def brute_meet_table(ctx: ZnContext) -> np.ndarray:
    """T[a, b] = inf {a, b} or ABSENT (joins of the dual order)."""
    return _join_table(relation(ctx).T)


def brute_join(ctx: ZnContext, a: int, b: int) -> int | None:
    """Least common upper bound of a and b, searched in the relation matrix.

    Args:
        ctx: The modulus context
        a: A canonical residue
        b: A canonical residue

    Returns:
        int | None: The join, or None if the upper bounds of a and b have no least element
    """
    le = relation(ctx)
    upper = np.flatnonzero(le[a] & le[b])
    for c in upper:
        if le[c, upper].all():
            return int(c)
    return None


def brute_meet(ctx: ZnContext, a: int, b: int) -> int | None:
    """Greatest common lower bound of a and b; None if it does not exist (see brute_join)."""
    le = relation(ctx)
    lower = np.flatnonzero(le[:, a] & le[:, b])
    for c in lower:
        if le[lower, c].all():
            return int(c)
    return None


def brute_extreme(ctx: ZnContext, members: BoundSet, direction: Extreme) -> int | None:
    """The member below (SMALLEST) or above (LARGEST) all members, if any."""
    if not members.elements:
        raise ValueError("brute_extreme needs a nonempty set")
    le = relation(ctx)
    idx = np.array(sorted(members.elements), dtype=np.int64)
    sub = le[np.ix_(idx, idx)]
    hits = sub.all(axis=1) if direction is Extreme.SMALLEST else sub.all(axis=0)
    found = idx[hits]
    return int(found[0]) if found.size else None


def brute_is_lattice(ctx: ZnContext, cap: int | None = None) -> BruteLatticeResult:
    """Every pair has a join and a meet; otherwise the lexicographically first failing pair.

    Raises:
        CapExceededError: If n is larger than the oracle_lattice cap
    """
    limit = cap if cap is not None else get_cap("oracle_lattice")
    if ctx.n > limit:
        raise CapExceededError("oracle_lattice", limit, ctx.n)

    failing = (brute_join_table(ctx) == ABSENT) | (brute_meet_table(ctx) == ABSENT)
    if not failing.any():
        return BruteLatticeResult(is_lattice=True)
    a, b = np.argwhere(failing)[0]
    return BruteLatticeResult(is_lattice=False, witness=(int(a), int(b)))


def brute_subposet_is_lattice(ctx: ZnContext, members: BoundSet) -> bool:
    """Whether members, with the induced order, form a lattice on their own."""
    idx = np.array(sorted(members.elements), dtype=np.int64)
    sub = relation(ctx)[np.ix_(idx, idx)]
    return bool((_join_table(sub) != ABSENT).all() and (_join_table(sub.T) != ABSENT).all())


def brute_is_regular(ctx: ZnContext, a: int) -> bool:
    """Whether a is von Neumann regular, i.e. a = a^2 * b (mod n) for some b in Z_n.

    Every b is tried, so the cost is linear in n.

    Args:
        ctx: The modulus context
        a: A canonical residue

    Returns:
        bool: True if such a b exists
    """
    r = np.arange(ctx.n, dtype=np.int64)
    return bool(np.any(((a * a) % ctx.n * r) % ctx.n == a))


def _is_projection(ctx: ZnContext, e: int) -> bool:
    return (e * e) % ctx.n == e


def _returns_to_itself(ctx: ZnContext, a: int) -> bool:
    """a^k = a for some k >= 2, by repeated multiplication."""
    power = a
    for _ in range(ctx.n):
        power = (power * a) % ctx.n
        if power == a:
            return True
    return False


def _unique(kind: str, ctx: ZnContext, a: int, found: np.ndarray) -> int:
    if found.size != 1:
        raise TheoremViolationError(f"{kind} covering projection of {a} in Z_{ctx.n} is not unique: {found.tolist()}")
    return int(found[0])


def brute_covering_projections(ctx: ZnContext, a: int) -> tuple[int, int]:
    """(lower, upper): the maximal projection <= a and the minimal projection >= a.

    Raises:
        NotGeneralizedProjectionError: If a^k != a for every k >= 2
        TheoremViolationError: If either extreme projection is not unique
    """
    if not _returns_to_itself(ctx, a):
        raise NotGeneralizedProjectionError(f"{a} is not a generalized projection in Z_{ctx.n}")

    le = relation(ctx)
    projections = np.array([e for e in range(ctx.n) if _is_projection(ctx, e)], dtype=np.int64)

    below = projections[le[projections, a]]
    sub = le[np.ix_(below, below)]
    maximal = below[sub.sum(axis=1) == 1]  # only above itself

    above = projections[le[a, projections]]
    sub = le[np.ix_(above, above)]
    minimal = above[sub.sum(axis=0) == 1]  # only below itself

    return _unique("Lower", ctx, a, maximal), _unique("Upper", ctx, a, minimal)


def brute_upper_covers(ctx: ZnContext, a: int) -> set[int]:
    """Elements c > a with nothing strictly between a and c."""
    le = relation(ctx)
    strict = np.flatnonzero(le[a])
    strict = strict[strict != a]
    return {int(c) for c in strict if not any(le[u, c] for u in strict if u != c)}


def brute_lower_covers(ctx: ZnContext, a: int) -> set[int]:
    """Elements c < a with nothing strictly between c and a."""
    le = relation(ctx)
    strict = np.flatnonzero(le[:, a])
    strict = strict[strict != a]
    return {int(c) for c in strict if not any(le[c, u] for u in strict if u != c)}
