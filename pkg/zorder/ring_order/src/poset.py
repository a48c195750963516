"""The multiplicative partial order on Z_n.

a <= b if and only if a = b or a*b = a (mod n). 0 is the least element, 1 the greatest.

This module also classifies residues (units, nilpotents, projections, generalized projections) through
their CRT components and builds Hasse diagrams. Every operation works inside a ZnContext, which
bundles the modulus with its factorization and Euler's totient.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from zorder.common.zorder.src import zorder_logging as logging
from zorder.common.zorder.src.config import get_cap
from zorder.ring_order.src.arith import Factorization, euler_phi, factorize, gcd, pow_mod, residue_decompose
from zorder.ring_order.src.errors import CapExceededError, InvalidResidueError


@dataclass(frozen=True)
class ZnContext:
    """A modulus with its factorization and cached phi(n). Immutable and hashable."""

    n: int
    factorization: Factorization
    phi_n: int

    @property
    def one(self) -> int:
        """The residue of 1, which is 0 in Z_1."""
        return 1 % self.n


class Comparison(Enum):
    EQUAL = "equal"
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ClassificationFlags:
    is_unit: bool
    is_nilpotent: bool
    is_projection: bool
    is_gp: bool


@dataclass(frozen=True)
class ElementSets:
    """GP(Z_n), P(Z_n), U(Z_n) and N(Z_n) as sorted tuples."""

    gp: tuple[int, ...]
    p: tuple[int, ...]
    u: tuple[int, ...]
    n: tuple[int, ...]


@dataclass(frozen=True)
class HasseDiagram:
    """Cover relation of (Z_n, <=). Each edge is (lower, upper)."""

    n: int
    edges: frozenset[tuple[int, int]]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def upper_covers(self, a: int) -> list[int]:
        return sorted(upper for lower, upper in self.edges if lower == a)

    def lower_covers(self, a: int) -> list[int]:
        return sorted(lower for lower, upper in self.edges if upper == a)


@dataclass(frozen=True)
class Covers:
    lower: tuple[int, ...]
    upper: tuple[int, ...]


def make_context(n: int) -> ZnContext:
    """Create the context for Z_n.

    Raises:
        InvalidModulusError: If n < 1 or n exceeds caps.modulus
    """
    f = factorize(n)
    return ZnContext(n=n, factorization=f, phi_n=euler_phi(f))


def check_residue(ctx: ZnContext, a: int) -> int:
    """Return a unchanged if it is a canonical residue, raise InvalidResidueError otherwise."""
    if not 0 <= a < ctx.n:
        raise InvalidResidueError(f"{a} is not a residue in [0, {ctx.n})")
    return a


def leq(ctx: ZnContext, a: int, b: int) -> bool:
    """a <= b iff a = b or a*b = a (mod n). Inputs must be canonical residues."""
    return a == b or (a * b) % ctx.n == a


def compare(ctx: ZnContext, a: int, b: int) -> Comparison:
    """Relative position of a and b in (Z_n, <=).

    Args:
        ctx: The modulus context
        a: A canonical residue
        b: A canonical residue

    Returns:
        Comparison: EQUAL, LESS (a < b), GREATER (b < a) or INCOMPARABLE

    Raises:
        InvalidResidueError: If a or b is outside [0, n)
    """
    check_residue(ctx, a)
    check_residue(ctx, b)
    if a == b:
        return Comparison.EQUAL
    if leq(ctx, a, b):
        return Comparison.LESS
    if leq(ctx, b, a):
        return Comparison.GREATER
    return Comparison.INCOMPARABLE


def classify(ctx: ZnContext, a: int) -> ClassificationFlags:
    """Classify a residue through its components modulo each p_i^alpha_i.

    A component is a unit iff p_i does not divide it. Nilpotency only needs a = 0 (mod p_i) for
    every i, generalized projections need every component to be 0 or a unit mod p_i^alpha_i.

    Raises:
        InvalidResidueError: If a is outside [0, n)
    """
    check_residue(ctx, a)
    vector = residue_decompose(a, ctx.factorization)
    # (prime, component) pairs; the component is the remainder modulo p^alpha
    parts = [(p, r) for (p, _), (_, r) in zip(ctx.factorization.factors, vector.components)]
    return ClassificationFlags(
        is_unit=all(r % p != 0 for p, r in parts),
        is_nilpotent=all(r % p == 0 for p, r in parts),
        is_projection=(a * a) % ctx.n == a,
        is_gp=all(r == 0 or r % p != 0 for p, r in parts),
    )


def is_regular_gcd(ctx: ZnContext, a: int) -> bool:
    """gcd(a, n) = gcd(a^2, n), with the square computed exactly."""
    check_residue(ctx, a)
    return gcd(a, ctx.n) == gcd(a * a, ctx.n)


def is_regular_power(ctx: ZnContext, a: int, exhaustive: bool = False) -> bool:
    """a^(m+1) = a (mod n) for some m >= 1.

    By default only m = phi(n) is checked. With exhaustive=True every m in [1, n] is tried, which
    must give the same answer.
    """
    check_residue(ctx, a)
    if not exhaustive:
        return pow_mod(a, ctx.phi_n + 1, ctx.n) == a

    power = a
    for _ in range(ctx.n):
        power = (power * a) % ctx.n
        if power == a:
            return True
    return False


def element_sets(ctx: ZnContext) -> ElementSets:
    """Classify every residue of Z_n and collect GP(Z_n), P(Z_n), U(Z_n) and N(Z_n).

    Args:
        ctx: The modulus context

    Returns:
        ElementSets: The four sets as ascending tuples

    Raises:
        CapExceededError: If n is larger than the table cap
    """
    if ctx.n > (limit := get_cap("table")):
        raise CapExceededError("table", limit, ctx.n)

    gp, p, u, nil = [], [], [], []
    for a in range(ctx.n):
        flags = classify(ctx, a)
        if flags.is_gp:
            gp.append(a)
        if flags.is_projection:
            p.append(a)
        if flags.is_unit:
            u.append(a)
        if flags.is_nilpotent:
            nil.append(a)
    return ElementSets(gp=tuple(gp), p=tuple(p), u=tuple(u), n=tuple(nil))


def _guard(ctx: ZnContext, cap: int | None) -> None:
    limit = cap if cap is not None else get_cap("hasse")
    if ctx.n > limit:
        raise CapExceededError("hasse", limit, ctx.n)


def relation_matrix(ctx: ZnContext, cap: int | None = None) -> np.ndarray:
    """Boolean matrix M with M[a, b] = (a <= b)."""
    _guard(ctx, cap)
    r = np.arange(ctx.n, dtype=np.int64)
    matrix = np.outer(r, r) % ctx.n == r[:, None]
    np.fill_diagonal(matrix, True)
    return matrix


def _up_set(ctx: ZnContext, r: np.ndarray, a: int) -> np.ndarray:
    """Boolean row: c with a < c."""
    row = (a * r) % ctx.n == a
    row[a] = False
    return row


def _down_set(ctx: ZnContext, r: np.ndarray, a: int) -> np.ndarray:
    """Boolean row: c with c < a."""
    row = (r * a) % ctx.n == r
    row[a] = False
    return row


def _upper_covers(ctx: ZnContext, r: np.ndarray, a: int) -> np.ndarray:
    ups = np.flatnonzero(_up_set(ctx, r, a))
    dominated = np.zeros(ctx.n, dtype=bool)
    for u in ups:
        dominated |= _up_set(ctx, r, int(u))
    return ups[~dominated[ups]]


def hasse(ctx: ZnContext, cap: int | None = None) -> HasseDiagram:
    """Cover relation of (Z_n, <=).

    For every a the strict up-set is computed from the definition; an upper element is a cover when
    it is not strictly above another upper element (transitive reduction row by row).

    Raises:
        CapExceededError: If n is larger than the hasse cap
    """
    _guard(ctx, cap)
    logging.get_zorder_logger(__name__).debug("Building Hasse diagram of Z_%d", ctx.n)

    r = np.arange(ctx.n, dtype=np.int64)
    edges = {(a, int(c)) for a in range(ctx.n) for c in _upper_covers(ctx, r, a)}

    return HasseDiagram(n=ctx.n, edges=frozenset(edges))


def covers(ctx: ZnContext, a: int, cap: int | None = None) -> Covers:
    """Lower and upper covers of a single element."""
    check_residue(ctx, a)
    _guard(ctx, cap)
    r = np.arange(ctx.n, dtype=np.int64)

    lows = np.flatnonzero(_down_set(ctx, r, a))
    dominated = np.zeros(ctx.n, dtype=bool)
    for low in lows:
        dominated |= _down_set(ctx, r, int(low))
    lower = lows[~dominated[lows]]

    return Covers(
        lower=tuple(int(c) for c in lower),
        upper=tuple(int(c) for c in _upper_covers(ctx, r, a)),
    )
