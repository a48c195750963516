"""Covering projections, ideal and coset extremes, joins, meets and the lattice decision for Z_n.

Notation: for a divisor g of n, the ideal (g) is {k*g mod n} and the coset (g)+1 is {k*g + 1 mod n},
both with n/g members. For a prime factorization n = prod p_i^alpha_i, "component i" of a residue
is its remainder modulo p_i^alpha_i.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum

from zorder.common.zorder.src import zorder_logging as logging
from zorder.common.zorder.src.config import get_cap
from zorder.ring_order.src.arith import Factorization, divisors, euler_phi, gcd, is_square_free, pow_mod, valuation
from zorder.ring_order.src.errors import (
    CapExceededError,
    InvalidModulusError,
    NotADivisorError,
    NotAProjectionError,
    NotGeneralizedProjectionError,
    PreconditionError,
    TheoremViolationError,
)
from zorder.ring_order.src.poset import Comparison, ZnContext, check_residue, classify, compare, leq, make_context


@dataclass(frozen=True)
class ExtremeResult:
    exists: bool
    element: int | None = None


@dataclass(frozen=True)
class CosetSpec:
    """The ideal (generator) when shift = 0, the coset (generator)+1 when shift = 1."""

    generator: int
    shift: int

    def members(self, n: int) -> range | list[int]:
        if self.shift == 0:
            return range(0, n, self.generator)
        return [(k * self.generator + self.shift) % n for k in range(n // self.generator)]


class JoinPath(Enum):
    COMPARABLE = "comparable"
    COSET_SMALLEST = "coset_smallest"
    IDEAL_LARGEST = "ideal_largest"


@dataclass(frozen=True)
class MeetJoinResult:
    exists: bool
    value: int | None
    path: JoinPath
    d: int | None = None


@dataclass(frozen=True)
class LatticeReport:
    """Verdict of the lattice decision for one modulus.

    Attributes:
        n: The modulus
        verdict: True if (Z_n, <=) is a lattice
        failing_n1: A divisor n1 >= 3 whose ideal (n1) has no largest element (verdict False only)
        witness: Incomparable pair inside (failing_n1) without a join (verdict False only)
        fast_path: True if the verdict was decided without scanning ideals (square-free modulus or
            nilpotent generator)
        oracle_agrees: Set by callers that cross-checked the verdict with the brute-force oracle
    """

    n: int
    verdict: bool
    failing_n1: int | None = None
    witness: tuple[int, int] | None = None
    fast_path: bool = False
    oracle_agrees: bool | None = None


def _require_gp(ctx: ZnContext, a: int) -> None:
    if not classify(ctx, a).is_gp:
        raise NotGeneralizedProjectionError(f"{a} is not a generalized projection in Z_{ctx.n}")


def _require_projection_not_one(ctx: ZnContext, e: int) -> None:
    check_residue(ctx, e)
    if e == ctx.one or not classify(ctx, e).is_projection:
        raise NotAProjectionError(f"{e} is not a projection different from 1 in Z_{ctx.n}")


def below_projection(ctx: ZnContext, a: int, e: int) -> bool:
    """a < e for a in GP and e in P minus {1}: wherever e is 0 mod p_i^alpha_i, a must be 0 too.

    Raises:
        NotGeneralizedProjectionError: If a is not in GP(Z_n)
        NotAProjectionError: If e is 1 or not idempotent
    """
    _require_gp(ctx, a)
    _require_projection_not_one(ctx, e)
    return all(e % q != 0 or a % q == 0 for q in ctx.factorization.prime_powers)


def above_projection(ctx: ZnContext, a: int, f: int) -> bool:
    """f < a for a in GP and f in P minus {1}: wherever f is nonzero mod p_j^alpha_j, a must be 1."""
    _require_gp(ctx, a)
    _require_projection_not_one(ctx, f)
    return all(f % q == 0 or a % q == 1 % q for q in ctx.factorization.prime_powers)


def _covering_power(ctx: ZnContext, b: int) -> int:
    """b^phi(n/b) mod n for a product b of whole prime powers p_j^alpha_j of n."""
    cofactor = Factorization(n=ctx.n // b, factors=tuple((p, e) for p, e in ctx.factorization.factors if b % p != 0))
    return pow_mod(b, euler_phi(cofactor), ctx.n)


def upper_covering_projection(ctx: ZnContext, a: int) -> int:
    """The upper covering projection a_u.

    Projections are their own a_u and units give 1. Otherwise b is the product of the p_j^alpha_j
    where a = 0 (mod p_j^alpha_j) and a_u = b^phi(n/b).

    Args:
        ctx: The modulus context
        a: A generalized projection

    Returns:
        int: The least projection above or equal to a

    Raises:
        NotGeneralizedProjectionError: If a is not in GP(Z_n)
    """
    _require_gp(ctx, a)
    flags = classify(ctx, a)
    if flags.is_projection:
        return a
    if flags.is_unit:
        return ctx.one

    b = math.prod(q for q in ctx.factorization.prime_powers if a % q == 0)
    return _covering_power(ctx, b)


def upper_covering_via_power(ctx: ZnContext, a: int) -> int:
    """a^(k-1) for the smallest k >= 2 with a^k = a.

    The search stops at k = phi(n) + 1, where every generalized projection returns to itself.

    Raises:
        NotGeneralizedProjectionError: If a is not in GP(Z_n)
        TheoremViolationError: If a does not return to itself within phi(n) + 1 steps
    """
    _require_gp(ctx, a)
    previous = a
    for _ in range(ctx.phi_n):
        current = (previous * a) % ctx.n
        if current == a:
            return previous
        previous = current

    raise TheoremViolationError(f"{a}^(phi(n)+1) != {a} in Z_{ctx.n} although {a} is a generalized projection")


def lower_covering_projection(ctx: ZnContext, a: int) -> int:
    """The lower covering projection a_l.

    Projections are their own a_l. Otherwise b is the product of the p_j^alpha_j where
    a != 1 (mod p_j^alpha_j) and a_l = b^phi(n/b).

    Raises:
        NotGeneralizedProjectionError: If a is not in GP(Z_n)
    """
    _require_gp(ctx, a)
    if classify(ctx, a).is_projection:
        return a

    b = math.prod(q for q in ctx.factorization.prime_powers if a % q != 1 % q)
    return _covering_power(ctx, b)


def _check_divisor(ctx: ZnContext, g: int) -> None:
    if g < 1 or ctx.n % g != 0:
        raise NotADivisorError(f"{g} does not divide {ctx.n}")
    size = ctx.n // g
    if size > (limit := get_cap("scan")):
        raise CapExceededError("scan", limit, size)


@functools.lru_cache(maxsize=4096)
def _extreme(ctx: ZnContext, spec: CosetSpec, largest: bool) -> ExtremeResult:
    members = spec.members(ctx.n)

    def below(x: int, y: int) -> bool:
        return leq(ctx, y, x) if largest else leq(ctx, x, y)

    # Candidate pass: once the extreme element is reached, nothing replaces it.
    candidate = members[0]
    for x in members:
        if below(x, candidate):
            candidate = x

    if all(below(candidate, x) for x in members):
        return ExtremeResult(exists=True, element=candidate)
    return ExtremeResult(exists=False)


def ideal_largest(ctx: ZnContext, g: int) -> ExtremeResult:
    """Largest element of the ideal (g), by a direct scan over its n/g members.

    Args:
        ctx: The modulus context
        g: A positive divisor of n

    Returns:
        ExtremeResult: exists=False if the ideal has no largest element

    Raises:
        NotADivisorError: If g does not divide n
        CapExceededError: If the ideal has more than caps.scan members
    """
    _check_divisor(ctx, g)
    return _extreme(ctx, CosetSpec(generator=g, shift=0), largest=True)


def coset_smallest(ctx: ZnContext, g: int) -> ExtremeResult:
    """Smallest element of the coset (g)+1, by a direct scan over its n/g members.

    Raises:
        NotADivisorError: If g does not divide n
        CapExceededError: If the coset has more than caps.scan members
    """
    _check_divisor(ctx, g)
    return _extreme(ctx, CosetSpec(generator=g, shift=1), largest=False)


def join_divisor(ctx: ZnContext, a: int, b: int) -> int:
    """gcd(gcd(a, b), n): the join of incomparable a and b is sought in the coset (n/d)+1."""
    return gcd(gcd(a, b), ctx.n)


def meet_divisor(ctx: ZnContext, a: int, b: int) -> int:
    """gcd(gcd(a-1, b-1), n), with a-1 and b-1 reduced mod n: the meet is sought in the ideal (n/d)."""
    return gcd(gcd((a - 1) % ctx.n, (b - 1) % ctx.n), ctx.n)


def join(ctx: ZnContext, a: int, b: int) -> MeetJoinResult:
    """a v b. Comparable pairs give the larger element; otherwise, with d = gcd(gcd(a, b), n),
    the join exists iff the coset (n/d)+1 has a smallest element, which is then the join.

    Args:
        ctx: The modulus context
        a: A canonical residue
        b: A canonical residue

    Returns:
        MeetJoinResult: The join (if it exists), the path that decided it and d

    Raises:
        InvalidResidueError: If a or b is not a canonical residue
        CapExceededError: If the coset to scan has more than caps.scan members
    """
    match compare(ctx, a, b):
        case Comparison.EQUAL | Comparison.GREATER:
            return MeetJoinResult(exists=True, value=a, path=JoinPath.COMPARABLE)
        case Comparison.LESS:
            return MeetJoinResult(exists=True, value=b, path=JoinPath.COMPARABLE)

    d = join_divisor(ctx, a, b)
    res = coset_smallest(ctx, ctx.n // d)
    return MeetJoinResult(exists=res.exists, value=res.element, path=JoinPath.COSET_SMALLEST, d=d)


def meet(ctx: ZnContext, a: int, b: int) -> MeetJoinResult:
    """a ^ b. Comparable pairs give the smaller element; otherwise, with d = gcd(gcd(a-1, b-1), n),
    the meet exists iff the ideal (n/d) has a largest element, which is then the meet.

    Raises:
        InvalidResidueError: If a or b is not a canonical residue
        CapExceededError: If the ideal to scan has more than caps.scan members
    """
    match compare(ctx, a, b):
        case Comparison.EQUAL | Comparison.LESS:
            return MeetJoinResult(exists=True, value=a, path=JoinPath.COMPARABLE)
        case Comparison.GREATER:
            return MeetJoinResult(exists=True, value=b, path=JoinPath.COMPARABLE)

    d = meet_divisor(ctx, a, b)
    res = ideal_largest(ctx, ctx.n // d)
    return MeetJoinResult(exists=res.exists, value=res.element, path=JoinPath.IDEAL_LARGEST, d=d)


def gp_join(ctx: ZnContext, a: int, b: int) -> int:
    """Join of two generalized projections, which always exists and is again a generalized projection.

    Raises:
        NotGeneralizedProjectionError: If a or b is not in GP(Z_n)
        TheoremViolationError: If the join is missing or not in GP(Z_n)
    """
    _require_gp(ctx, a)
    _require_gp(ctx, b)
    res = join(ctx, a, b)
    if not res.exists or not classify(ctx, res.value).is_gp:
        raise TheoremViolationError(f"Join of generalized projections {a}, {b} in Z_{ctx.n}: {res}")
    return res.value


def gp_meet(ctx: ZnContext, a: int, b: int) -> int:
    """Meet of generalized projections a, b with a-1 and b-1 also generalized projections.

    Raises:
        PreconditionError: If one of a, b, a-1, b-1 is not in GP(Z_n)
        TheoremViolationError: If the meet is missing or not in GP(Z_n)
    """
    for x in (a, b, (a - 1) % ctx.n, (b - 1) % ctx.n):
        if not classify(ctx, x).is_gp:
            raise PreconditionError(f"gp_meet({a}, {b}) in Z_{ctx.n}: {x} is not a generalized projection")
    res = meet(ctx, a, b)
    if not res.exists or not classify(ctx, res.value).is_gp:
        raise TheoremViolationError(f"Meet of {a}, {b} in Z_{ctx.n}: {res}")
    return res.value


def join_valuation_modulus(ctx: ZnContext, a: int, b: int) -> int:
    """prod p_i^max(alpha_i - beta_i, alpha_i - gamma_i, 0) with beta_i, gamma_i the exponents of p_i
    in a and b. Equals n / gcd(gcd(a, b), n)."""
    return math.prod(
        p ** max(e - valuation(a, p, e), e - valuation(b, p, e), 0) for p, e in ctx.factorization.factors
    )


def meet_valuation_modulus(ctx: ZnContext, a: int, b: int) -> int:
    """As join_valuation_modulus for a-1 and b-1. Equals n / gcd(gcd(a-1, b-1), n)."""
    return join_valuation_modulus(ctx, (a - 1) % ctx.n, (b - 1) % ctx.n)


def _nilpotent_generator(ctx: ZnContext, divs: list[int]) -> int | None:
    """Smallest divisor g >= 3 with n/g >= 3 that generates a nonzero nilpotent ideal."""
    radical = math.prod(p for p, _ in ctx.factorization.factors)
    for g in divs:
        if g >= 3 and ctx.n // g >= 3 and g % radical == 0:
            return g
    return None


def _witness(ctx: ZnContext, n1: int) -> tuple[int, int]:
    """First pair (n1, y) inside (n1) that is incomparable and has no join."""
    for y in range(2 * n1, ctx.n, n1):
        if compare(ctx, n1, y) == Comparison.INCOMPARABLE and not join(ctx, n1, y).exists:
            return (n1, y)
    raise TheoremViolationError(f"Ideal ({n1}) of Z_{ctx.n} has no largest element but no witness pair")


def is_lattice(ctx: ZnContext) -> LatticeReport:
    """Decide whether (Z_n, <=) is a lattice.

    Z_n is a lattice iff for every divisor n1 >= 3 of n the ideal (n1) has a largest element.
    Two shortcuts avoid the ideal scans: for square-free n every residue is a generalized
    projection and GP(Z_n) is a lattice; a nonzero nilpotent generator g (g >= 3, |(g)| >= 3)
    decides the negative case, since only 0 lies strictly below a nonzero nilpotent. Only n = 8
    and n = 4m with m odd and square-free reach the scans.

    Args:
        ctx: The modulus context

    Returns:
        LatticeReport: The verdict, with failing ideal and witness pair when it is negative

    Raises:
        CapExceededError: If a scanned ideal has more than caps.scan members
        TheoremViolationError: If an ideal without a largest element has no witness pair
    """
    logger = logging.get_zorder_logger(__name__)
    if ctx.n <= 2:
        return LatticeReport(n=ctx.n, verdict=True)

    if is_square_free(ctx.factorization):
        logger.debug("Z_%d: square-free modulus, every element is a generalized projection", ctx.n)
        return LatticeReport(n=ctx.n, verdict=True, fast_path=True)

    divs = divisors(ctx.factorization)

    if (g := _nilpotent_generator(ctx, divs)) is not None:
        logger.debug("Z_%d: nilpotent ideal (%d) decides the verdict", ctx.n, g)
        return LatticeReport(n=ctx.n, verdict=False, failing_n1=g, witness=_witness(ctx, g), fast_path=True)

    for n1 in divs:
        if n1 >= 3 and not ideal_largest(ctx, n1).exists:
            logger.debug("Z_%d: ideal (%d) has no largest element", ctx.n, n1)
            return LatticeReport(n=ctx.n, verdict=False, failing_n1=n1, witness=_witness(ctx, n1))

    return LatticeReport(n=ctx.n, verdict=True)


def lattice_moduli(lo: int, hi: int) -> list[int]:
    """All n in [lo, hi] for which Z_n is a lattice (theorem-based only)."""
    if not 1 <= lo <= hi:
        raise InvalidModulusError(f"Invalid range [{lo}, {hi}]")
    return [n for n in range(lo, hi + 1) if is_lattice(make_context(n)).verdict]
