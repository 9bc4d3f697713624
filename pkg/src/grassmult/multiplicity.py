"""The multiplicity of a point on a Schubert variety, by five independent
computation routes that must agree.

Indices come in pairs j <= i: the variety is labelled i, the point sits in
the open cell labelled j, and the multiplicity of that point is a positive
integer, computed here in exact integer arithmetic throughout.

Routes:

* ``mult_det``      signed determinant of a matrix of binomial
                    coefficients whose column shifts come from
                    ``s_vector``. Production route.
* ``mult_rec``      the defining recurrence, summing over downward
                    covering moves and dividing by ``degree``; memoized
                    and driven bottom-up by entry-sum weight. This is the
                    authoritative oracle the other routes are checked
                    against.
* ``mult_sum``      alternating, binomially weighted sum of Vandermonde
                    products over a box of offsets.
* ``mult_product``  closed product form, applicable only to separated
                    pairs (j_d <= i_1).
* ``mult_weyman``   determinant in the Frobenius coordinates of the
                    partition cut out by i; defined at the base cell
                    j = (1, ..., d) only.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product

from .arith import binom, exact_div, factorial_superproduct
from .indices import GrassmannIndex, leq, lower_neighbor_entries
from .matrices import build_binomial_matrix, determinant_bareiss, vandermonde

__all__ = [
    "ROUTE_DETERMINANT",
    "ROUTE_RECURRENCE",
    "ROUTE_SUM",
    "ROUTE_PRODUCT",
    "ROUTE_WEYMAN",
    "ROUTES",
    "RouteInapplicableError",
    "FrobeniusCoordinates",
    "MultiplicityRecord",
    "s_vector",
    "degree",
    "mult_det",
    "mult_rec",
    "mult_sum",
    "mult_product",
    "mult_weyman",
    "frobenius_coordinates",
    "alternating_vandermonde_sum",
]

ROUTE_DETERMINANT = "determinant"
ROUTE_RECURRENCE = "recurrence"
ROUTE_SUM = "sum"
ROUTE_PRODUCT = "product"
ROUTE_WEYMAN = "weyman"
ROUTES = (ROUTE_DETERMINANT, ROUTE_RECURRENCE, ROUTE_SUM, ROUTE_PRODUCT, ROUTE_WEYMAN)


class RouteInapplicableError(ValueError):
    """The requested formula does not cover the given pair of indices."""


@dataclass(frozen=True)
class FrobeniusCoordinates:
    """Partition in Frobenius notation: arm and leg lengths of the diagonal
    hooks, each strictly decreasing; rank 0 encodes the empty partition."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.alpha)


@dataclass(frozen=True)
class MultiplicityRecord:
    """One computed multiplicity with its context; the unit of table output."""

    n: int
    i: GrassmannIndex
    j: GrassmannIndex
    value: int
    route: str

    def __post_init__(self) -> None:
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")
        if self.value < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.value}")


def _require_pair(i: GrassmannIndex, j: GrassmannIndex) -> None:
    if not leq(j, i):
        raise ValueError(
            "cell not contained in variety (requires j <= i componentwise)"
        )


def s_vector(i: GrassmannIndex, j: GrassmannIndex) -> tuple[int, ...]:
    """Column shifts of the determinant route: position q counts the
    entries of j strictly larger than i_q.

    Equals (d-1, ..., 1, 0) at i == j and the zero vector exactly when the
    pair is separated (j_d <= i_1).
    """
    _require_pair(i, j)
    js = j.entries
    return tuple(sum(1 for jp in js if jp > iq) for iq in i.entries)


def degree(i: GrassmannIndex, j: GrassmannIndex) -> int:
    """d minus the number of entries of i that also occur in j; the divisor
    of the recurrence. Zero exactly when i == j."""
    _require_pair(i, j)
    shared = set(j.entries)
    return i.d - sum(1 for e in i.entries if e in shared)


def mult_det(i: GrassmannIndex, j: GrassmannIndex) -> int:
    """Multiplicity as a signed binomial determinant (production route)."""
    _require_pair(i, j)
    shifts = s_vector(i, j)
    sign = -1 if sum(shifts) % 2 else 1
    return sign * determinant_bareiss(build_binomial_matrix(i.entries, shifts))


def mult_rec(
    i: GrassmannIndex, j: GrassmannIndex, cache: dict[tuple[int, ...], int] | None = None
) -> int:
    """Multiplicity by the defining recurrence, memoized.

    Value 1 at i == j; otherwise the sum over downward covering moves that
    stay above j, divided (exactly) by degree. The table is filled
    bottom-up by increasing weight, so no recursion depth limit applies.

    The cache maps entry tuples to values and is only meaningful for a
    fixed j and n. Reuse it across calls with the same j to share work;
    when fanning out over processes or threads, keep one cache per worker
    or guard it externally.
    """
    _require_pair(i, j)
    if cache is None:
        cache = {}
    floor = j.entries
    cache.setdefault(floor, 1)
    target = i.entries
    if target in cache:
        return cache[target]
    d = len(floor)
    floor_set = set(floor)
    pending = [k for k in _interval_entries(floor, target) if k not in cache]
    pending.sort(key=sum)
    for k in pending:
        total = 0
        for _, neighbor in lower_neighbor_entries(k, floor):
            total += cache[neighbor]
        deg = d - sum(1 for e in k if e in floor_set)
        cache[k] = exact_div(total, deg)
    return cache[target]


def _interval_entries(
    floor: tuple[int, ...], ceil: tuple[int, ...]
) -> list[tuple[int, ...]]:
    """Strictly increasing tuples k with floor <= k <= ceil componentwise."""
    d = len(floor)
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], pos: int, prev: int) -> None:
        if pos == d:
            out.append(tuple(prefix))
            return
        for e in range(max(floor[pos], prev + 1), ceil[pos] + 1):
            prefix.append(e)
            extend(prefix, pos + 1, e)
            prefix.pop()

    extend([], 0, 0)
    return out


def alternating_vandermonde_sum(shifts: Sequence[int], point: Sequence[int]) -> int:
    """Alternating, binomially weighted sum of Vandermonde products over
    all offset vectors below shifts, divided exactly by 1! 2! ... (d-1)!.

    At an index pair's shifts and entries this is the multiplicity; the
    expression itself is defined for every integer point.
    """
    d = len(shifts)
    if d != len(point):
        raise ValueError(
            f"shifts and point must have equal length, got {d} and {len(point)}"
        )
    if d == 0:
        raise ValueError("need at least one coordinate")
    for q, s in enumerate(shifts):
        if s < 0:
            raise ValueError(f"shifts must be nonnegative, got {s} at position {q + 1}")
    weights = [[binom(s, k) for k in range(s + 1)] for s in shifts]
    base = tuple(point)
    total = 0
    for offsets in product(*(range(s + 1) for s in shifts)):
        v = vandermonde([t + k for t, k in zip(base, offsets)])
        if v == 0:
            continue
        w = 1
        for per_coord, k in zip(weights, offsets):
            w *= per_coord[k]
        total += -w * v if sum(offsets) % 2 else w * v
    return exact_div(total, factorial_superproduct(d))


def mult_sum(i: GrassmannIndex, j: GrassmannIndex) -> int:
    """Multiplicity as the alternating Vandermonde sum."""
    _require_pair(i, j)
    return alternating_vandermonde_sum(s_vector(i, j), i.entries)


def mult_product(i: GrassmannIndex, j: GrassmannIndex) -> int:
    """Multiplicity for separated pairs: the Vandermonde product of i
    divided by 1! 2! ... (d-1)!.

    Raises RouteInapplicableError unless j_d <= i_1.
    """
    _require_pair(i, j)
    if j.entries[-1] > i.entries[0]:
        raise RouteInapplicableError(
            f"product form needs j_d <= i_1, got j_d={j.entries[-1]} > i_1={i.entries[0]}"
        )
    return exact_div(vandermonde(i.entries), factorial_superproduct(i.d))


def frobenius_coordinates(partition: Sequence[int]) -> FrobeniusCoordinates:
    """Frobenius notation of a partition given as a weakly decreasing
    sequence of nonnegative integers (trailing zeros allowed).

    The rank is the number of diagonal cells of the diagram, alpha the arm
    lengths and beta the leg lengths of the diagonal hooks, the latter
    read off the conjugate partition.
    """
    parts = [int(x) for x in partition]
    for pos, part in enumerate(parts):
        if part < 0:
            raise ValueError(f"partition entries must be nonnegative, got {part}")
        if pos and part > parts[pos - 1]:
            raise ValueError("partition entries must be weakly decreasing")
    rank = sum(1 for pos, part in enumerate(parts, start=1) if part >= pos)
    alpha = tuple(parts[pos - 1] - pos for pos in range(1, rank + 1))
    beta = tuple(
        sum(1 for part in parts if part >= pos) - pos for pos in range(1, rank + 1)
    )
    return FrobeniusCoordinates(alpha, beta)


def mult_weyman(i: GrassmannIndex) -> int:
    """Multiplicity at the base cell j = (1, ..., d), as the determinant of
    binom(alpha_p + beta_q, alpha_p) over the Frobenius coordinates of the
    partition (i_d - d, ..., i_2 - 2, i_1 - 1). The empty partition (that
    is, i equal to the base cell) gives 1."""
    lam = [i.entries[pos] - (pos + 1) for pos in range(i.d)][::-1]
    coords = frobenius_coordinates(lam)
    if coords.rank == 0:
        return 1
    rows = [[binom(a + b, a) for b in coords.beta] for a in coords.alpha]
    return determinant_bareiss(rows)
