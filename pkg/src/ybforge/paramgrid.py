"""Deterministic polynomial identity testing on rational grids.

A claim "lhs(params) = rhs(params) for all rational params" where both sides
are matrices of polynomials with known per-variable degree bounds is decided
by evaluating on a finite grid: if a polynomial has degree < g in each
variable and vanishes on a full tensor grid with g distinct points per
variable, it is identically zero.  A true verdict on a large-enough grid is
therefore a proof, and grid_verify refuses to run on grids that are too
small rather than return an uncertified true.
"""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional


class GridConfigError(ValueError):
    """Grid too small (or malformed) to certify the claimed degree bound."""


@dataclass(frozen=True)
class IdentityJob:
    description: str
    variables: list          # [(name, degree_bound), ...]
    grids: dict              # name -> list of distinct Rat, len >= bound+1
    evaluator: Callable      # assignment dict -> (lhs Mat, rhs Mat)


@dataclass(frozen=True)
class GridResult:
    description: str
    verdict: bool
    certified: bool
    witness: Optional[dict]
    certificate: dict = field(default_factory=dict)  # name -> (grid size, bound)

    def __bool__(self):
        return self.verdict


def default_grid(size, nonzero=False):
    """Small-integer grid: {0..size-1}, or {1..size} when 0 is excluded."""
    start = 1 if nonzero else 0
    return [Fraction(i) for i in range(start, start + size)]


def grid_verify(job):
    names = []
    for name, bound in job.variables:
        grid = job.grids.get(name)
        if grid is None:
            raise GridConfigError("no grid for variable %r" % name)
        if len(set(grid)) != len(grid):
            raise GridConfigError("grid for %r has repeated points" % name)
        if len(grid) < bound + 1:
            raise GridConfigError(
                "grid for %r has %d points; degree bound %d needs %d"
                % (name, len(grid), bound, bound + 1))
        names.append(name)
    certificate = {name: (len(job.grids[name]), bound)
                   for name, bound in job.variables}
    for values in itertools.product(*(job.grids[n] for n in names)):
        assign = dict(zip(names, values))
        lhs, rhs = job.evaluator(assign)
        if lhs != rhs:
            return GridResult(job.description, False, False, assign, certificate)
    return GridResult(job.description, True, True, None, certificate)


# Conservative per-variable degree bounds, re-derived here:
#  - rA-braid: R^A entries are linear in each of alpha, beta, gamma; each
#    side of the braid equation is a product of three lifts, so degree <= 3.
#  - colored: R(u,v) entries are linear in u, v, p, q; triple products give
#    degree <= 3 per variable (u and p actually appear in at most two and
#    three factors; 3 is a safe common bound).
#  - oneparam: S(ti/tj) entries are linear in ti/tj and in q.  Clearing the
#    denominators t2*t3^2 from the triple products leaves polynomials of
#    degree <= 2 per ti per factor, <= 6 per side; q appears in three
#    factors, degree <= 3 <= 6.
#  - wxz38: W, X, Z entries are linear in lambda resp. mu; the commutator
#    conditions are triple products, degree <= 3.
#  - jordan-identity: (x^2 y) x and x^2 (y x) are cubic in the coordinates
#    of x (and linear in y, which ranges over the basis separately).
_BOUNDS = {
    "rA-braid": {"alpha": 3, "beta": 3, "gamma": 3},
    "colored": {"u": 3, "v": 3, "w": 3, "p": 3, "q": 3},
    "oneparam": {"t1": 6, "t2": 6, "t3": 6, "q": 6},
    "wxz38": {"lambda": 3, "mu": 3},
    "jordan-identity": {"s": 3},
}


def degree_bounds(tag):
    """Bound table for a known construction tag; "s" means per coordinate."""
    try:
        return dict(_BOUNDS[tag])
    except KeyError:
        raise ValueError("unknown construction tag %r" % (tag,)) from None
