"""Adams operations on the Green ring for exponents coprime to p.

The n-th operation is computed on basis modules by a level recursion that
needs no ring multiplication: writing s = k p^m + r at the level m just below
s, the value on V_s is assembled from the values on V_r and V_{p^m - r} by
the spreading maps, with the exponents folded into 1..p-1 through the
dihedral symmetry of period 2p.  Results are memoized per context.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum

from .core import GreenElement, RingContext, basis_element, zero
from .errors import (
    ContextMismatchError,
    DivisibilityError,
    IndexRangeError,
    SupportError,
)
from .polynomials import dickson_first

_CACHE: dict[tuple[int, int], dict[tuple[int, int], GreenElement]] = {}
_CACHE_LOCK = threading.Lock()


def _context_cache(ctx: RingContext) -> dict[tuple[int, int], GreenElement]:
    key = (ctx.p, ctx.nu)
    cache = _CACHE.get(key)
    if cache is None:
        with _CACHE_LOCK:
            cache = _CACHE.setdefault(key, {})
    return cache


def clear_cache(ctx: RingContext | None = None) -> None:
    """Drop memoized Adams values (all contexts when ctx is None)."""
    with _CACHE_LOCK:
        if ctx is None:
            _CACHE.clear()
        else:
            _CACHE.pop((ctx.p, ctx.nu), None)


def fold_exponent(ctx: RingContext, c: int) -> int:
    """Fold c into its representative in 1..p-1 with c = +-fold (mod 2p).

    The representative is unique; 0 folds to 0, and exponents divisible by p
    (other than 0) are rejected.
    """
    if c < 0:
        raise DivisibilityError(f"exponent must be non-negative, got {c}")
    if c == 0:
        return 0
    if c % ctx.p == 0:
        raise DivisibilityError(f"exponent {c} is divisible by p = {ctx.p}")
    m = c % (2 * ctx.p)
    return m if m < ctx.p else 2 * ctx.p - m


def spread(ctx: RingContext, m: int, i: int, w: GreenElement) -> GreenElement:
    """Spreading map at level m and offset i: V_r -> V_{ip^m+r} - V_{ip^m-r}.

    Takes the subring spanned by V_1..V_{p^m} into the one spanned by
    V_1..V_{p^(m+1)}; offset 0 is the identity.
    """
    if not 0 <= m <= ctx.nu - 1:
        raise IndexRangeError(f"level {m} outside 0..{ctx.nu - 1}")
    if not 0 <= i <= ctx.p - 1:
        raise IndexRangeError(f"offset {i} outside 0..{ctx.p - 1}")
    pm = ctx.p**m
    bad = [r for r in w.support() if r > pm]
    if bad:
        raise SupportError(f"support {bad} exceeds subring bound {pm}")
    if i == 0:
        return w
    terms: list[tuple[int, int]] = []
    for r, c in w.items():
        terms.append((i * pm + r, c))
        terms.append((i * pm - r, -c))
    return GreenElement.from_terms(ctx, terms)


def _adams_basis(ctx: RingContext, n: int, s: int) -> GreenElement:
    cache = _context_cache(ctx)
    key = (n, s)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if s == 1:
        value = basis_element(ctx, 1)
    else:
        m = ctx.level(s) - 1
        q = ctx.p**m
        k = (s - 1) // q
        r = s - k * q
        on_r = _adams_basis(ctx, n, r)
        on_comp = _adams_basis(ctx, n, q - r) if q - r >= 1 else zero(ctx)
        value = zero(ctx)
        for j in range(k + 1):
            target = on_r if (k - j) % 2 == 0 else on_comp
            value = value + spread(ctx, m, fold_exponent(ctx, j * n), target)
    cache[key] = value
    return value


def adams_basis(ctx: RingContext, n: int, s: int, fold: bool = True) -> GreenElement:
    """The n-th Adams operation applied to the basis module V_s.

    Requires p not dividing n.  With fold=True (the default) the exponent is
    first folded into 1..p-1, which the periodicity and reflection identities
    make exact; fold=False runs the level recursion on the raw exponent, so
    those identities can be verified rather than assumed.
    """
    if n < 1:
        raise DivisibilityError(f"exponent must be >= 1, got {n}")
    if n % ctx.p == 0:
        raise DivisibilityError(
            f"exponent {n} divisible by p = {ctx.p} is not supported"
        )
    if not 1 <= s <= ctx.order:
        raise IndexRangeError(f"index {s} outside 1..{ctx.order}")
    n_eff = fold_exponent(ctx, n) if fold else n
    return _adams_basis(ctx, n_eff, s)


def adams(ctx: RingContext, n: int, w: GreenElement, fold: bool = True) -> GreenElement:
    """The n-th Adams operation, extended Z-linearly to any element."""
    if w.ctx != ctx:
        raise ContextMismatchError("element belongs to a different context")
    acc = zero(ctx)
    for s, c in w.items():
        acc = acc + c * adams_basis(ctx, n, s, fold=fold)
    return acc


def adams_on_generator(ctx: RingContext, n: int, m: int) -> GreenElement:
    """Exterior-series Adams operation on the level-m ring generator.

    Valid for every n >= 1, including multiples of p: the value is the
    first-kind Dickson polynomial of index n evaluated at the generator.
    """
    from .core import one, ring_generator
    from .oracle import multiply

    if n < 1:
        raise DivisibilityError(f"exponent must be >= 1, got {n}")
    x = ring_generator(ctx, m)
    return dickson_first(n).evaluate(x, one(ctx), multiply)


class ShapeClause(Enum):
    """First violated clause of the alternating-shape law, if any."""

    COEFFICIENTS = "coefficients"
    ALTERNATION = "alternation"
    INDEX_BOUND = "index_bound"
    PARITY = "parity"


@dataclass(frozen=True)
class ShapeVerdict:
    ok: bool
    violated: ShapeClause | None
    element: GreenElement


def shape_check(ctx: RingContext, n: int, s: int) -> ShapeVerdict:
    """Check the structural law for the value on V_s.

    Clauses, in order: all multiplicities lie in {-1, 0, 1}; the nonzero
    multiplicities alternate in sign in descending index order starting with
    +1; the largest index is at most p^level(s); indices are all odd when n
    is even, and all of the parity of s when n is odd.
    """
    value = adams_basis(ctx, n, s)
    items = sorted(value.items(), reverse=True)
    if any(abs(c) > 1 for _, c in items):
        return ShapeVerdict(False, ShapeClause.COEFFICIENTS, value)
    signs = [c for _, c in items]
    if signs and (signs[0] != 1 or any(a == b for a, b in zip(signs, signs[1:]))):
        return ShapeVerdict(False, ShapeClause.ALTERNATION, value)
    bound = ctx.p ** ctx.level(s)
    if items and items[0][0] > bound:
        return ShapeVerdict(False, ShapeClause.INDEX_BOUND, value)
    want = 1 if n % 2 == 0 else s % 2
    if any(r % 2 != want for r, _ in items):
        return ShapeVerdict(False, ShapeClause.PARITY, value)
    return ShapeVerdict(True, None, value)
