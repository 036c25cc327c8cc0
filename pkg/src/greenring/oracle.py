"""Ground-truth engine over GF(p): genuine modules as unipotent matrices.

A basis module V_r is realized as a single unipotent Jordan block; tensor,
exterior and symmetric powers are built literally as induced matrices; and
decomposition back into indecomposables reads off the rank profile of the
displacement N = g - 1, whose second differences give the block
multiplicities.  The multiplication of the whole library is the bilinear
extension of the basis product table produced this way.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

import numpy as np

from . import gfp
from .core import GreenElement, RingContext
from .errors import (
    ContextMismatchError,
    IndexRangeError,
    InvalidModuleError,
    OracleCapacityError,
)

DEFAULT_ORACLE_CAP = 20000
ORACLE_CAP_ENV = "GREENRING_ORACLE_CAP"

# Largest induced dimension decomposed via the literal matrix route before
# wedge/sym of a basis module switches to the split fast path.
_GENERIC_DIM_LIMIT = 200


def oracle_cap() -> int:
    """Induced-space dimension cap; override with GREENRING_ORACLE_CAP."""
    raw = os.environ.get(ORACLE_CAP_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_CAP


def _check_capacity(size: int) -> None:
    cap = oracle_cap()
    if size > cap:
        raise OracleCapacityError(f"induced dimension {size} exceeds cap {cap}")


@dataclass(frozen=True)
class JordanModule:
    """A genuine module given by its multiset of Jordan block sizes."""

    ctx: RingContext
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(int(b) for b in self.blocks))
        for b in blocks:
            if not 1 <= b <= self.ctx.order:
                raise IndexRangeError(f"block size {b} outside 1..{self.ctx.order}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def dimension(self) -> int:
        return sum(self.blocks)

    def to_element(self) -> GreenElement:
        terms: dict[int, int] = {}
        for b in self.blocks:
            terms[b] = terms.get(b, 0) + 1
        return GreenElement.from_terms(self.ctx, terms)

    def to_matrix(self) -> np.ndarray:
        d = self.dimension
        g = np.zeros((d, d), dtype=np.int64)
        at = 0
        for b in self.blocks:
            g[at : at + b, at : at + b] = gfp.jordan_block(b)
            at += b
        return g


@dataclass(frozen=True)
class DecompositionReport:
    """Block multiplicities together with the rank profile that produced them."""

    ctx: RingContext
    multiplicities: tuple[tuple[int, int], ...]
    rank_profile: tuple[int, ...]

    def multiplicity(self, r: int) -> int:
        return dict(self.multiplicities).get(r, 0)

    def to_element(self) -> GreenElement:
        return GreenElement.from_terms(self.ctx, dict(self.multiplicities))

    def to_jordan_module(self) -> JordanModule:
        blocks: list[int] = []
        for r, m in self.multiplicities:
            blocks.extend([r] * m)
        return JordanModule(self.ctx, tuple(blocks))

    def to_dict(self) -> dict:
        return {
            "p": self.ctx.p,
            "nu": self.ctx.nu,
            "coeffs": {str(r): m for r, m in self.multiplicities},
            "rank_profile": list(self.rank_profile),
        }


def realize(ctx: RingContext, r: int) -> np.ndarray:
    """The r x r unipotent Jordan block realizing V_r."""
    if not 1 <= r <= ctx.order:
        raise IndexRangeError(f"index {r} outside 1..{ctx.order}")
    return gfp.jordan_block(r)


def tensor(ctx: RingContext, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two module matrices."""
    _check_capacity(a.shape[0] * b.shape[0])
    return gfp.kron_mod(a, b, ctx.p)


def _column_supports(ctx: RingContext, a: np.ndarray) -> list[list[tuple[int, int]]]:
    a = np.asarray(a, dtype=np.int64) % ctx.p
    cols = []
    for t in range(a.shape[1]):
        nz = np.flatnonzero(a[:, t])
        cols.append([(int(i), int(a[i, t])) for i in nz])
    return cols

def wedge(ctx: RingContext, n: int, a: np.ndarray) -> np.ndarray:
    """Induced action on the n-th exterior power.

    Basis: strictly increasing n-subsets of the standard basis in
    lexicographic order, with signs from permutation parity.
    """
    d = a.shape[0]
    if not 0 <= n <= d:
        raise IndexRangeError(f"exterior degree {n} outside 0..{d}")
    size = math.comb(d, n)
    _check_capacity(size)
    basis = list(combinations(range(d), n))
    index = {t: i for i, t in enumerate(basis)}
    cols = _column_supports(ctx, a)
    out = np.zeros((size, size), dtype=np.int64)
    for ci, tup in enumerate(basis):
        terms: list[tuple[list[int], int]] = [([], 1)]
        for t in tup:
            new_terms = []
            for idx, val in terms:
                for row, v in cols[t]:
                    if row in idx:
                        continue
                    pos = len([x for x in idx if x < row])
                    sign = -1 if (len(idx) - pos) % 2 else 1
                    new_terms.append((sorted(idx + [row]), sign * val * v))
            terms = new_terms
        for idx, val in terms:
            out[index[tuple(idx)], ci] += val
    return out % ctx.p


def sym(ctx: RingContext, n: int, a: np.ndarray) -> np.ndarray:
    """Induced action on the n-th symmetric power.

    Basis: non-decreasing n-multisets of the standard basis in lexicographic
    order.
    """
    d = a.shape[0]
    if n < 0:
        raise IndexRangeError(f"symmetric degree {n} must be >= 0")
    size = math.comb(d + n - 1, n) if n else 1
    _check_capacity(size)
    basis = list(combinations_with_replacement(range(d), n))
    index = {t: i for i, t in enumerate(basis)}
    cols = _column_supports(ctx, a)
    out = np.zeros((size, size), dtype=np.int64)
    for ci, tup in enumerate(basis):
        terms: list[tuple[list[int], int]] = [([], 1)]
        for t in tup:
            new_terms = []
            for idx, val in terms:
                for row, v in cols[t]:
                    new_terms.append((sorted(idx + [row]), val * v))
            terms = new_terms
        for idx, val in terms:
            out[index[tuple(idx)], ci] += val
    return out % ctx.p


def _profile_to_report(
    ctx: RingContext, profile: list[int], dimension: int
) -> DecompositionReport:
    q = ctx.order
    if profile[q] != 0:
        raise InvalidModuleError(
            "matrix is not unipotent of order dividing the group order"
        )
    mults: list[tuple[int, int]] = []
    total = 0
    for k in range(1, q + 1):
        nxt = profile[k + 1] if k + 1 <= q else 0
        m = profile[k - 1] - 2 * profile[k] + nxt
        if m < 0:
            raise InvalidModuleError("rank profile is not convex")
        if m:
            mults.append((k, m))
            total += k * m
    if total != dimension:
        raise InvalidModuleError(
            f"blocks sum to {total}, expected dimension {dimension}"
        )
    return DecompositionReport(ctx, tuple(mults), tuple(profile[: q + 1]))


def decompose(ctx: RingContext, g: np.ndarray) -> DecompositionReport:
    """Jordan block multiplicities of a unipotent matrix over GF(p).

    The multiplicity of the size-k block is the second difference
    rank(N^{k-1}) - 2 rank(N^k) + rank(N^{k+1}) of the displacement
    N = g - 1.  Raises InvalidModuleError unless g is square and unipotent
    with order dividing the group order.
    """
    g = np.asarray(g, dtype=np.int64)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise InvalidModuleError(f"matrix shape {g.shape} is not square")
    d = g.shape[0]
    n_mat = (g - np.eye(d, dtype=np.int64)) % ctx.p
    profile = gfp.rank_profile(n_mat, ctx.p, ctx.order)
    return _profile_to_report(ctx, profile, d)


# ---------------------------------------------------------------------------
# basis product table and multiplication

class _ProductTable:
    """Lazily filled, symmetric table of basis products V_a * V_b."""

    def __init__(self, ctx: RingContext):
        self.ctx = ctx
        self._pairs: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
        self._lock = threading.Lock()

    def pair(self, a: int, b: int) -> tuple[tuple[int, int], ...]:
        key = (a, b) if a <= b else (b, a)
        hit = self._pairs.get(key)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._pairs.get(key)
            if hit is None:
                hit = tuple(pair_product(self.ctx, *key).multiplicities)
                self._pairs[key] = hit
        return hit


def pair_product(ctx: RingContext, a: int, b: int) -> DecompositionReport:
    """Decomposition of the tensor of the Jordan blocks of sizes a and b.

    Same rank-profile semantics as decompose(tensor(realize(a), realize(b))),
    computed power-by-power through chain-ring valuations so large blocks
    stay cheap; the two routes are interchangeable and tested against each
    other.
    """
    for r in (a, b):
        if not 1 <= r <= ctx.order:
            raise IndexRangeError(f"index {r} outside 1..{ctx.order}")
    _check_capacity(a * b)
    profile = gfp.jordan_pair_rank_profile(a, b, ctx.p, ctx.order)
    return _profile_to_report(ctx, profile, a * b)


_TABLES: dict[tuple[int, int], _ProductTable] = {}
_TABLES_LOCK = threading.Lock()


def product_table(ctx: RingContext) -> _ProductTable:
    key = (ctx.p, ctx.nu)
    table = _TABLES.get(key)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.setdefault(key, _ProductTable(ctx))
    return table


def _warm_worker(job: tuple[int, int, int, int]) -> tuple[tuple[int, int], tuple]:
    p, nu, a, b = job
    ctx = RingContext(p, nu)
    return (a, b), tuple(pair_product(ctx, a, b).multiplicities)


def warm_pairs(ctx, pairs, processes: int | None = None) -> None:
    """Precompute basis products for the given index pairs.

    Pair computations are pure and independent, so they may run in a small
    process pool; results are merged into the table in sorted order, making
    the outcome identical to sequential evaluation.
    """
    table = product_table(ctx)
    todo = sorted(
        {(a, b) if a <= b else (b, a) for a, b in pairs} - set(table._pairs)
    )
    if not todo:
        return
    if processes is None:
        processes = min(2, os.cpu_count() or 1)
    if processes <= 1 or len(todo) < 4:
        for a, b in todo:
            table.pair(a, b)
        return
    import multiprocessing

    jobs = [(ctx.p, ctx.nu, a, b) for a, b in todo]
    with multiprocessing.Pool(processes) as pool:
        results = pool.map(_warm_worker, jobs, chunksize=1)
    with table._lock:
        for key, mults in sorted(results):
            table._pairs.setdefault(key, mults)


def multiply(x: GreenElement, y: GreenElement) -> GreenElement:
    """Product in the Green ring: bilinear extension of the basis table."""
    if x.ctx != y.ctx:
        raise ContextMismatchError(f"mixed contexts {x.ctx} and {y.ctx}")
    ctx = x.ctx
    table = product_table(ctx)
    acc = [0] * ctx.order
    for r, cr in x.items():
        for s, cs in y.items():
            c = cr * cs
            for t, m in table.pair(r, s):
                acc[t - 1] += c * m
    return GreenElement(ctx, acc)


# ---------------------------------------------------------------------------
# cached decompositions of powers of basis modules

_POWER_CACHE: dict[tuple, DecompositionReport] = {}
_POWER_LOCK = threading.Lock()


def _power_decomposition(
    ctx: RingContext, kind: str, n: int, r: int, route: str
) -> DecompositionReport:
    if not 1 <= r <= ctx.order:
        raise IndexRangeError(f"index {r} outside 1..{ctx.order}")
    if kind == "wedge" and n > r:
        # exterior degree above the dimension: the zero module
        return DecompositionReport(ctx, (), (0,) * (ctx.order + 1))
    if kind == "wedge":
        size = math.comb(r, n)
    else:
        size = math.comb(r + n - 1, n) if n else 1
    _check_capacity(size)
    if route == "auto":
        split_ok = n == 2 and ctx.p != 2
        route = "split" if split_ok and size > _GENERIC_DIM_LIMIT else "matrix"
    key = (ctx.p, ctx.nu, kind, n, r, route)
    hit = _POWER_CACHE.get(key)
    if hit is not None:
        return hit
    if route == "split":
        if n != 2 or ctx.p == 2:
            raise ValueError("split route only applies to squares at odd p")
        alt, symm = gfp.square_pair_split_profiles(r, ctx.p, ctx.order)
        wedge_report = _profile_to_report(ctx, alt, math.comb(r, 2))
        sym_report = _profile_to_report(ctx, symm, math.comb(r + 1, 2))
        with _POWER_LOCK:
            _POWER_CACHE.setdefault((ctx.p, ctx.nu, "wedge", n, r, route), wedge_report)
            _POWER_CACHE.setdefault((ctx.p, ctx.nu, "sym", n, r, route), sym_report)
        return wedge_report if kind == "wedge" else sym_report
    if route != "matrix":
        raise ValueError(f"unknown route {route!r}")
    build = wedge if kind == "wedge" else sym
    report = decompose(ctx, build(ctx, n, realize(ctx, r)))
    with _POWER_LOCK:
        _POWER_CACHE.setdefault(key, report)
    return report


def wedge_decomposition(
    ctx: RingContext, n: int, r: int, route: str = "auto"
) -> DecompositionReport:
    """Decomposition of the n-th exterior power of the basis module V_r."""
    return _power_decomposition(ctx, "wedge", n, r, route)


def sym_decomposition(
    ctx: RingContext, n: int, r: int, route: str = "auto"
) -> DecompositionReport:
    """Decomposition of the n-th symmetric power of the basis module V_r."""
    return _power_decomposition(ctx, "sym", n, r, route)
