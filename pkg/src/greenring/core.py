"""Exact elements of the Green ring of a cyclic p-group.

The ring R has a Z-basis V_1, ..., V_q (q = p^nu), where V_r stands for the
unique indecomposable module of dimension r.  Elements are stored as dense
integer coefficient vectors; the conventions V_0 = 0 and V_{-r} = -V_r are
normalized away at construction, so equality is componentwise.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import (
    ContextMismatchError,
    IndexRangeError,
    ParseError,
    SupportError,
)

DEFAULT_ORDER_CAP = 1024
ORDER_CAP_ENV = "GREENRING_ORDER_CAP"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def order_cap() -> int:
    """Group-order cap; override with the GREENRING_ORDER_CAP env var."""
    raw = os.environ.get(ORDER_CAP_ENV)
    return int(raw) if raw else DEFAULT_ORDER_CAP


@dataclass(frozen=True)
class RingContext:
    """The pair (p, nu) fixing the ring of the cyclic group of order p^nu."""

    p: int
    nu: int
    order: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.nu < 1:
            raise ValueError(f"nu must be >= 1, got {self.nu}")
        order = self.p**self.nu
        cap = order_cap()
        if order > cap:
            raise ValueError(f"group order {order} exceeds cap {cap}")
        object.__setattr__(self, "order", order)

    def level(self, s: int) -> int:
        """Smallest m >= 0 with s <= p^m, for 1 <= s <= p^nu."""
        if not 1 <= s <= self.order:
            raise IndexRangeError(f"index {s} outside 1..{self.order}")
        m, pm = 0, 1
        while s > pm:
            pm *= self.p
            m += 1
        return m

    def __repr__(self) -> str:
        return f"RingContext(p={self.p}, nu={self.nu})"


class GreenElement:
    """A virtual module: integer multiplicities over the basis V_1..V_q."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: RingContext, coeffs: Iterable[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != ctx.order:
            raise ValueError(
                f"expected {ctx.order} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("GreenElement is immutable")

    @classmethod
    def from_terms(cls, ctx: RingContext, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> "GreenElement":
        """Build an element from (index, multiplicity) pairs.

        Index 0 is dropped and negative indices -r contribute -1 times V_r,
        so callers may hand in unnormalized terms.
        """
        coeffs = [0] * ctx.order
        items = terms.items() if isinstance(terms, Mapping) else terms
        for r, c in items:
            r, c = int(r), int(c)
            if r == 0 or c == 0:
                continue
            if r < 0:
                r, c = -r, -c
            if r > ctx.order:
                raise IndexRangeError(f"index {r} outside 1..{ctx.order}")
            coeffs[r - 1] += c
        return cls(ctx, coeffs)

    def coeff(self, r: int) -> int:
        if not 1 <= r <= self.ctx.order:
            raise IndexRangeError(f"index {r} outside 1..{self.ctx.order}")
        return self.coeffs[r - 1]

    def items(self) -> Iterator[tuple[int, int]]:
        """Nonzero (index, multiplicity) pairs in ascending index order."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield i + 1, c

    def support(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.items())

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def dim(self) -> int:
        return sum(r * c for r, c in self.items())

    def _check_ctx(self, other: "GreenElement") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError(
                f"mixed contexts {self.ctx} and {other.ctx}"
            )

    def __add__(self, other: "GreenElement") -> "GreenElement":
        if not isinstance(other, GreenElement):
            return NotImplemented
        self._check_ctx(other)
        return GreenElement(self.ctx, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "GreenElement") -> "GreenElement":
        if not isinstance(other, GreenElement):
            return NotImplemented
        self._check_ctx(other)
        return GreenElement(self.ctx, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GreenElement":
        return GreenElement(self.ctx, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return GreenElement(self.ctx, (other * a for a in self.coeffs))
        if isinstance(other, GreenElement):
            from .oracle import multiply

            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GreenElement)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def __repr__(self) -> str:
        return f"<{format_element(self)} in {self.ctx!r}>"


def zero(ctx: RingContext) -> GreenElement:
    return GreenElement(ctx, (0,) * ctx.order)


def one(ctx: RingContext) -> GreenElement:
    """The ring identity V_1."""
    return basis_element(ctx, 1)


def basis_element(ctx: RingContext, r: int) -> GreenElement:
    """V_r for r > 0, the zero element for r = 0, and -V_{|r|} for r < 0."""
    if abs(r) > ctx.order:
        raise IndexRangeError(f"index {r} outside -{ctx.order}..{ctx.order}")
    return GreenElement.from_terms(ctx, {r: 1} if r else {})


def dim(a: GreenElement) -> int:
    """The dimension homomorphism: V_r has dimension r, extended Z-linearly."""
    return a.dim()


def scale(k: int, a: GreenElement) -> GreenElement:
    return a * k


def ring_generator(ctx: RingContext, m: int) -> GreenElement:
    """The generator V_{p^m + 1} - V_{p^m - 1} of level m, 0 <= m <= nu-1."""
    if not 0 <= m <= ctx.nu - 1:
        raise IndexRangeError(f"generator level {m} outside 0..{ctx.nu - 1}")
    pm = ctx.p**m
    return GreenElement.from_terms(ctx, [(pm + 1, 1), (pm - 1, -1)])


def _check_support(ctx: RingContext, m: int, a: GreenElement) -> int:
    if not 0 <= m <= ctx.nu:
        raise IndexRangeError(f"subring level {m} outside 0..{ctx.nu}")
    pm = ctx.p**m
    bad = [r for r in a.support() if r > pm]
    if bad:
        raise SupportError(f"support {bad} exceeds subring bound {pm}")
    return pm


def heller(m: int, a: GreenElement) -> GreenElement:
    """Heller translate at level m: V_r maps to V_{p^m - r}, extended linearly.

    Requires the argument to be supported on V_1..V_{p^m}; note that V_{p^m}
    itself maps to zero.
    """
    pm = _check_support(a.ctx, m, a)
    return GreenElement.from_terms(a.ctx, [(pm - r, c) for r, c in a.items()])


def congruent_mod_regular(m: int, a: GreenElement, b: GreenElement) -> bool:
    """True iff a - b is an integer multiple of V_{p^m}.

    Such a congruence pins the multiple exactly: the difference must equal
    p^{-m} * dim(a - b) times V_{p^m}.
    """
    a._check_ctx(b)
    pm = _check_support(a.ctx, m, a)
    _check_support(b.ctx, m, b)
    diff = a - b
    return all(r == pm for r in diff.support())


def to_dict(a: GreenElement) -> dict:
    """Canonical serialized form, nonzero coefficients keyed by decimal index."""
    return {
        "p": a.ctx.p,
        "nu": a.ctx.nu,
        "coeffs": {str(r): c for r, c in a.items()},
    }


def from_dict(data: Mapping) -> GreenElement:
    try:
        ctx = RingContext(int(data["p"]), int(data["nu"]))
        terms = {int(r): int(c) for r, c in data["coeffs"].items()}
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed element object: {exc}") from exc
    for r in terms:
        if not 1 <= r <= ctx.order:
            raise IndexRangeError(f"index {r} outside 1..{ctx.order}")
    return GreenElement.from_terms(ctx, terms)


def format_element(a: GreenElement) -> str:
    """Human-readable form in descending index order, e.g. "V5 - V3 + 2V1"."""
    parts: list[str] = []
    for r, c in sorted(a.items(), reverse=True):
        mag = "" if abs(c) == 1 else str(abs(c))
        term = f"{mag}V{r}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {term}")
    return " ".join(parts) if parts else "0"


_TERM_RE = re.compile(r"\s*([+-])?\s*(\d+)?V(\d+)")


def parse_element(ctx: RingContext, text: str) -> GreenElement:
    """Parse a literal like "V5-V3+2V1" (strict grammar, whitespace allowed)."""
    s = text.strip()
    if s == "0":
        return zero(ctx)
    terms: list[tuple[int, int]] = []
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or (not first and m.group(1) is None):
            raise ParseError(f"bad element literal {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        r = int(m.group(3))
        if not 1 <= r <= ctx.order:
            raise IndexRangeError(f"index {r} outside 1..{ctx.order}")
        terms.append((r, sign * mag))
        pos = m.end()
        first = False
    return GreenElement.from_terms(ctx, terms)
