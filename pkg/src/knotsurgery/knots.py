"""Alexander polynomials for torus knots and their connected sums.

Torus knots use the closed formula

    Delta_{T(p,q)}(t) = (t^(p*q) - 1)(t - 1) / ((t^p - 1)(t^q - 1)),

evaluated by exact division and then symmetrized.  Connected sums multiply;
mirroring is the identity on these invariants (Alexander polynomials cannot
see chirality), so Mirror nodes exist purely to record how a knot was
described.

Knot expressions have a small text grammar used by the CLI:

    unknot | torus(p,q) | mirror(E) | sum(E,E)
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly, NotDivisibleError, VariableSet

__all__ = [
    "InternalInconsistencyError",
    "KnotParseError",
    "TorusKnotSpec",
    "KnotExpr",
    "Unknot",
    "Torus",
    "Mirror",
    "ConnectedSum",
    "alexander_torus",
    "alexander_expr",
    "genus_torus",
    "parse_knot_expr",
    "format_knot_expr",
    "T_VARS",
]

T_VARS = VariableSet("t")


class InternalInconsistencyError(RuntimeError):
    """A closed formula violated a property it is supposed to guarantee.

    Raised when exact division inside alexander_torus leaves a remainder or
    the quotient has the wrong span.  Unreachable for valid inputs; seeing it
    means the arithmetic layer has a bug.
    """


class KnotParseError(ValueError):
    """A knot expression string could not be parsed."""


@dataclass(frozen=True)
class TorusKnotSpec:
    """The torus knot T(p, q), normalized so p <= q.

    p and q must be positive and coprime; T(1, q) is the unknot.
    """

    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("torus knot parameters must be integers")
        if self.p < 1 or self.q < 1:
            raise ValueError(f"torus knot parameters must be positive, got T({self.p},{self.q})")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(
                f"T({self.p},{self.q}) is a link, not a knot: gcd must be 1"
            )
        if self.p > self.q:
            p, q = self.p, self.q
            object.__setattr__(self, "p", q)
            object.__setattr__(self, "q", p)

    def is_unknot(self) -> bool:
        return self.p == 1


class KnotExpr:
    """Base of the knot expression tree; see the module grammar."""

    __slots__ = ()


@dataclass(frozen=True)
class Unknot(KnotExpr):
    pass


@dataclass(frozen=True)
class Torus(KnotExpr):
    spec: TorusKnotSpec

    @classmethod
    def of(cls, p: int, q: int) -> "Torus":
        return cls(TorusKnotSpec(p, q))


@dataclass(frozen=True)
class Mirror(KnotExpr):
    inner: KnotExpr


@dataclass(frozen=True)
class ConnectedSum(KnotExpr):
    left: KnotExpr
    right: KnotExpr


@lru_cache(maxsize=None)
def _torus_quotient(p: int, q: int) -> LaurentPoly:
    # (t^(pq) - 1)(t - 1) / ((t^p - 1)(t^q - 1)) as an ordinary polynomial.
    # Divide by one cyclotomic-style factor at a time: both quotients stay
    # sparse, so the sweep over a whole family is cheap.
    t = LaurentPoly.var(T_VARS, "t")
    if p == 1:
        return LaurentPoly.one(T_VARS)
    numerator = (t ** (p * q) - 1) * (t - 1)
    try:
        partial = numerator.exact_divide(t ** p - 1)
        quotient = partial.exact_divide(t ** q - 1)
    except NotDivisibleError as exc:
        raise InternalInconsistencyError(
            f"closed formula for T({p},{q}) left a remainder"
        ) from exc
    if quotient.span() != (p - 1) * (q - 1):
        raise InternalInconsistencyError(
            f"T({p},{q}) quotient has span {quotient.span()}, expected {(p - 1) * (q - 1)}"
        )
    return quotient


def alexander_torus(k: TorusKnotSpec) -> LaurentPoly:
    """Symmetrized Alexander polynomial of a torus knot."""
    return _torus_quotient(k.p, k.q).symmetrize()


def genus_torus(k: TorusKnotSpec) -> int:
    """Seifert genus of T(p, q): (p-1)(q-1)/2.

    Torus knots are fibered, so span(alexander_torus(k)) = 2 * genus.
    """
    return (k.p - 1) * (k.q - 1) // 2


def _alexander_raw(k: KnotExpr) -> LaurentPoly:
    if isinstance(k, Unknot):
        return LaurentPoly.one(T_VARS)
    if isinstance(k, Torus):
        return _torus_quotient(k.spec.p, k.spec.q)
    if isinstance(k, Mirror):
        return _alexander_raw(k.inner)
    if isinstance(k, ConnectedSum):
        return _alexander_raw(k.left) * _alexander_raw(k.right)
    raise TypeError(f"not a knot expression: {k!r}")


def alexander_expr(k: KnotExpr, symmetrize: bool = True) -> LaurentPoly:
    """Alexander polynomial of a knot expression.

    Connected sums multiply and Mirror is the identity.  With symmetrize
    false the result is the raw polynomial representative (the direct
    closed-formula quotient and products thereof).
    """
    raw = _alexander_raw(k)
    return raw.symmetrize() if symmetrize else raw


def format_knot_expr(k: KnotExpr) -> str:
    if isinstance(k, Unknot):
        return "unknot"
    if isinstance(k, Torus):
        return f"torus({k.spec.p},{k.spec.q})"
    if isinstance(k, Mirror):
        return f"mirror({format_knot_expr(k.inner)})"
    if isinstance(k, ConnectedSum):
        return f"sum({format_knot_expr(k.left)},{format_knot_expr(k.right)})"
    raise TypeError(f"not a knot expression: {k!r}")


_KNOT_TOKEN_RE = re.compile(r"\s*(?:(?P<word>[a-z]+)|(?P<int>\d+)|(?P<punct>[(),]))")


def parse_knot_expr(text: str) -> KnotExpr:
    """Parse the grammar `unknot | torus(p,q) | mirror(E) | sum(E,E)`."""
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _KNOT_TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise KnotParseError(f"unexpected character {text[pos:].strip()[0]!r}")
            break
        tokens.append(m.group(m.lastgroup))
        pos = m.end()

    cursor = 0

    def take(expected: str | None = None) -> str:
        nonlocal cursor
        if cursor >= len(tokens):
            raise KnotParseError("unexpected end of knot expression")
        tok = tokens[cursor]
        cursor += 1
        if expected is not None and tok != expected:
            raise KnotParseError(f"expected {expected!r}, got {tok!r}")
        return tok

    def parse_expr() -> KnotExpr:
        head = take()
        if head == "unknot":
            return Unknot()
        if head == "torus":
            take("(")
            p = take()
            take(",")
            q = take()
            take(")")
            if not (p.isdigit() and q.isdigit()):
                raise KnotParseError("torus(p,q) needs integer parameters")
            try:
                return Torus(TorusKnotSpec(int(p), int(q)))
            except ValueError as exc:
                raise KnotParseError(str(exc)) from exc
        if head == "mirror":
            take("(")
            inner = parse_expr()
            take(")")
            return Mirror(inner)
        if head == "sum":
            take("(")
            left = parse_expr()
            take(",")
            right = parse_expr()
            take(")")
            return ConnectedSum(left, right)
        raise KnotParseError(f"unknown knot constructor {head!r}")

    expr = parse_expr()
    if cursor != len(tokens):
        raise KnotParseError(f"trailing input after knot expression: {tokens[cursor]!r}")
    return expr
