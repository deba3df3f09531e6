"""Exact sparse Laurent polynomial arithmetic over arbitrary-precision integers.

A polynomial is a finite map from exponent vectors to nonzero integer
coefficients.  Exponent vectors have one slot per variable of the owning
:class:`VariableSet`; slots may be negative (Laurent terms like ``t^-1``).
Coefficients are plain Python ints and never overflow.  Exponents are
restricted to the signed 64-bit range, and any operation that would leave
that range raises :class:`ExponentOverflowError` instead of wrapping.

The zero polynomial is the empty map.  Values are immutable and every
operation is a pure function, so instances can be shared freely between
concurrent callers.

Text form: ``coeff*var^exp`` factors joined by ``+`` / ``-``, variables in
the set's fixed order, terms in descending lexicographic exponent order,
e.g. ``t_K^2*t_G^-1 - 3``.  JSON form: ``{"variables": [...], "terms":
[{"exps": [...], "coeff": "<decimal string>"}]}`` -- coefficients travel as
decimal strings so arbitrary precision survives transport.
"""

from __future__ import annotations

import heapq
import json
import re
from typing import Iterable, Iterator, Mapping, Union

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

__all__ = [
    "INT64_MIN",
    "INT64_MAX",
    "ExponentOverflowError",
    "NotDivisibleError",
    "NotSymmetrizableError",
    "PolyParseError",
    "VariableSet",
    "Monomial",
    "LaurentPoly",
]


class ExponentOverflowError(OverflowError):
    """An exponent left the signed 64-bit range."""


class NotDivisibleError(ArithmeticError):
    """Exact division was requested but the remainder is nonzero."""


class NotSymmetrizableError(ArithmeticError):
    """No unit multiple of the input satisfies P(t) = P(1/t)."""


class PolyParseError(ValueError):
    """A polynomial text form could not be parsed."""


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _checked_exponent(e: int) -> int:
    if not (INT64_MIN <= e <= INT64_MAX):
        raise ExponentOverflowError(f"exponent {e} outside the signed 64-bit range")
    return e


def _as_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{what} must be int, got {type(value).__name__}")
    return value


class VariableSet:
    """Ordered collection of distinct variable names.

    The construction order is total and fixed; it determines the slot layout
    of exponent vectors and the canonical serialization order.
    """

    __slots__ = ("names", "_index")

    def __init__(self, *names: str):
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        for name in names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name: {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names!r}")
        self.names: tuple[str, ...] = tuple(names)
        self._index = {name: i for i, name in enumerate(names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r} (have {self.names})") from None

    def without(self, name: str) -> "VariableSet":
        """The set with one variable removed (used by specialization)."""
        i = self.index(name)
        return VariableSet(*(self.names[:i] + self.names[i + 1:]))

    def monomial(self, **exponents: int) -> "Monomial":
        """Build a monomial by naming exponents, e.g. ``vs.monomial(t_K=2)``."""
        exps = [0] * len(self.names)
        for name, e in exponents.items():
            exps[self.index(name)] = e
        return Monomial(self, exps)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VariableSet):
            return NotImplemented
        return self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableSet{self.names!r}"


class Monomial:
    """A power product over a :class:`VariableSet`, without coefficient."""

    __slots__ = ("variables", "exps")

    def __init__(self, variables: VariableSet, exps: Iterable[int]):
        exps = tuple(_checked_exponent(_as_int(e, "exponent")) for e in exps)
        if len(exps) != len(variables):
            raise ValueError(
                f"expected {len(variables)} exponent slots, got {len(exps)}"
            )
        self.variables = variables
        self.exps = exps

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.variables == other.variables and self.exps == other.exps

    def __hash__(self) -> int:
        return hash((self.variables, self.exps))

    def __repr__(self) -> str:
        body = _format_monomial(self.variables.names, self.exps)
        return f"Monomial({body or '1'})"


TermsLike = Union[Mapping[tuple, int], Iterable[tuple]]


class LaurentPoly:
    """Sparse Laurent polynomial in canonical form (no zero coefficients)."""

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: VariableSet, terms: TermsLike = ()):
        if not isinstance(variables, VariableSet):
            variables = VariableSet(variables)
        nslots = len(variables)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], int] = {}
        for exps, coeff in items:
            coeff = _as_int(coeff, "coefficient")
            if coeff == 0:
                continue
            exps = tuple(_checked_exponent(_as_int(e, "exponent")) for e in exps)
            if len(exps) != nslots:
                raise ValueError(
                    f"exponent vector {exps} does not match variables {variables.names}"
                )
            merged = acc.get(exps, 0) + coeff
            if merged:
                acc[exps] = merged
            else:
                acc.pop(exps, None)
        self.variables = variables
        self._terms = acc
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: VariableSet) -> "LaurentPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: VariableSet, value: int) -> "LaurentPoly":
        if not isinstance(variables, VariableSet):
            variables = VariableSet(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def one(cls, variables: VariableSet) -> "LaurentPoly":
        return cls.constant(variables, 1)

    @classmethod
    def var(cls, variables: VariableSet, name: str, exponent: int = 1) -> "LaurentPoly":
        """The polynomial ``name^exponent`` (exponent may be negative)."""
        if not isinstance(variables, VariableSet):
            variables = VariableSet(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = exponent
        return cls(variables, {tuple(exps): 1})

    @classmethod
    def from_monomial(cls, monomial: Monomial, coeff: int = 1) -> "LaurentPoly":
        return cls(monomial.variables, {monomial.exps: coeff})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def term_count(self) -> int:
        """Number of nonzero terms in canonical form."""
        return len(self._terms)

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms as (exponent vector, coefficient), in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def coefficient(self, exps: Iterable[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def exponents_of(self, name: str) -> list[int]:
        """All exponents of one variable that occur in the support."""
        i = self.variables.index(name)
        return sorted({exps[i] for exps in self._terms})

    def _single_variable_exponents(self) -> dict[int, int]:
        if len(self.variables) != 1:
            raise ValueError(
                f"operation requires a single-variable polynomial, got {self.variables.names}"
            )
        return {exps[0]: c for exps, c in self._terms.items()}

    def span(self) -> int:
        """max exponent - min exponent, for polynomials in at most one variable."""
        if not self._terms:
            raise ValueError("the zero polynomial has no exponent span")
        if len(self.variables) == 0:
            return 0
        exps = self._single_variable_exponents()
        return max(exps) - min(exps)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly.constant(self.variables, other)
        return None

    def _require_same_variables(self, other: "LaurentPoly") -> None:
        if self.variables != other.variables:
            raise ValueError(
                f"variable-set mismatch: {self.variables.names} vs {other.variables.names}"
            )

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._require_same_variables(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            merged = out.get(exps, 0) + c
            if merged:
                out[exps] = merged
            else:
                out.pop(exps, None)
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({exps: -c for exps, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__add__(-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._require_same_variables(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                merged = out.get(exps, 0) + c1 * c2
                if merged:
                    out[exps] = merged
                else:
                    out.pop(exps, None)
        for exps in out:
            for e in exps:
                _checked_exponent(e)
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        k = _as_int(k, "power")
        if k < 0:
            raise ValueError("negative powers are not defined for Laurent polynomials")
        result = LaurentPoly.one(self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def _wrap(self, canonical_terms: dict[tuple[int, ...], int]) -> "LaurentPoly":
        # internal fast path: terms are already canonical and validated
        poly = object.__new__(LaurentPoly)
        poly.variables = self.variables
        poly._terms = canonical_terms
        poly._hash = None
        return poly

    # -- structural operations ----------------------------------------------

    def substitute(
        self,
        mapping: Mapping[str, Monomial],
        into: VariableSet | None = None,
    ) -> "LaurentPoly":
        """Monomial substitution, extended multiplicatively over terms.

        Every variable of this polynomial's set must be mapped; all image
        monomials must share one target ``VariableSet`` (pass ``into`` when
        the polynomial has no variables of its own).
        """
        images: list[Monomial] = []
        target = into
        for name in self.variables.names:
            if name not in mapping:
                raise ValueError(f"unmapped variable {name!r} in substitution")
            image = mapping[name]
            if not isinstance(image, Monomial):
                raise TypeError("substitution images must be Monomial values")
            if target is None:
                target = image.variables
            elif image.variables != target:
                raise ValueError("substitution images use mismatched variable sets")
            images.append(image)
        if target is None:
            raise ValueError(
                "substituting a polynomial with no variables requires an explicit target"
            )
        width = len(target)
        out: dict[tuple[int, ...], int] = {}
        for exps, coeff in self._terms.items():
            acc = [0] * width
            for e, image in zip(exps, images):
                if e == 0:
                    continue
                for slot, ie in enumerate(image.exps):
                    if ie:
                        acc[slot] += e * ie
            key = tuple(acc)
            merged = out.get(key, 0) + coeff
            if merged:
                out[key] = merged
            else:
                out.pop(key, None)
        return LaurentPoly(target, out)

    def evaluate_at_one(self, name: str) -> "LaurentPoly":
        """Set one variable to 1: delete its exponent slot and merge terms."""
        i = self.variables.index(name)
        reduced = self.variables.without(name)
        out: dict[tuple[int, ...], int] = {}
        for exps, coeff in self._terms.items():
            key = exps[:i] + exps[i + 1:]
            merged = out.get(key, 0) + coeff
            if merged:
                out[key] = merged
            else:
                out.pop(key, None)
        return LaurentPoly(reduced, out)

    def exact_divide(self, den: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / den for single-variable polynomials.

        Raises :class:`NotDivisibleError` when den does not divide self over
        the integers; that always signals a formula-application bug upstream.
        """
        self._require_same_variables(den)
        if len(self.variables) > 1:
            raise ValueError("exact_divide requires single-variable polynomials")
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        if len(self.variables) == 0:
            q, r = divmod(self._terms[()], den._terms[()])
            if r:
                raise NotDivisibleError("constant division leaves a remainder")
            return LaurentPoly(self.variables, {(): q})

        num = self._single_variable_exponents()
        div = den._single_variable_exponents()
        shift = min(num) - min(div)
        num = {e - min(num): c for e, c in num.items()} if min(num) else num
        div = {e - min(div): c for e, c in div.items()} if min(div) else div

        dlead = max(div)
        dlc = div[dlead]
        rem = dict(num)
        heap = [-e for e in rem]
        heapq.heapify(heap)
        quotient: dict[int, int] = {}
        while heap:
            e = -heapq.heappop(heap)
            if e not in rem:
                continue
            if e < dlead:
                raise NotDivisibleError(
                    f"{self} is not an exact multiple of {den}"
                )
            qc, r = divmod(rem[e], dlc)
            if r:
                raise NotDivisibleError(
                    f"{self} is not an exact multiple of {den}"
                )
            qe = e - dlead
            quotient[qe] = qc
            for de, dc in div.items():
                ne = qe + de
                merged = rem.get(ne, 0) - qc * dc
                if merged:
                    if ne not in rem:
                        heapq.heappush(heap, -ne)
                    rem[ne] = merged
                else:
                    rem.pop(ne, None)
        return LaurentPoly(self.variables, {(e + shift,): c for e, c in quotient.items()})

    def symmetrize(self) -> "LaurentPoly":
        """The unit multiple ±t^k·P satisfying S(1/t) = S(t), top coefficient > 0.

        Raises :class:`NotSymmetrizableError` when no unit achieves symmetry
        (odd exponent span, or an asymmetric coefficient profile).
        """
        if len(self.variables) > 1:
            raise ValueError("symmetrize requires a single-variable polynomial")
        if not self._terms:
            raise NotSymmetrizableError("cannot symmetrize the zero polynomial")
        if len(self.variables) == 0:
            c = self._terms[()]
            return self if c > 0 else -self
        exps = self._single_variable_exponents()
        lo, hi = min(exps), max(exps)
        if (hi - lo) % 2:
            raise NotSymmetrizableError(
                f"exponent span {hi - lo} is odd; no centering unit exists"
            )
        shift = -((hi + lo) // 2)
        centered = {e + shift: c for e, c in exps.items()}
        for e, c in centered.items():
            if centered.get(-e) != c:
                raise NotSymmetrizableError("no unit multiple is symmetric")
        if centered[hi + shift] < 0:
            centered = {e: -c for e, c in centered.items()}
        return LaurentPoly(self.variables, {(e,): c for e, c in centered.items()})

    def equal_up_to_units(self, other: "LaurentPoly") -> bool:
        """True iff self = ±t^k · other for some integer k."""
        if len(self.variables) > 1 or len(other.variables) > 1:
            raise ValueError("equal_up_to_units requires single-variable polynomials")
        if self.variables != other.variables:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if len(self._terms) != len(other._terms):
            return False
        if len(self.variables) == 0:
            return self._terms[()] == other._terms[()] or self._terms[()] == -other._terms[()]
        a = self._single_variable_exponents()
        b = other._single_variable_exponents()
        sa, sb = min(a), min(b)
        a = {e - sa: c for e, c in a.items()}
        b = {e - sb: c for e, c in b.items()}
        return a == b or a == {e: -c for e, c in b.items()}

    # -- equality / hashing --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # -- serialization -------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = self.variables.names
        parts: list[str] = []
        for exps, coeff in self.terms():
            mon = _format_monomial(names, exps)
            mag = abs(coeff)
            if mon and mag == 1:
                body = mon
            elif mon:
                body = f"{mag}*{mon}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, variables={self.variables.names!r})"

    @classmethod
    def parse(cls, text: str, variables: VariableSet | None = None) -> "LaurentPoly":
        """Parse the text form.

        With ``variables`` given, every name must belong to it and the result
        is over exactly that set (this is the bit-exact inverse of ``str``).
        Without it, the set is inferred from the names in order of first
        appearance.
        """
        return _parse_poly(cls, text, variables)

    def to_json_dict(self) -> dict:
        return {
            "variables": list(self.variables.names),
            "terms": [
                {"exps": list(exps), "coeff": str(coeff)} for exps, coeff in self.terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LaurentPoly":
        try:
            variables = VariableSet(*data["variables"])
            terms = {}
            for entry in data["terms"]:
                exps = tuple(_as_int(e, "exponent") for e in entry["exps"])
                coeff = int(entry["coeff"])
                terms[exps] = terms.get(exps, 0) + coeff
        except (KeyError, TypeError, ValueError) as exc:
            raise PolyParseError(f"malformed polynomial JSON: {exc}") from exc
        return cls(variables, terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PolyParseError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(data)


def _format_monomial(names: tuple[str, ...], exps: tuple[int, ...]) -> str:
    factors = []
    for name, e in zip(names, exps):
        if e == 0:
            continue
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors)


_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[\^*+-]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise PolyParseError(f"unexpected character {text[pos:].strip()[0]!r}")
            break
        if m.group("int") is not None:
            tokens.append(("int", m.group("int")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def _parse_poly(cls, text: str, variables: VariableSet | None):
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial text")
    pos = 0
    seen_names: list[str] = []
    raw_terms: list[tuple[dict[str, int], int]] = []

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def parse_signed_int() -> int:
        kind, value = take()
        sign = 1
        while kind == "op" and value in "+-":
            if value == "-":
                sign = -sign
            kind, value = take()
        if kind != "int":
            raise PolyParseError("expected an integer")
        return sign * int(value)

    def parse_factor(term_exps: dict[str, int]) -> int:
        kind, value = take()
        if kind == "int":
            return int(value)
        if kind == "name":
            if value not in seen_names:
                seen_names.append(value)
            exponent = 1
            if peek() == ("op", "^"):
                take()
                exponent = parse_signed_int()
            term_exps[value] = term_exps.get(value, 0) + exponent
            return 1
        raise PolyParseError(f"expected a coefficient or variable, got {value!r}")

    def parse_term(sign: int) -> None:
        coeff = sign
        exps: dict[str, int] = {}
        coeff *= parse_factor(exps)
        while peek() == ("op", "*"):
            take()
            coeff *= parse_factor(exps)
        raw_terms.append((exps, coeff))

    sign = 1
    kind, value = peek()
    while kind == "op" and value in "+-":
        if value == "-":
            sign = -sign
        take()
        kind, value = peek()
    parse_term(sign)
    while pos < len(tokens):
        kind, value = take()
        if kind != "op" or value not in "+-":
            raise PolyParseError(f"expected '+' or '-' between terms, got {value!r}")
        sign = -1 if value == "-" else 1
        kind, value = peek()
        while kind == "op" and value in "+-":
            if value == "-":
                sign = -sign
            take()
            kind, value = peek()
        parse_term(sign)

    if variables is None:
        variables = VariableSet(*seen_names)
    else:
        for name in seen_names:
            if name not in variables:
                raise PolyParseError(
                    f"variable {name!r} is not in the expected set {variables.names}"
                )
    width = len(variables)
    terms: dict[tuple[int, ...], int] = {}
    for exps_by_name, coeff in raw_terms:
        exps = [0] * width
        for name, e in exps_by_name.items():
            exps[variables.index(name)] = e
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return cls(variables, terms)
