"""Seiberg-Witten polynomials of the link-surgery family.

The family member with index p is built from the two-component link
L_p = K u Gamma_p, where Gamma_p is the torus knot T(p, p+1) and the
linking number of the components is 1.  The surgery manifold X_p built from
E(n) has

    SW(X_p) = (t_K - t_K^-1)^(n-1) * Delta_L(t_K^2, t_G^2),

and the Torres condition pins down the specialization

    Delta_L(1, y) = (1 + y + ... + y^(lk-1)) * Delta_Gamma(y).

The full two-variable Delta_L is not determined by this data, so the
pipeline works through the specialization: sw_link_surgery accepts an
explicit Delta_L for synthetic checks, while sw_specialized carries the
specialization and the basic-class lower bound it yields.  Each nonzero
term of an SW polynomial marks a basic class, so term counts bound the
number of basic classes from below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .knots import KnotExpr, Torus, TorusKnotSpec, alexander_torus
from .laurent import LaurentPoly, VariableSet

__all__ = [
    "KG_VARS",
    "TG_VARS",
    "XY_VARS",
    "LinkFamilyMember",
    "SurgerySpec",
    "SWResult",
    "torres_specialize",
    "sw_prefactor",
    "sw_link_surgery",
    "sw_specialized",
    "basic_class_lower_bound",
]

KG_VARS = VariableSet("t_K", "t_G")
TG_VARS = VariableSet("t_G")
XY_VARS = VariableSet("x", "y")


@dataclass(frozen=True)
class LinkFamilyMember:
    """The link L_p = K u Gamma_p with Gamma_p = T(p, p+1) and lk = 1."""

    p: int
    companion_knot: KnotExpr = Torus.of(2, 3)
    gamma: TorusKnotSpec = field(init=False)
    linking_number: int = field(init=False, default=1)

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError(f"family index must be a positive integer, got {self.p!r}")
        object.__setattr__(self, "gamma", TorusKnotSpec(self.p, self.p + 1))


@dataclass(frozen=True)
class SurgerySpec:
    """The manifold X_p = E(n, 1; L_p): an E(n) parameter and a family member."""

    n: int
    member: LinkFamilyMember

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"E(n) parameter must be a positive integer, got {self.n!r}")


@dataclass(frozen=True)
class SWResult:
    """SW data for one X_p.

    polynomial is the full two-variable SW polynomial when a closed-form
    Delta_L was supplied, and None otherwise (the family pipeline cannot
    know it).  specialization_at_tK1 is the honest t_K = 1 specialization,
    which the prefactor kills for n >= 2.  The lower bound always counts
    the terms of the n = 1 specialization, since the basic-class bound does
    not depend on the prefactor.
    """

    p: int
    n: int
    polynomial: LaurentPoly | None
    specialization_at_tK1: LaurentPoly
    basic_class_lower_bound: int

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "specialization": self.specialization_at_tK1.to_json_dict(),
            "lower_bound": self.basic_class_lower_bound,
            "full_polynomial": (
                "unavailable" if self.polynomial is None else self.polynomial.to_json_dict()
            ),
        }


def torres_specialize(delta_gamma: LaurentPoly, lk: int) -> LaurentPoly:
    """Delta_L(1, y) from the component polynomial and the linking number.

    Multiplies by the geometric sum 1 + y + ... + y^(lk-1), built directly
    rather than by dividing y^lk - 1 by y - 1.  lk = 0 gives 0, lk = 1
    gives delta_gamma back unchanged.
    """
    if not isinstance(lk, int) or lk < 0:
        raise ValueError(f"linking number must be a nonnegative integer, got {lk!r}")
    if len(delta_gamma.variables) > 1:
        raise ValueError("torres_specialize needs a single-variable polynomial")
    if lk == 1:
        return delta_gamma
    variables = delta_gamma.variables if len(delta_gamma.variables) else VariableSet("y")
    if lk == 0:
        return LaurentPoly.zero(variables)
    geometric = LaurentPoly(variables, {(e,): 1 for e in range(lk)})
    if len(delta_gamma.variables) == 0:
        delta_gamma = LaurentPoly.constant(variables, delta_gamma.coefficient(()))
    return geometric * delta_gamma


def sw_prefactor(n: int) -> LaurentPoly:
    """(t_K - t_K^-1)^(n-1), the part of SW(X_p) the E(n) factor contributes."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"E(n) parameter must be a positive integer, got {n!r}")
    t_k = LaurentPoly.var(KG_VARS, "t_K")
    t_k_inv = LaurentPoly.var(KG_VARS, "t_K", -1)
    return (t_k - t_k_inv) ** (n - 1)


def _doubled(delta_L: LaurentPoly) -> LaurentPoly:
    # Delta_L(t_K^2, t_G^2) for a polynomial in x and y (either may be absent)
    mapping = {}
    for name in delta_L.variables:
        if name == "x":
            mapping[name] = KG_VARS.monomial(t_K=2)
        elif name == "y":
            mapping[name] = KG_VARS.monomial(t_G=2)
        else:
            raise ValueError(f"delta_L may only use x and y, found {name!r}")
    return delta_L.substitute(mapping, into=KG_VARS)


def sw_link_surgery(spec: SurgerySpec, delta_L: LaurentPoly) -> LaurentPoly:
    """Full SW polynomial (t_K - t_K^-1)^(n-1) * Delta_L(t_K^2, t_G^2)."""
    return sw_prefactor(spec.n) * _doubled(delta_L)


@lru_cache(maxsize=None)
def _specialization_n1(p: int) -> LaurentPoly:
    # Delta_L(1, t_G^2) for the family link: Torres with lk = 1 collapses it
    # to Delta_Gamma, then y maps to t_G^2
    member = LinkFamilyMember(p)
    delta_gamma = alexander_torus(member.gamma)
    delta_at_1 = torres_specialize(delta_gamma, member.linking_number)
    name = delta_at_1.variables.names[0]
    return delta_at_1.substitute({name: TG_VARS.monomial(t_G=2)})


def sw_specialized(spec: SurgerySpec, delta_L: LaurentPoly | None = None) -> SWResult:
    """SW data for X_p through the t_K = 1 specialization.

    Without delta_L this is the production path: the specialization comes
    from the Torres condition and the full polynomial is unavailable.  With
    an explicit delta_L (over x, y) the full polynomial is computed too and
    the specialization is read off from it.
    """
    p = spec.member.p
    if delta_L is None:
        polynomial = None
        base = _specialization_n1(p)
    else:
        polynomial = sw_link_surgery(spec, delta_L)
        base = _doubled(delta_L).evaluate_at_one("t_K")
    if spec.n == 1:
        specialization = base
    else:
        specialization = LaurentPoly.zero(TG_VARS)
        if polynomial is not None:
            specialization = polynomial.evaluate_at_one("t_K")
    return SWResult(
        p=p,
        n=spec.n,
        polynomial=polynomial,
        specialization_at_tK1=specialization,
        basic_class_lower_bound=base.term_count(),
    )


@lru_cache(maxsize=None)
def basic_class_lower_bound(p: int) -> int:
    """Nonzero-term count of Delta_{T(p,p+1)}; bounds the basic classes of X_p.

    Equals 2p - 1 for this family, so in particular it is at least p.
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"family index must be a positive integer, got {p!r}")
    return alexander_torus(TorusKnotSpec(p, p + 1)).term_count()
