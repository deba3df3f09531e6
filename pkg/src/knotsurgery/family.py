"""Family sweeps and machine-checkable unboundedness certificates.

A certificate is a strictly increasing sequence of family indices whose
basic-class lower bounds also strictly increase, ending above a stated
target.  Since every target admits one, the bounds are unbounded over the
family, which is what rules out a finite set of diffeomorphism types.  The
certificate never claims any specific pair of manifolds is distinct; only
the unboundedness is certified, exactly as much as the bounds support.

Verification recomputes every bound from the polynomial pipeline and
trusts nothing stored in the certificate.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .knots import TorusKnotSpec, alexander_torus, genus_torus
from .laurent import LaurentPoly
from .surgery import basic_class_lower_bound

__all__ = [
    "DEFAULT_P_CAP",
    "CERTIFICATE_SCHEMA_VERSION",
    "CapExhaustedError",
    "FamilyRow",
    "FamilyReport",
    "Witness",
    "UnboundednessCertificate",
    "analyze_family",
    "certify_unbounded",
    "verify_certificate",
]

DEFAULT_P_CAP = 1000
CERTIFICATE_SCHEMA_VERSION = 1

CSV_COLUMNS = ("p", "lower_bound", "lemma63_ok", "genus", "span", "delta_gamma")


class CapExhaustedError(RuntimeError):
    """The scan hit the index cap before the target was exceeded.

    The lower bound grows linearly in p, so reaching the cap first signals a
    regression in the invariant pipeline, not a property of the family.
    """


@dataclass(frozen=True)
class FamilyRow:
    p: int
    delta_gamma: LaurentPoly
    lower_bound: int
    lemma63_ok: bool
    genus: int
    span: int

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "lower_bound": self.lower_bound,
            "lemma63_ok": self.lemma63_ok,
            "genus": self.genus,
            "span": self.span,
            "delta_gamma": self.delta_gamma.to_json_dict(),
        }


@dataclass(frozen=True)
class FamilyReport:
    n: int
    rows: tuple[FamilyRow, ...]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rows": [row.to_json_dict() for row in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow(
                [
                    row.p,
                    row.lower_bound,
                    "true" if row.lemma63_ok else "false",
                    row.genus,
                    row.span,
                    str(row.delta_gamma),
                ]
            )
        return buffer.getvalue()

    def to_text(self) -> str:
        lines = [f"family report for n = {self.n}"]
        for row in self.rows:
            flag = "ok" if row.lemma63_ok else "FAIL"
            lines.append(
                f"p={row.p} lower_bound={row.lower_bound} [{flag}] "
                f"genus={row.genus} span={row.span} delta={row.delta_gamma}"
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Witness:
    p: int
    lower_bound: int

    def to_json_dict(self) -> dict:
        return {"p": self.p, "lower_bound": self.lower_bound}


@dataclass(frozen=True)
class UnboundednessCertificate:
    """Witnesses that the basic-class lower bounds exceed a target.

    Construction does not validate the monotonicity claims; that is
    verify_certificate's job, which must be able to inspect broken
    certificates and report them false rather than refuse to hold them.
    """

    target: int
    witnesses: tuple[Witness, ...]

    def to_json_dict(self) -> dict:
        return {
            "schema_version": CERTIFICATE_SCHEMA_VERSION,
            "target": self.target,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data) -> "UnboundednessCertificate":
        try:
            version = data["schema_version"]
            if version != CERTIFICATE_SCHEMA_VERSION:
                raise ValueError(f"unsupported certificate schema version {version!r}")
            target = data["target"]
            witnesses = tuple(
                Witness(p=w["p"], lower_bound=w["lower_bound"]) for w in data["witnesses"]
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from exc
        if not isinstance(target, int) or isinstance(target, bool):
            raise ValueError("certificate target must be an integer")
        for w in witnesses:
            if not isinstance(w.p, int) or not isinstance(w.lower_bound, int):
                raise ValueError("certificate witnesses must carry integers")
        return cls(target=target, witnesses=witnesses)

    @classmethod
    def from_json(cls, text: str) -> "UnboundednessCertificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"certificate is not valid JSON: {exc}") from exc
        return cls.from_json_dict(data)


def analyze_family(
    n: int, p_min: int, p_max: int, p_cap: int = DEFAULT_P_CAP
) -> FamilyReport:
    """One row per family index in [p_min, p_max], sorted by p.

    The lower bound per row does not depend on n: the E(n) prefactor
    contributes no t_G terms.  n is carried through to the report so the
    emitted artifact names the manifold family it describes.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"E(n) parameter must be a positive integer, got {n!r}")
    if not (1 <= p_min <= p_max <= p_cap):
        raise ValueError(
            f"need 1 <= p_min <= p_max <= {p_cap}, got p_min={p_min} p_max={p_max}"
        )
    rows = []
    for p in range(p_min, p_max + 1):
        spec = TorusKnotSpec(p, p + 1)
        delta = alexander_torus(spec)
        bound = delta.term_count()
        rows.append(
            FamilyRow(
                p=p,
                delta_gamma=delta,
                lower_bound=bound,
                lemma63_ok=bound >= p,
                genus=genus_torus(spec),
                span=delta.span(),
            )
        )
    return FamilyReport(n=n, rows=tuple(rows))


def certify_unbounded(
    target: int, p_cap: int = DEFAULT_P_CAP
) -> UnboundednessCertificate:
    """Greedy scan for witnesses with strictly increasing lower bounds.

    Each index whose bound beats the running maximum becomes a witness; the
    scan stops as soon as the bound exceeds the target.  Since the bound is
    at least p, the scan always finishes by p = target + 1 unless p_cap cuts
    it off first, which raises CapExhaustedError.
    """
    if not isinstance(target, int) or target < 0:
        raise ValueError(f"target must be a nonnegative integer, got {target!r}")
    if not isinstance(p_cap, int) or p_cap < 1:
        raise ValueError(f"p_cap must be a positive integer, got {p_cap!r}")
    witnesses: list[Witness] = []
    best = None
    for p in range(1, p_cap + 1):
        bound = basic_class_lower_bound(p)
        if best is None or bound > best:
            witnesses.append(Witness(p=p, lower_bound=bound))
            best = bound
            if best > target:
                return UnboundednessCertificate(target=target, witnesses=tuple(witnesses))
    raise CapExhaustedError(
        f"no lower bound above {target} found for p <= {p_cap}"
    )


def verify_certificate(c: UnboundednessCertificate, n: int = 1) -> bool:
    """Recompute every witness bound and re-check the certificate's claims.

    Returns False on any discrepancy instead of raising: index sequence not
    strictly increasing, bounds not strictly increasing, a recorded bound
    that does not match recomputation, or a final bound at or below the
    target.  The E(n) parameter names which family the certificate is read
    against; the bounds themselves are independent of it.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"E(n) parameter must be a positive integer, got {n!r}")
    if not c.witnesses:
        return False
    previous_p = 0
    previous_bound = None
    for w in c.witnesses:
        if not isinstance(w.p, int) or w.p <= previous_p:
            return False
        try:
            recomputed = basic_class_lower_bound(w.p)
        except (ValueError, TypeError):
            return False
        if w.lower_bound != recomputed:
            return False
        if previous_bound is not None and w.lower_bound <= previous_bound:
            return False
        previous_p = w.p
        previous_bound = w.lower_bound
    return previous_bound > c.target
