"""Emitting and verifying an unboundedness certificate.

The certificate records witnesses p with strictly increasing basic-class
lower bounds ending above a target.  One certificate per target means the
bounds are unbounded over the family, so no finite list of diffeomorphism
types can account for all the X_p.  Verification recomputes every bound
from the polynomial pipeline and trusts nothing in the file.
"""

from knotsurgery import (
    UnboundednessCertificate,
    Witness,
    certify_unbounded,
    verify_certificate,
)

certificate = certify_unbounded(target=10)
print(certificate.to_json())
print()

# The greedy scan stops at the first index whose bound clears the target;
# the bound is 2p - 1 here, so witnesses stay small.
last = certificate.witnesses[-1]
print(f"target 10 cleared at p = {last.p} with bound {last.lower_bound}")
print("verifies?", verify_certificate(certificate))

# Round trip through JSON, as the CLI does with certificate files.
restored = UnboundednessCertificate.from_json(certificate.to_json())
assert restored == certificate

# Tampering is caught because verification recomputes the bounds.
witnesses = list(certificate.witnesses)
witnesses[-1] = Witness(p=last.p, lower_bound=last.lower_bound + 2)
forged = UnboundednessCertificate(target=certificate.target, witnesses=tuple(witnesses))
print("forged bound verifies?", verify_certificate(forged))

# So is reordering, which breaks strict monotonicity.
shuffled = UnboundednessCertificate(
    target=certificate.target, witnesses=tuple(reversed(certificate.witnesses))
)
print("reordered witnesses verify?", verify_certificate(shuffled))
