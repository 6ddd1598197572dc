"""frobforge: a desk-scale finite-group engine.

Verifies Frobenius structure of groups with a distinguished cyclic
subgroup, lifts such structure through finite quotients and quotient
towers, checks intravariance of subgroups, and emits re-verifiable JSON
certificates for every claim.
"""

__version__ = "0.1.0"
