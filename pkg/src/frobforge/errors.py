"""Exception vocabulary shared across the engine.

Refusals that are ordinary answers (a group failing a structural test) are
returned as values, not raised; these classes cover genuine contract
violations and resource limits.
"""


class ForgeError(Exception):
    """Base class for all engine errors."""


class CapExceeded(ForgeError):
    """A closure, automorphism search or oracle scan went past its cap."""


class NotNormal(ForgeError):
    pass


class TrivialGroup(ForgeError):
    pass


class NotAHom(ForgeError):
    """Generator images do not extend to a homomorphism."""


class BadPrime(ForgeError):
    pass


class NotDirectProduct(ForgeError):
    pass


class NotIntravariant(ForgeError):
    pass


class HypothesisViolated(ForgeError):
    """An operation's structural precondition does not hold for the input."""


class NotTransitive(ForgeError):
    pass


class NotCEpimorphism(ForgeError):
    pass


class NotSurjective(ForgeError):
    pass


class DegenerateKernel(ForgeError):
    pass


class EmptyKernel(ForgeError):
    pass


class NotFound(ForgeError):
    """An element search that is guaranteed to succeed came up empty (bug)."""


class InternalInconsistency(ForgeError):
    """A postcondition that must hold by theorem failed; indicates a bug."""


class MinPolyReducible(ForgeError):
    pass


class NotSemisimple(ForgeError):
    pass


class ParseError(ForgeError):
    pass


class ValidationError(ForgeError):
    pass
