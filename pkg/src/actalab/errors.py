"""Exception types shared across the toolkit.

Validation errors carry the offending labels so diagnostics can name the
exact law instance that failed.
"""

from __future__ import annotations


class ActalabError(Exception):
    """Base class for every toolkit error."""


class ValidationError(ActalabError):
    """A structure failed one of its defining laws."""


class DuplicateNameError(ValidationError):
    def __init__(self, label: str):
        super().__init__(f"duplicate element label {label!r}")
        self.label = label


class NonAssociativeError(ValidationError):
    def __init__(self, i: str, j: str, k: str):
        super().__init__(f"associativity fails at triple ({i!r}, {j!r}, {k!r})")
        self.triple = (i, j, k)


class BadIdentityError(ValidationError):
    def __init__(self, identity: str, witness: str):
        super().__init__(
            f"{identity!r} is not a two-sided identity (fails at {witness!r})"
        )
        self.identity = identity
        self.witness = witness


class EmptyCarrierError(ValidationError):
    def __init__(self):
        super().__init__("act carrier must be non-empty")


class IdentityLawError(ValidationError):
    def __init__(self, a: str):
        super().__init__(f"identity law 1*a = a fails at carrier element {a!r}")
        self.element = a


class CompatibilityError(ValidationError):
    def __init__(self, s: str, t: str, a: str, side: str):
        law = "s(t a) = (st)a" if side == "left" else "(a s)t = a(st)"
        super().__init__(f"{law} fails at s={s!r}, t={t!r}, a={a!r}")
        self.instance = (s, t, a)


class SideMismatchError(ActalabError):
    pass


class MonoidMismatchError(ActalabError):
    pass


class ElementNotFoundError(ActalabError):
    def __init__(self, label: str, where: str):
        super().__init__(f"element {label!r} not found in {where}")
        self.label = label


class WitnessesInvalidError(ActalabError):
    def __init__(self, position: int):
        super().__init__(f"witness chain violates its equation at position {position}")
        self.position = position


class UnknownConditionError(ActalabError):
    def __init__(self, cond: str):
        super().__init__(f"unknown condition {cond!r}")
        self.condition = cond


class BadParamsError(ActalabError):
    pass
