"""Exception hierarchy.

Input problems derive from :class:`InputError`, exhausted resource caps from
:class:`ResourceLimit`. The CLI maps them to exit codes 2 and 3.
"""


class TLOrbitsError(Exception):
    pass


class InputError(TLOrbitsError):
    pass


class ResourceLimit(TLOrbitsError):
    pass


class AssociativityViolation(InputError):
    def __init__(self, s, t, u):
        super().__init__(f"(s*t)*u != s*(t*u) for s={s}, t={t}, u={u}")
        self.triple = (s, t, u)


class IdentityViolation(InputError):
    def __init__(self, s):
        super().__init__(f"identity is not neutral for element {s}")
        self.element = s


class RegexSyntaxError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class FormulaSyntaxError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownLetter(InputError):
    def __init__(self, letter, alphabet=None):
        msg = f"letter {letter!r} is not in the alphabet"
        if alphabet is not None:
            msg += f" {''.join(alphabet)!r}"
        super().__init__(msg)
        self.letter = letter


class AlphabetMismatch(InputError):
    pass


class NotIdempotent(InputError):
    pass


class ClosureViolation(TLOrbitsError):
    """A set that should be a monoid is not closed or lacks its identity."""


class PositionOutOfRange(InputError):
    pass


class StateBlowupLimit(ResourceLimit):
    pass


class MonoidBlowupLimit(ResourceLimit):
    pass


class SampleLimit(ResourceLimit):
    pass
