"""Exception types shared across the package."""


class RecurCodesError(ValueError):
    """Base class for all domain errors raised by this package."""


class NonPrimeModulus(RecurCodesError):
    pass


class ModulusMismatch(RecurCodesError):
    pass


class AllZeroSequence(RecurCodesError):
    """All seeds vanish modulo the prime, so the sequence is identically zero."""


class NotPurelyPeriodic(RecurCodesError):
    """The sequence reduced mod p has a nonzero pre-period."""


class DegenerateSequence(RecurCodesError):
    """The period is too short to carry a code of dimension 2."""


class PreconditionError(RecurCodesError):
    pass
