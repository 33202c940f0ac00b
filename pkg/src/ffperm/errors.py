"""Exception hierarchy shared by all ffperm modules."""


class FFPermError(Exception):
    """Base class for all ffperm errors."""


class CompositeP(FFPermError):
    """The given characteristic is not prime."""


class ReducibleModulus(FFPermError):
    """The supplied modulus is reducible or has the wrong degree."""


class ZeroElement(FFPermError):
    """An operation defined only for nonzero elements got zero."""


class BadRange(FFPermError):
    """An integer argument lies outside its admissible range."""


class MixedFields(FFPermError):
    """Operands belong to different field contexts."""


class BadChain(FFPermError):
    """Chain parameters violate the chain invariants."""


class BadParam(FFPermError):
    """A parameter that must be nonzero is zero (or otherwise invalid)."""


class NotPermutation(FFPermError):
    """The polynomial does not permute the field."""


class FieldTooLarge(FFPermError):
    """The field order exceeds the configured cap for this operation."""


class EvenCharacteristic(FFPermError):
    """The operation requires odd characteristic."""


class ZeroC(FFPermError):
    """The linear coefficient of a counting query must be nonzero."""


class GammaOne(FFPermError):
    """gamma = 1 makes the counting equation degenerate."""


class NonCoprimePeriods(FFPermError):
    """Periods of the two periodic functions are not coprime."""


class EmptySequence(FFPermError):
    """An empty sequence has no linear complexity."""
