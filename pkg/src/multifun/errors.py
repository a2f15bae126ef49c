"""Exception hierarchy shared by every module."""


class MultifunctionError(Exception):
    """Base class for all library errors."""


class UniverseMismatchError(MultifunctionError, ValueError):
    pass


class VertexError(MultifunctionError, ValueError):
    """A vertex index lies outside its universe."""


class EmptyArgumentError(MultifunctionError, ValueError):
    pass


class EmptyWordError(MultifunctionError, ValueError):
    pass


class EnumerationCapError(MultifunctionError):
    """An explicit enumeration would exceed its configured cap."""


class ZeroModulusError(MultifunctionError, ValueError):
    pass


class KindViolationError(MultifunctionError, ValueError):
    """An edge list does not satisfy the requested graph kind."""


class PreconditionError(MultifunctionError, ValueError):
    pass


class NotUndirectedError(PreconditionError):
    pass


class IncompleteSelectionError(MultifunctionError, ValueError):
    pass


class EmptyFamilyError(MultifunctionError, ValueError):
    pass


class PrimeDomainError(MultifunctionError, ValueError):
    pass


class NotPrimeError(MultifunctionError, ValueError):
    pass


class UndecidableDescriptionError(MultifunctionError, ValueError):
    pass
