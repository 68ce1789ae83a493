"""Exception types shared across the package."""


class OsphomError(Exception):
    pass


class InvalidInput(OsphomError):
    """Malformed data: mixed fields, bad dimensions, unknown names."""


class InvalidShape(InvalidInput):
    pass


class MixedShapes(InvalidInput):
    pass


class NotClosed(OsphomError):
    """A matrix span is not closed under the supercommutator."""


class WellDefinednessFailure(OsphomError):
    """A map defined on generators does not kill the relation module."""


class NoDecomposition(OsphomError):
    """An element is outside the span required by its canonical decomposition."""


class CocycleInvalid(OsphomError):
    """A bilinear map failed the 2-cocycle conditions."""


class ClosureOverflow(OsphomError):
    """Bracket-span closure failed to stabilize within its iteration cap."""


class SignConventionBroken(OsphomError):
    """d2 o d3 != 0: the boundary sign convention is inconsistent."""
