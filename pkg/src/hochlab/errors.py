"""Exception types shared across the package.

Grouped here so the command-line front end can map each family to a
stable exit code without importing every module.
"""


class HochlabError(Exception):
    """Base class for all errors raised by this package."""


# ---- linear algebra ----

class ShapeMismatch(HochlabError):
    """Matrix dimensions are incompatible for the requested operation."""


class CompositionNotZero(HochlabError):
    """A pair of would-be differentials does not compose to zero."""


class NotChainEndomorphism(HochlabError):
    """The map does not preserve the kernel/image pair it should descend to."""


class InconsistentSystem(HochlabError):
    """A linear system has no solution."""


# ---- algebraic structures ----

class AlgebraInvalid(HochlabError):
    """Structure constants fail an algebra axiom."""


class HopfDataInvalid(HochlabError):
    """Comultiplication, counit or antipode fails a Hopf axiom."""


class HopfDataMissing(HochlabError):
    """The operation needs Hopf data the algebra does not carry."""


class RibbonInvalid(HochlabError):
    """The designated ribbon element is not central or not invertible."""


class RibbonMissing(HochlabError):
    """The operation needs a ribbon element the algebra does not carry."""


class InvolutionInvalid(HochlabError):
    """The map is not a unital anti-involution."""


class InvolutionMissing(HochlabError):
    """The operation needs an anti-involution the algebra does not carry."""


class InvalidGroup(HochlabError):
    """A multiplication table fails the group axioms."""


class CategoryInvalid(HochlabError):
    """Composition tensors of a presented category fail an axiom."""


# ---- simplicial / cyclic ----

class DomainMismatch(HochlabError):
    """Attempted to compose morphisms whose endpoints do not match."""


class IndexOutOfRange(HochlabError):
    """A face/degeneracy/rotation index lies outside the legal range."""


# ---- complexes and homology ----

class SizeBoundExceeded(HochlabError):
    """Constructing the requested chain groups would exceed the cell budget."""


class CharNotZero(HochlabError):
    """The operation is only defined over fields of characteristic zero."""


class NotChainMap(NotChainEndomorphism):
    """A would-be action on homology fails to commute with the differential."""


# ---- input files ----

class SpecFileError(HochlabError):
    """An algebra or group description file is malformed."""
