"""Exception types shared across the package.

Every validation failure raises a subclass of KTError so callers (and the
command line driver) can distinguish usage errors from verification
failures.
"""


class KTError(Exception):
    pass


# curve / coordinate errors

class NonNormal(KTError):
    """Coordinate vector violates the normal matching conditions."""


class Empty(KTError):
    """All-zero coordinate vector encodes the empty multicurve."""


class NotConnected(KTError):
    """Coordinates encode a multicurve with more than one component."""


class NotEssential(KTError):
    """Curve bounds an unpunctured or once-punctured disk."""


class SurfaceMismatch(KTError):
    """Operands live on different punctured spheres."""


# pants decomposition errors

class WrongCount(KTError):
    pass


class NotDisjoint(KTError):
    pass


class DuplicateIsotopyClass(KTError):
    pass


class NotPants(KTError):
    """A complementary piece has a number of ends different from 3."""


class CurveNotInDecomposition(KTError):
    pass


class InvalidStep(KTError):
    """A path step is not a valid A-move; carries the step index."""

    def __init__(self, index, message=""):
        self.index = index
        super().__init__(message or "invalid step at index %d" % index)


# tangle errors

class InvalidTangle(KTError):
    """Shadow arcs do not present a trivial tangle."""


# trisection / certificate errors

class NotDefiningPair(KTError):
    pass


class LabelingImpossible(KTError):
    """No reducing/cut-reducing labeling exists; a falsification event."""


class InvalidCertificate(KTError):
    pass


class InvalidPlat(KTError):
    pass


class InvalidSlope(KTError):
    pass


class PreconditionFailed(KTError):
    pass


class PathConstructionFailed(KTError):
    pass
