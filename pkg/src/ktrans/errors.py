"""Exception hierarchy shared by all ktrans modules."""

from __future__ import annotations


class KTransError(Exception):
    """Base class for all library errors."""


# -- scene validation -------------------------------------------------------

class SceneValidationError(KTransError):
    """A raw scene violates a structural invariant."""

    def __init__(self, message: str, ring: tuple[int, int] | None = None,
                 vertex: tuple[int, int] | None = None):
        detail = message
        if ring is not None:
            detail += f" [component {ring[0]}, ring {ring[1]}]"
        if vertex is not None:
            detail += f" at vertex {vertex}"
        super().__init__(detail)
        self.ring = ring
        self.vertex = vertex


class NonOrthogonalEdge(SceneValidationError):
    pass


class SelfIntersection(SceneValidationError):
    pass


class PinchVertex(SceneValidationError):
    pass


class OddVertexCount(SceneValidationError):
    pass


class OverlappingComponents(SceneValidationError):
    pass


# -- visibility --------------------------------------------------------------

class NotInsidePolygon(KTransError):
    """A transmitter segment leaves the closure of the scene."""


# -- decomposition -----------------------------------------------------------

class NonRectangularFace(KTransError):
    """A slice face produced by the partition is not a rectangle."""


class CrossOutsidePixel(KTransError):
    """A cross point fell outside the interior of its pixel."""


# -- hitting -----------------------------------------------------------------

class InfeasibleInstance(KTransError):
    """Some crosses cannot be hit by any guard under the active filter."""

    def __init__(self, cross_ids: list[int]):
        super().__init__(f"uncoverable crosses: {cross_ids}")
        self.cross_ids = cross_ids


class CapExceeded(KTransError):
    """No hitting solution exists within the requested size cap."""


# -- reduction ---------------------------------------------------------------

class TooLarge(KTransError):
    """Input exceeds the documented desk-scale bound."""


class NoSuchEdge(KTransError):
    pass


class BarRepInvalid(KTransError):
    """A bar representation violates one of its invariants."""


class RoutingFailed(KTransError):
    """The connector walk could not produce a valid layout."""


class LemmaViolated(KTransError):
    """A structural property expected of generated instances failed."""

    def __init__(self, name: str, witness: str):
        super().__init__(f"{name}: {witness}")
        self.name = name
        self.witness = witness


# -- rendering ---------------------------------------------------------------

class MismatchedOverlay(KTransError):
    """An overlay does not belong to the scene being rendered."""
