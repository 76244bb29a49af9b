"""Exception hierarchy shared by the geometry, solver and CLI layers."""


class GeometryError(ValueError):
    """Base class for every geometric input the library refuses."""


class NonFiniteCoordinate(GeometryError):
    pass


class DegeneratePolygon(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class DegenerateDirection(GeometryError):
    pass


class NoCaseSelected(GeometryError):
    """No case system produced a tilt parameter inside [0, 1]."""


class DomainError(GeometryError):
    pass
