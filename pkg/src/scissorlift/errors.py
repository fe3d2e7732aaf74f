class ScissorLiftError(ValueError):
    pass


class InvalidSpecError(ScissorLiftError):
    pass


class DomainError(ScissorLiftError):
    pass


class UnsupportedPlacementError(ScissorLiftError):
    pass


class DegeneratePlacementError(ScissorLiftError):
    """The actuator would have (numerically) zero length."""


class GeometryConsistencyError(ScissorLiftError):
    """The squared length came out clearly negative; the formulas disagree with geometry."""


class SingularInRangeError(ScissorLiftError):
    def __init__(self, theta: float, message: str | None = None):
        self.theta = theta
        super().__init__(message or f"velocity ratio is singular at theta={theta!r} rad")


class StationaryLengthError(ScissorLiftError):
    pass


class UndefinedResidualError(ScissorLiftError):
    pass


class RefineSeedError(ScissorLiftError):
    pass
