"""Exception types.  Messages are part of the contract; callers match on them."""


class GeometryError(ValueError):
    """Base class for every failure raised by this package."""


class DegenerateError(GeometryError):
    pass


class GeneralPositionError(GeometryError):
    def __init__(self, msg="insufficient general position"):
        super().__init__(msg)


class InconsistentError(GeometryError):
    """The correspondences are not induced by a single projectivity."""

    def __init__(self, msg="inconsistent correspondences"):
        super().__init__(msg)


class SingularError(GeometryError):
    def __init__(self, msg="singular matrix"):
        super().__init__(msg)


class OutsideChartError(GeometryError):
    def __init__(self, msg="outside chart"):
        super().__init__(msg)


class OnRemovedLineError(GeometryError):
    def __init__(self, msg="on the removed line"):
        super().__init__(msg)


class DensityError(GeometryError):
    def __init__(self, msg="insufficient density witnesses"):
        super().__init__(msg)


class CoverageError(GeometryError):
    """An arc reaches a point that no chart of the atlas contains."""

    def __init__(self, exit_point, msg="arc leaves atlas coverage"):
        super().__init__(f"{msg} at {exit_point!r}")
        self.exit_point = exit_point


class ParseError(GeometryError):
    pass
