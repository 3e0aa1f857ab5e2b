from core.exceptions import TopologyError


class CapacityError(TopologyError):
    pass


class EmptyComplexError(TopologyError):
    pass


class MalformedFaceError(TopologyError):
    pass


class UnknownVertexError(TopologyError):
    pass


class DisjointnessError(TopologyError):
    pass


class StructureError(TopologyError):
    pass


class MalformedVectorError(TopologyError):
    pass
