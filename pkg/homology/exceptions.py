from core.exceptions import TopologyError


class FieldError(TopologyError):
    pass


class PreconditionError(TopologyError):
    pass
