from core.exceptions import TopologyError


class MoveError(TopologyError):
    pass
