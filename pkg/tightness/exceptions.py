from core.exceptions import TopologyError


class InconsistencyError(Exception):
    """Two independent tightness computations disagree."""


class HypothesisError(TopologyError):
    pass
