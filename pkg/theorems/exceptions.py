from core.exceptions import TopologyError
from tightness.exceptions import HypothesisError


class UnknownTheoremError(TopologyError):
    pass


__all__ = ["HypothesisError", "UnknownTheoremError"]
