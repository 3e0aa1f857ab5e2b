class TopologyError(Exception):
    """Base class for every input or precondition error raised by the engine."""
