from core.exceptions import TopologyError


class ComplexFileError(TopologyError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}" + (f", column {column}" if column is not None else "") + f": {message}"
        super().__init__(message)


class CorpusIntegrityError(TopologyError):
    pass
