"""Exception hierarchy shared by every module."""


class AgFuzzyError(Exception):
    pass


class UsageError(AgFuzzyError, ValueError):
    """Bad arguments: out-of-range indices, mismatched carriers or chains."""


class CapabilityError(AgFuzzyError):
    """The request is valid but exceeds a configured size bound."""


class PreconditionError(AgFuzzyError):
    """A stated hypothesis (e.g. a left identity) does not hold."""


class TableFormatError(AgFuzzyError, ValueError):
    def __init__(self, message, line, column=None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


class LawViolation(AgFuzzyError):
    """A construction found a counterexample to a law it must satisfy."""

    def __init__(self, message, witness):
        self.witness = witness
        super().__init__(f"{message}: {witness}")
