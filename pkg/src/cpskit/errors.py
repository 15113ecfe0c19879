"""Exception hierarchy for problem lookup, evaluation and verification."""


class CpskitError(Exception):
    """Base class for all errors raised by this package."""


class UnknownProblem(CpskitError):
    def __init__(self, name):
        super().__init__(f"unknown problem {name!r}")
        self.name = name


class DuplicateName(CpskitError):
    def __init__(self, name):
        super().__init__(f"problem {name!r} is already registered")
        self.name = name


class InvalidDimension(CpskitError):
    """Requested dimension violates the problem's dimension rule."""

    def __init__(self, name, n, rule):
        super().__init__(f"{name}: invalid dimension {n} ({rule})")
        self.name = name
        self.n = n
        self.rule = rule


class InvalidParameter(CpskitError):
    pass


class DimensionMismatch(CpskitError):
    pass


class StructureMismatch(CpskitError):
    """Structure built for a different problem or dimension."""


class ElementIndexOutOfRange(CpskitError):
    def __init__(self, name, i, n_elements):
        super().__init__(
            f"{name}: element index {i} outside 1..{n_elements}"
        )
        self.index = i


class ParameterMismatch(CpskitError):
    pass


class MissingGradient(CpskitError):
    pass


class MissingHessian(CpskitError):
    pass


class MalformedClassification(CpskitError):
    """Classification string violates the grammar; carries the offending position."""

    def __init__(self, text, position, reason):
        super().__init__(f"bad classification {text!r} at position {position}: {reason}")
        self.text = text
        self.position = position
        self.reason = reason


class BoundsUnsupported(CpskitError):
    """Solver accepts free and fixed variables only."""


class FixtureMissing(CpskitError):
    pass


class UnknownAction(CpskitError):
    def __init__(self, action):
        super().__init__(f"unsupported action {action!r}")
        self.action = action
