class EstimationError(ValueError):
    """Base class for invalid inputs to estimators, procedures and models."""
    pass


class EmptyInputError(EstimationError):
    pass


class OutOfRangeError(EstimationError):
    """A p-value lies outside [0, 1]."""

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__('p-value at index {} is outside [0, 1]: {}'.format(
            index, value))


class NotANumberError(EstimationError):
    """A p-value is NaN."""

    def __init__(self, index: int):
        self.index = index
        super().__init__('p-value at index {} is NaN'.format(index))


class TooSmallError(EstimationError):
    pass


class BadAlphaError(EstimationError):
    pass


class BadCValueError(EstimationError):
    pass


class EmptySearchRangeError(EstimationError):
    pass


class DegenerateLambdaError(EstimationError):
    pass


class BadLambdaError(EstimationError):
    pass


class BadGridError(EstimationError):
    pass


class BadBootstrapError(EstimationError):
    pass


class BadLevelError(EstimationError):
    pass


class BadPi0Error(EstimationError):
    pass


class LengthMismatchError(EstimationError):
    pass


class BadQuantileInputError(EstimationError):
    pass


class BadXError(EstimationError):
    pass


class BadTError(EstimationError):
    pass


class A2ViolatedError(EstimationError):
    """The objective h has no unique interior maximum."""

    def __init__(self, report):
        self.report = report
        super().__init__(
            'h has no unique interior maximum on [{}, 0.5]: {}'.format(
                report.t_grid[0], report.status))


class ParseError(EstimationError):
    """A line of a p-value file could not be parsed."""

    def __init__(self, line: int, text: str):
        self.line = line
        self.text = text
        super().__init__('Could not parse line {}: {!r}'.format(line, text))


class BadScenarioError(EstimationError):
    pass
