"""Exception types shared by the evaluation and checking layers."""


class DomainError(ValueError):
    """Argument lies outside the region where a method is allowed to run."""


class PoleError(DomainError):
    """Evaluation point sits on (or within 1e-12 of) a pole of the map."""


class ToleranceUnreachable(ArithmeticError):
    """Requested accuracy is below what double precision can certify.

    ``attainable`` is a tolerance that the same call is expected to meet.
    """

    def __init__(self, message, attainable):
        super().__init__(message)
        self.attainable = attainable
