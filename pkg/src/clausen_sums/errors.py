"""Exception hierarchy."""


class DomainError(ValueError):
    """A function was evaluated outside its domain (ln of a nonpositive value, a pole, ...)."""


class PoleError(DomainError):
    """The argument sits on a pole of psi or of a series term."""


class SingularCaseError(DomainError):
    """c = 1 in the Clausen family; the closed form has a removable 0/0 there."""


class AccuracyError(ArithmeticError):
    """A certified series evaluation could not reach its target within the term cap."""

    def __init__(self, message, best_bound=None):
        super().__init__(message)
        self.best_bound = best_bound


class ParseError(ValueError):
    """Malformed rational or expression text."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
            if text is not None:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)
