"""Exception hierarchy shared by every module."""


class QsymbError(Exception):
    pass


class MalformedInput(QsymbError, ValueError):
    """An object fails the membership test its operation requires."""


class SizeLimit(QsymbError):
    """An enumeration would exceed the configured cap."""


class AlphabetMismatch(QsymbError, ValueError):
    pass


class NotSymmetric(QsymbError):
    pass


class NotQuasisymmetric(QsymbError):
    pass


class NotQuasisymmetricB(NotQuasisymmetric):
    pass


class InvalidParams(QsymbError, ValueError):
    pass
