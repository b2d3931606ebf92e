"""Exception types shared across the package."""

from __future__ import annotations


class GridRamError(Exception):
    """Base class for every error raised by gridram."""


class NotGoodError(GridRamError):
    """A vertical colouring cannot be extended: some agreement graph is not r-colourable."""

    def __init__(self, failing_pair: tuple[int, int]):
        self.failing_pair = failing_pair
        super().__init__(
            f"agreement graph of columns {failing_pair} is not r-colourable"
        )


class NotColorableError(GridRamError):
    """A proper colouring required by a stabilisation step does not exist.

    `column` is the stabilised column index i whose agreement graph against
    the target column failed; `against` names the target column when known.
    """

    def __init__(self, column: int, against: int | None = None):
        self.column = column
        self.against = against
        where = f" against column {against}" if against is not None else ""
        super().__init__(f"agreement graph of column {column}{where} is not r-colourable")


class TooLargeError(GridRamError):
    """The requested computation is outside the exact-search envelope."""


class PreconditionUnmetError(GridRamError):
    """A pigeonhole argument is inapplicable at the given sizes (it makes no claim there)."""


class CertificateError(GridRamError):
    """A certificate file failed to parse; `line` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class FisherHypothesisError(GridRamError):
    """The family does not satisfy the hypothesis of the requested set-family check."""


class InternalContradictionError(GridRamError):
    """A result contradicts an unconditional theorem; the input data must be corrupt."""
