"""Exception types shared across the package."""


class HypothesisError(ValueError):
    """An input was rejected because it fails a stated hypothesis.

    ``witness`` carries the offending elements (a pair, triple, ...) when
    one is available, so the failure can be reproduced.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug."""
