"""Exception types shared across the package."""


class InvalidTreeError(ValueError):
    """Edge set does not describe a tree on {1..n}."""


class LimitExceededError(RuntimeError):
    """A factorial-size computation was requested beyond its configured limit.

    Raise the limit explicitly (``max_n=...`` or the CLI ``--max-n`` flag) to
    opt in to the larger computation.
    """

    def __init__(self, what: str, n: int, limit: int):
        super().__init__(
            f"{what}: n={n} exceeds the configured limit {limit}; "
            f"pass a larger max_n to run it anyway"
        )
        self.n = n
        self.limit = limit
