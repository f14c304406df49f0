"""Error type shared by the whole toolkit."""


class LckitError(ValueError):
    """Raised on invalid inputs: bad vertices, malformed files, arity mismatches.

    Subclasses ValueError so plain ``except ValueError`` still works; the CLI
    maps it to exit code 2.
    """
