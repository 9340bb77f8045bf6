class InputError(ValueError):
    """Bad user input: unknown preset, non-dominant coweight, malformed K, ..."""


class PropertyViolation(RuntimeError):
    """A structural guarantee failed.

    Raised when a computation contradicts an invariant the library relies on
    (e.g. a rewrite step that must exist cannot be found).  These are never
    swallowed: a violation means either a bug or a genuinely false assumption,
    and both must surface loudly.
    """
