"""Exception hierarchy shared across the library and the CLI exit codes."""


class OkvError(Exception):
    """Base class for all library errors."""


class ValidationError(OkvError, ValueError):
    """Bad input: malformed syntax, violated precondition, schema mismatch.

    Maps to CLI exit code 1.
    """


class ResourceCapError(OkvError):
    """A configured resource cap was exceeded; the result was not computed.

    Maps to CLI exit code 2.  Never raised silently: callers either get a
    complete exact answer or this error.
    """


class InvariantError(OkvError):
    """An internal consistency check failed; indicates a bug.

    Maps to CLI exit code 3.
    """
