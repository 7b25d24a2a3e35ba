"""Exception types shared across the package.

Every error that a caller might want to branch on carries a stable
machine-readable ``code`` string; the CLI prints the code and exits 1.
Structural problems found by the validators are *returned* as strings
(prefixed with the same codes) rather than raised, so batch tools can
report all of them at once.
"""


class WebError(Exception):
    """Base class for domain errors."""

    code = "WEB_ERROR"

    def __init__(self, message=""):
        self.message = message
        super().__init__(f"{self.code}: {message}" if message else self.code)


class ParseError(WebError):
    code = "PARSE_ERROR"


class InvalidWeb(WebError):
    """Raised when an operation is handed a web that fails validation.

    ``problems`` holds the full list of validator messages.
    """

    code = "INVALID_WEB"

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class BoundaryMismatch(WebError):
    code = "BOUNDARY_MISMATCH"


class NotClosed(WebError):
    code = "NOT_CLOSED"


class WrongFaceKind(WebError):
    code = "WRONG_FACE_KIND"


class NotNonElliptic(WebError):
    code = "NOT_NON_ELLIPTIC"


class NotSuperficial(WebError):
    code = "NOT_SUPERFICIAL"


class IdenticalWebs(WebError):
    code = "IDENTICAL_WEBS"


class BudgetExceeded(WebError):
    """Enumeration ran out of vertex budget before the search tree closed.

    ``partial`` holds the (deduplicated) webs found so far; ``complete`` on
    the corresponding result object would have been False.
    """

    code = "BUDGET_EXCEEDED"

    def __init__(self, message="", partial=()):
        self.partial = list(partial)
        super().__init__(message)


class MalformedFoam(WebError):
    code = "MALFORMED_FOAM"


# Codes used inside validator message strings (returned, not raised).
NON_TRIVALENT = "NON_TRIVALENT"
MIXED_VERTEX_ORIENTATION = "MIXED_VERTEX_ORIENTATION"
NONPLANAR = "NONPLANAR"
BOUNDARY_SIGN_MISMATCH = "BOUNDARY_SIGN_MISMATCH"
MALFORMED_CONTAINMENT = "MALFORMED_CONTAINMENT"
