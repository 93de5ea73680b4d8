"""Error hierarchy shared by all modules.

Each class maps to one CLI exit code so failures stay machine-readable.
"""


class CurvelabError(Exception):
    """Base class; generic failure, exit code 1."""

    exit_code = 1


class InputError(CurvelabError):
    """Bad user input: syntax, preconditions, missing table entries. Exit 2."""

    exit_code = 2


class CeilingError(CurvelabError):
    """A configurable ceiling was exceeded (jet truncation, degree). Exit 3."""

    exit_code = 3


class AdmissibilityError(CurvelabError):
    """Request outside the admissible range, or a scan found nothing. Exit 3."""

    exit_code = 3


class InconsistencyError(CurvelabError):
    """Two independent computations disagree. Always a loud failure. Exit 4."""

    exit_code = 4
