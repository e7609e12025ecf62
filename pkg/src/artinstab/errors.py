"""Exception hierarchy shared by all modules."""


class ArtinstabError(Exception):
    """Base class for every error raised by this package."""


class DiagramError(ArtinstabError, ValueError):
    pass


class DuplicateEdge(DiagramError):
    pass


class BadLabel(DiagramError):
    pass


class UnknownGenerator(DiagramError):
    pass


class ClassSizeExceeded(ArtinstabError):
    """An equivalence class grew past the configured cap."""


class ScaleExceeded(ArtinstabError):
    """A filtration piece has more cells than the configured cap."""


class MaximumNotUnique(ArtinstabError):
    """An end set had no unique right-divisibility maximum (internal bug)."""


class BoundarySquareNonzero(ArtinstabError):
    """A boundary composite was nonzero (face-map bug)."""


class CounterexampleFound(ArtinstabError):
    """A verifier found an instance violating the property it checks.

    ``context`` is a JSON-serialisable dict describing the instance.
    """

    def __init__(self, message, context=None):
        super().__init__(message)
        self.context = dict(context or {})
        self.context.setdefault("message", message)
