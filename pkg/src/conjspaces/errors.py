"""Shared exception types."""


class DegreeOverflowError(Exception):
    """A computation would leave the configured degree range."""


class ParseError(ValueError):
    """Input text rejected; carries the offending position when known."""

    def __init__(self, message: str, text: str | None = None, pos: int | None = None):
        if text is not None and pos is not None:
            snippet = text[pos:pos + 16] or "<end of input>"
            message = f"{message} (position {pos}, near {snippet!r})"
        super().__init__(message)
        self.text = text
        self.pos = pos


class ModelError(ValueError):
    """Space-model data rejected; pointer is a JSON-pointer-style path."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{pointer}: {message}" if pointer else message)
        self.pointer = pointer
