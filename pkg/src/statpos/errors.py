"""Exception hierarchy shared across the toolkit."""


class StatposError(Exception):
    """Base class for all toolkit errors."""


class EmptyLine(StatposError):
    pass


class EmptySentence(StatposError):
    pass


class EmptyCorpus(StatposError):
    pass


class MalformedToken(StatposError):
    def __init__(self, line, index, reason):
        self.line = line
        self.index = index
        self.reason = reason
        super().__init__(f"malformed token at index {index} in {line!r}: {reason}")


class UnknownTag(StatposError):
    def __init__(self, tag, line=None, index=None):
        self.tag = tag
        self.line = line
        self.index = index
        msg = f"unknown tag {tag!r}"
        if line is not None:
            msg += f" at index {index} in {line!r}"
        super().__init__(msg)


class UnknownWord(StatposError):
    pass


class CorpusLineError(StatposError):
    """Wraps a parse error with its 1-based line number."""

    def __init__(self, lineno, cause):
        self.lineno = lineno
        self.cause = cause
        super().__init__(f"line {lineno}: {cause}")


class IoFailure(StatposError):
    pass


class FormatVersionMismatch(StatposError):
    pass


class CorruptSection(StatposError):
    pass


class LengthMismatch(StatposError):
    def __init__(self, index=None):
        self.index = index
        super().__init__(
            "length mismatch" if index is None else f"length mismatch at sentence {index}"
        )


class SentenceCountMismatch(StatposError):
    pass


class WordMismatch(StatposError):
    def __init__(self, index, position):
        self.index = index
        self.position = position
        super().__init__(f"word mismatch at sentence {index}, position {position}")


class InstanceTooLarge(StatposError):
    pass
