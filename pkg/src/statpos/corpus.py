"""Reading and writing the word/TAG corpus format.

One sentence per line, tokens separated by whitespace, each token is
word + '/' + TAG split at the *last* slash so words may themselves contain
slashes.  A tagged sentence is a list of (word, tag) tuples; a raw sentence
is a list of words.
"""

import io

from .errors import (
    CorpusLineError,
    EmptyLine,
    IoFailure,
    MalformedToken,
    UnknownTag,
)


def parse_tagged_line(line, tagset):
    """Parse one corpus line into a list of (word, tag) pairs."""
    tokens = line.split()
    if not tokens:
        raise EmptyLine(f"no tokens in {line!r}")
    sentence = []
    for i, token in enumerate(tokens):
        word, sep, tag = token.rpartition("/")
        if not sep:
            raise MalformedToken(line, i, f"no '/' in {token!r}")
        if not word:
            raise MalformedToken(line, i, f"empty word in {token!r}")
        if not tag:
            raise MalformedToken(line, i, f"empty tag in {token!r}")
        if tag not in tagset:
            raise UnknownTag(tag, line, i)
        sentence.append((word, tag))
    return sentence


def serialize_tagged_sentence(sentence):
    return " ".join(f"{word}/{tag}" for word, tag in sentence)


def load_corpus(source, tagset, strict=True):
    """Load tagged sentences from a path, text stream, or byte stream.

    Blank lines are ignored.  Returns (sentences, skipped): in strict mode
    the first bad line raises CorpusLineError (skipped is always 0); in
    lenient mode bad lines are skipped and counted.
    """
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        try:
            fh = open(source, encoding="utf-8")
        except OSError as e:
            raise IoFailure(str(e)) from e
        with fh:
            return _load_stream(fh, tagset, strict)
    if isinstance(source.read(0), bytes):
        source = io.TextIOWrapper(source, encoding="utf-8")
    return _load_stream(source, tagset, strict)


def _load_stream(fh, tagset, strict):
    sentences = []
    skipped = 0
    try:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip():
                continue
            try:
                sentences.append(parse_tagged_line(line, tagset))
            except (EmptyLine, MalformedToken, UnknownTag) as e:
                if strict:
                    raise CorpusLineError(lineno, e) from e
                skipped += 1
    except OSError as e:
        raise IoFailure(str(e)) from e
    return sentences, skipped


def save_corpus(sentences, sink):
    """Write tagged sentences, one per line.  Accepts a path or text stream."""
    if isinstance(sink, (str, bytes)) or hasattr(sink, "__fspath__"):
        with open(sink, "w", encoding="utf-8") as fh:
            for s in sentences:
                fh.write(serialize_tagged_sentence(s) + "\n")
    else:
        for s in sentences:
            sink.write(serialize_tagged_sentence(s) + "\n")


def tokenize_raw_line(line):
    """Split a pre-tokenized raw line on whitespace runs."""
    words = line.split()
    if not words:
        raise EmptyLine(f"no tokens in {line!r}")
    return words
