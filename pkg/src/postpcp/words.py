"""Words over the five-letter universe, reversal, the desynchronizing
morphisms and the binary encoding of indexed alphabets.

Words are plain ``str`` values.  Only the letters ``a b c d f`` occur;
``c``, ``d`` and ``f`` are markers used by the reductions.
"""

from dataclasses import dataclass

LETTERS = "abcdf"
BASE = "ab"
EXTENDED = "abc"
MARKER = "d"
EMPTY_TOKEN = "()"


class WordError(ValueError):
    pass


def check_word(v, alphabet=LETTERS):
    bad = set(v) - set(alphabet)
    if bad:
        raise WordError(f"word {v!r} uses letters {''.join(sorted(bad))!r} outside {alphabet!r}")
    return v


def parse_word(text, alphabet=LETTERS):
    """Inverse of :func:`format_word`; ``"()"`` is the empty word."""
    text = text.strip()
    if text == EMPTY_TOKEN:
        return ""
    if not text:
        raise WordError("empty word must be written as '()'")
    return check_word(text, alphabet)


def format_word(v):
    return v if v else EMPTY_TOKEN


def reverse(v):
    return v[::-1]


def _no_marker(v):
    check_word(v)
    if MARKER in v:
        raise WordError(f"word {v!r} already contains the marker {MARKER!r}")


def ell_d(v):
    """Put a ``d`` before every letter: ``abc -> dadbdc``."""
    _no_marker(v)
    return "".join(MARKER + x for x in v)


def r_d(v):
    """Put a ``d`` after every letter: ``abc -> adbdcd``."""
    _no_marker(v)
    return "".join(x + MARKER for x in v)


@dataclass(frozen=True)
class IndexedWord:
    """A word over ``a_1 .. a_k``; letters are stored as their indices."""

    letters: tuple
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise WordError("indexed alphabet needs k >= 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for i in self.letters:
            if not 1 <= i <= self.k:
                raise WordError(f"letter a_{i} outside a_1..a_{self.k}")

    def __add__(self, other):
        if not isinstance(other, IndexedWord):
            return NotImplemented
        return IndexedWord(self.letters + other.letters, max(self.k, other.k))

    def __len__(self):
        return len(self.letters)


def phi_encode(v):
    """Binary image of an indexed word, ``a_i -> a^i b``."""
    return "".join("a" * i + "b" for i in v.letters)


def phi_encode_instance(inst):
    from .pcp import PcpInstance

    return PcpInstance([(phi_encode(u), phi_encode(v)) for u, v in inst.pairs])
