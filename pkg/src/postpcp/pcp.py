"""PCP instances, solution checking and bounded search over overhang states."""

from dataclasses import dataclass
from functools import reduce
import operator

from .normal_system import ParseError
from .words import WordError, format_word, parse_word

TOP = "top"
BOTTOM = "bottom"


@dataclass(frozen=True)
class PcpInstance:
    """Indexed word pairs; pair ``i`` (1-based) is ``pairs[i - 1]``.

    Words are ``str`` or any other type supporting ``+`` and equality
    (e.g. :class:`postpcp.words.IndexedWord`).
    """

    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((u, v) for u, v in self.pairs))
        if not self.pairs:
            raise ValueError("a PCP instance needs at least one pair")

    @property
    def size(self):
        return len(self.pairs)

    def pair(self, i):
        if not 1 <= i <= len(self.pairs):
            raise IndexError(f"pair index {i} outside 1..{len(self.pairs)}")
        return self.pairs[i - 1]

    def sides(self, indices):
        """Top and bottom concatenations for a nonempty index sequence."""
        chosen = [self.pair(i) for i in indices]
        return (reduce(operator.add, (u for u, _ in chosen)),
                reduce(operator.add, (v for _, v in chosen)))


@dataclass(frozen=True)
class PcpSolution:
    indices: tuple

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if not self.indices:
            raise ValueError("a PCP solution is a nonempty index sequence")

    def __str__(self):
        return format_solution(self.indices)


@dataclass(frozen=True)
class OverhangState:
    """Unmatched suffix of the longer side; both sides agree on everything before it."""

    leader: str
    residual: str

    def extend(self, u, v):
        """Append a pair; None if the sides stop agreeing."""
        top = self.residual + u if self.leader == TOP else u
        bottom = self.residual + v if self.leader == BOTTOM else v
        if top.startswith(bottom):
            return OverhangState(TOP, top[len(bottom):])
        if bottom.startswith(top):
            return OverhangState(BOTTOM, bottom[len(top):])
        return None

    @property
    def matched(self):
        return not self.residual


EMPTY_STATE = OverhangState(TOP, "")


def verify_solution(inst, indices):
    indices = list(indices)
    for i in indices:
        inst.pair(i)
    if not indices:
        return False
    top, bottom = inst.sides(indices)
    return top == bottom


def solve_bounded(inst, max_indices, max_overhang):
    """Shortest solution within the bounds, lexicographically least among the shortest.

    Breadth-first over overhang states with first-visit memoization. Two
    prefixes leaving the same overhang have the same continuations, so the
    memo loses no solutions. Returns None if nothing is found within bounds.
    """
    if max_indices < 1:
        raise ValueError("max_indices must be >= 1")
    parent = {}
    level = [EMPTY_STATE]
    for _ in range(max_indices):
        nxt_level = []
        for state in level:
            for i, (u, v) in enumerate(inst.pairs, 1):
                new = state.extend(u, v)
                if new is None or len(new.residual) > max_overhang:
                    continue
                if new.matched:
                    path = [i]
                    s = state
                    while s is not EMPTY_STATE:
                        s, j = parent[s]
                        path.append(j)
                    return PcpSolution(tuple(reversed(path)))
                if new in parent:
                    continue
                parent[new] = (state, i)
                nxt_level.append(new)
        if not nxt_level:
            break
        level = nxt_level
    return None


def enumerate_solutions(inst, max_indices):
    """All solutions of length <= max_indices in lexicographic order (no memoization)."""
    if max_indices < 1:
        raise ValueError("max_indices must be >= 1")
    found = []
    path = []

    def visit(state):
        for i, (u, v) in enumerate(inst.pairs, 1):
            new = state.extend(u, v)
            if new is None:
                continue
            path.append(i)
            if new.matched:
                found.append(PcpSolution(tuple(path)))
            if len(path) < max_indices:
                visit(new)
            path.pop()

    visit(EMPTY_STATE)
    return found


# -- text format ---------------------------------------------------------

def parse_instance(text, source=None):
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep or key.strip() != "pair":
            raise ParseError(f"expected 'pair: <u> , <v>', got {line!r}", lineno, source)
        u, comma, v = value.partition(",")
        if not comma:
            raise ParseError("pair needs two words separated by ','", lineno, source)
        try:
            pairs.append((parse_word(u), parse_word(v)))
        except WordError as exc:
            raise ParseError(str(exc), lineno, source) from None
    if not pairs:
        raise ParseError("instance has no pairs", None, source)
    return PcpInstance(tuple(pairs))


def format_instance(inst):
    return "".join(f"pair: {format_word(u)} , {format_word(v)}\n" for u, v in inst.pairs)


def read_instance(path):
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read(), source=str(path))


def parse_solution(text):
    try:
        indices = tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise ParseError(f"solution must be comma-separated indices, got {text!r}") from None
    return PcpSolution(indices)


def format_solution(indices):
    return ",".join(str(i) for i in indices)
