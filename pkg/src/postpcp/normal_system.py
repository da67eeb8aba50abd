"""Post normal systems: rules ``alpha X -> X beta`` applied to the front of a word."""

from collections import deque
from dataclasses import dataclass

from .words import BASE, EXTENDED, WordError, check_word, format_word, parse_word

TIERS = {"base": BASE, "extended": EXTENDED}


class ParseError(ValueError):
    """Malformed input file; carries the 1-based line number."""

    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


@dataclass(frozen=True)
class NormalRule:
    alpha: str
    beta: str

    def __str__(self):
        return f"{format_word(self.alpha)}X -> X{format_word(self.beta)}"


@dataclass(frozen=True)
class NormalSystem:
    initial: str
    rules: tuple
    tier: str = "base"

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(NormalRule(*r) if not isinstance(r, NormalRule) else r
                                                for r in self.rules))
        if self.tier not in TIERS:
            raise WordError(f"unknown alphabet tier {self.tier!r}")
        alphabet = TIERS[self.tier]
        if not self.initial:
            raise WordError("initial word must be nonempty")
        check_word(self.initial, alphabet)
        if not self.rules:
            raise WordError("a normal system needs at least one rule")
        for j, rule in enumerate(self.rules, 1):
            if not rule.alpha or not rule.beta:
                raise WordError(f"rule {j}: alpha and beta must be nonempty")
            check_word(rule.alpha, alphabet)
            check_word(rule.beta, alphabet)

    @property
    def t(self):
        return len(self.rules)

    def rule(self, j):
        """1-based rule lookup."""
        if not 1 <= j <= len(self.rules):
            raise IndexError(f"rule index {j} outside 1..{len(self.rules)}")
        return self.rules[j - 1]


@dataclass(frozen=True)
class Derivation:
    """``start`` rewritten by ``steps``, each a ``(rule_index, remainder)`` pair.

    Step ``(i, x)`` rewrites ``alpha_i + x`` into ``x + beta_i``.
    """

    start: str
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple((int(i), x) for i, x in self.steps))

    def __len__(self):
        return len(self.steps)

    def words(self, sys):
        """Replay against ``sys``; returns the word sequence or None if a step is invalid."""
        out = [self.start]
        cur = self.start
        for i, x in self.steps:
            if not 1 <= i <= sys.t:
                return None
            rule = sys.rules[i - 1]
            if cur != rule.alpha + x:
                return None
            cur = x + rule.beta
            out.append(cur)
        return out

    def target(self, sys):
        ws = self.words(sys)
        return None if ws is None else ws[-1]


def successors(sys, v):
    out = []
    for j, rule in enumerate(sys.rules, 1):
        if v.startswith(rule.alpha):
            out.append((j, v[len(rule.alpha):] + rule.beta))
    return out


def check_derivation(sys, d, target):
    ws = d.words(sys)
    return ws is not None and ws[-1] == target


def _bfs(sys, max_steps, max_word_len, stop=None):
    # word -> (parent word, rule index, remainder); FIFO in rule-index order
    parents = {sys.initial: None}
    frontier = deque([(sys.initial, 0)])
    if stop is not None and sys.initial == stop:
        return parents
    while frontier:
        v, depth = frontier.popleft()
        if depth >= max_steps:
            continue
        for j, nxt in successors(sys, v):
            if len(nxt) > max_word_len or nxt in parents:
                continue
            parents[nxt] = (v, j, v[len(sys.rules[j - 1].alpha):])
            if nxt == stop:
                return parents
            frontier.append((nxt, depth + 1))
    return parents


def derive_bounded(sys, target, max_steps, max_word_len):
    """Shortest derivation of ``target`` from the initial word within the bounds.

    None means only "not reachable within these bounds"; membership in the
    assertion set is undecidable in general.
    """
    parents = _bfs(sys, max_steps, max_word_len, stop=target)
    if target not in parents:
        return None
    steps = []
    v = target
    while parents[v] is not None:
        v, j, x = parents[v]
        steps.append((j, x))
    return Derivation(sys.initial, tuple(reversed(steps)))


def assertion_bounded(sys, max_steps, max_word_len):
    return set(_bfs(sys, max_steps, max_word_len))


def _concat_rules(sys, indices, side):
    return "".join(getattr(sys.rule(i), side) for i in indices)


def check_post_conditions(sys, target, indices):
    """Equation-and-length test that ``indices`` drive the initial word to ``target``.

    Holds iff ``w + beta_i1 ... beta_ik == alpha_i1 ... alpha_ik + target`` and,
    for every j, ``|w beta_i1 .. beta_i(j-1)| >= |alpha_i1 .. alpha_ij|``.
    """
    indices = list(indices)
    if not indices:
        raise ValueError("index sequence must be nonempty")
    if sys.initial + _concat_rules(sys, indices, "beta") != _concat_rules(sys, indices, "alpha") + target:
        return False
    top = len(sys.initial)
    bottom = 0
    for i in indices:
        rule = sys.rule(i)
        bottom += len(rule.alpha)
        if top < bottom:
            return False
        top += len(rule.beta)
    return True


def derivation_from_indices(sys, target, indices):
    if not check_post_conditions(sys, target, indices):
        return None
    steps = []
    cur = sys.initial
    for i in indices:
        rule = sys.rule(i)
        x = cur[len(rule.alpha):]
        steps.append((i, x))
        cur = x + rule.beta
    return Derivation(sys.initial, tuple(steps))


def indices_from_derivation(d):
    return [i for i, _ in d.steps]


# -- text format ---------------------------------------------------------

def parse_system(text, source=None):
    """Parse ``initial: w`` / ``rule: alpha -> beta`` lines.

    The tier is ``extended`` if any word uses ``c``, otherwise ``base``.
    """
    initial = None
    rules = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'initial:' or 'rule:', got {line!r}", lineno, source)
        key = key.strip()
        try:
            if key == "initial":
                if initial is not None:
                    raise ParseError("duplicate 'initial:' line", lineno, source)
                initial = parse_word(value, EXTENDED)
                if not initial:
                    raise ParseError("initial word must be nonempty", lineno, source)
            elif key == "rule":
                lhs, arrow, rhs = value.partition("->")
                if not arrow:
                    raise ParseError("rule needs the form '<alpha> -> <beta>'", lineno, source)
                rule = NormalRule(parse_word(lhs, EXTENDED), parse_word(rhs, EXTENDED))
                if not rule.alpha or not rule.beta:
                    raise ParseError("alpha and beta must be nonempty", lineno, source)
                rules.append(rule)
            else:
                raise ParseError(f"unknown key {key!r}", lineno, source)
        except WordError as exc:
            raise ParseError(str(exc), lineno, source) from None
    if initial is None:
        raise ParseError("missing 'initial:' line", None, source)
    words = [initial] + [r.alpha + r.beta for r in rules]
    tier = "extended" if any("c" in v for v in words) else "base"
    try:
        return NormalSystem(initial, tuple(rules), tier)
    except WordError as exc:
        raise ParseError(str(exc), None, source) from None


def format_system(sys):
    lines = [f"initial: {format_word(sys.initial)}"]
    lines += [f"rule: {format_word(r.alpha)} -> {format_word(r.beta)}" for r in sys.rules]
    return "\n".join(lines) + "\n"


def read_system(path):
    with open(path, encoding="utf-8") as fh:
        return parse_system(fh.read(), source=str(path))
