"""Seeded families of small normal systems with targets of known status.

Reachable targets come with a shortest derivation of at most
``MAX_STEPS`` steps.  Unreachable targets are only emitted for systems
whose whole assertion set is finite and has been enumerated, so their
status does not depend on a search bound.
"""

import itertools
import random
from dataclasses import dataclass

from .normal_system import NormalSystem, derive_bounded, successors

MAX_STEPS = 5
MAX_WORD_LEN = 12
CLOSURE_LEN = 16
ABSENT_TARGET_LEN = 3


@dataclass(frozen=True)
class Case:
    case_id: str
    system: NormalSystem
    target: str
    derivation: object  # Derivation or None for certified-unreachable targets


def random_word(rng, lo, hi, alphabet="ab"):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(lo, hi)))


def random_system(rng, max_rules=3, max_rule_len=2, max_initial=3):
    t = rng.randint(1, max_rules)
    rules = tuple((random_word(rng, 1, max_rule_len), random_word(rng, 1, max_rule_len))
                  for _ in range(t))
    return NormalSystem(random_word(rng, 1, max_initial), rules)


def generate_systems(n=200, seed=1946):
    """``n`` distinct systems with t <= 3, |alpha|, |beta| <= 2 and |w| <= 3."""
    rng = random.Random(seed)
    seen = {}
    while len(seen) < n:
        sys = random_system(rng)
        seen.setdefault((sys.initial, sys.rules), sys)
    return list(seen.values())


def full_assertion_set(sys, max_len=CLOSURE_LEN):
    """The complete assertion set if every reachable word is at most ``max_len`` long, else None."""
    seen = {sys.initial}
    stack = [sys.initial]
    while stack:
        for _, nxt in successors(sys, stack.pop()):
            if len(nxt) > max_len:
                return None
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def reachable_targets(sys, max_steps=MAX_STEPS, max_len=MAX_WORD_LEN):
    """Targets other than the initial word, each with its shortest derivation, in BFS order."""
    from .normal_system import assertion_bounded

    words = assertion_bounded(sys, max_steps, max_len) - {sys.initial}
    out = []
    for u in sorted(words, key=lambda v: (len(v), v)):
        out.append((u, derive_bounded(sys, u, max_steps, max_len)))
    return out


def unreachable_targets(sys, max_len=ABSENT_TARGET_LEN):
    closure = full_assertion_set(sys)
    if closure is None:
        return []
    words = ("".join(p) for n in range(1, max_len + 1) for p in itertools.product("ab", repeat=n))
    return [u for u in words if u not in closure]


def generate_cases(n=200, seed=1946):
    cases = []
    for s, sys in enumerate(generate_systems(n, seed)):
        for u, d in reachable_targets(sys):
            cases.append(Case(f"{s:03d}/{u}", sys, u, d))
        for u in unreachable_targets(sys):
            cases.append(Case(f"{s:03d}/{u}", sys, u, None))
    return cases
