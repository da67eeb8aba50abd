"""Moving between normal-system derivations and PCP solutions of the reduced instances."""

from dataclasses import dataclass, field

from .normal_system import (
    Derivation,
    check_derivation,
    check_post_conditions,
    derive_bounded,
)
from .pcp import PcpSolution, format_solution, solve_bounded, verify_solution
from .reductions import COPY, END, NEW, POST, START, PairRole, build_s1, reduce_new
from .words import ell_d, format_word, reverse

BOTH_FOUND = "BothFound"
BOTH_ABSENT = "BothAbsentWithinBounds"
MISMATCH = "Mismatch"
OUTSIDE_SCOPE = "OutsideScope"


class MalformedSolutionError(Exception):
    """A valid PCP solution whose role sequence does not have the canonical shape.

    Raised loudly on purpose: for the new reduction every solution is
    expected to be Start, then blocks RuleAlpha(i) copies* RuleBeta(i), then
    End.  Anything else is a counterexample to that expectation.
    """

    def __init__(self, reason, indices, roles):
        self.reason = reason
        self.indices = tuple(indices)
        self.roles = tuple(roles)
        super().__init__(f"{reason}: solution={format_solution(self.indices)} "
                         f"roles={','.join(str(r) for r in self.roles)}")


@dataclass(frozen=True)
class SolutionParse:
    segments: tuple  # (pair_index, PairRole)
    recovered: str  # letter word whose desynchronized images both sides spell


def _require_method(art, method):
    if art.method != method:
        raise ValueError(f"operation needs a '{method}' artifact, got '{art.method}'")


def _require_solution(art, indices):
    if not verify_solution(art.instance, indices):
        raise ValueError(f"{format_solution(indices)} is not a solution of the instance")


def embed_derivation(art, d):
    """PCP solution of a new-method instance spelling out the derivation ``d``."""
    _require_method(art, NEW)
    if not check_derivation(art.source, d, art.target_word):
        raise ValueError("derivation does not reach the artifact's target word")
    if not d.steps:
        raise ValueError("zero-step derivations have no counterpart solution")
    copy = {y: art.index_of(COPY[y]) for y in "ab"}
    out = [art.index_of(START)]
    for i, x in d.steps:
        out.append(art.index_of(PairRole("RuleAlpha", i)))
        out.extend(copy[y] for y in x)
        out.append(art.index_of(PairRole("RuleBeta", i)))
    out.append(art.index_of(END))
    return PcpSolution(tuple(out))


def parse_new_solution(art, indices):
    _require_method(art, NEW)
    roles = [art.role(i) for i in indices]
    segments = tuple(zip(indices, roles))

    def bad(reason):
        return MalformedSolutionError(reason, indices, roles)

    if len(roles) < 2 or roles[0].kind != "Start" or roles[-1].kind != "End":
        raise bad("solution must start with Start and end with End")
    recovered = ["f", art.source.initial]
    open_rule = None
    for role in roles[1:-1]:
        if role.kind == "RuleAlpha":
            if open_rule is not None:
                raise bad(f"RuleAlpha({role.rule}) inside the block of rule {open_rule}")
            open_rule = role.rule
            recovered.append("c" * role.rule + "f")
        elif role.is_copy:
            if open_rule is None:
                raise bad(f"{role} outside a rule block")
            recovered.append(role.letter)
        elif role.kind == "RuleBeta":
            if open_rule != role.rule:
                raise bad(f"RuleBeta({role.rule}) closes the block of "
                          + (f"rule {open_rule}" if open_rule else "no rule"))
            open_rule = None
            recovered.append(art.source.rule(role.rule).beta)
        else:
            raise bad(f"{role} in the middle of the solution")
    if open_rule is not None:
        raise bad(f"block of rule {open_rule} is never closed")
    return SolutionParse(segments, "".join(recovered))


def extract_derivation(art, sol):
    """Derivation encoded by a solution of a new-method instance.

    Raises MalformedSolutionError when the solution is not in canonical
    shape or its blocks do not replay as a derivation.
    """
    indices = tuple(sol.indices if isinstance(sol, PcpSolution) else sol)
    _require_method(art, NEW)
    _require_solution(art, indices)
    parse = parse_new_solution(art, indices)
    steps = []
    x = None
    for _, role in parse.segments[1:-1]:
        if role.kind == "RuleAlpha":
            x = []
        elif role.is_copy:
            x.append(role.letter)
        elif role.kind == "RuleBeta":
            steps.append((role.rule, "".join(x)))
    d = Derivation(art.source.initial, tuple(steps))
    if not check_derivation(art.source, d, art.target_word):
        raise MalformedSolutionError("blocks do not replay as a derivation", indices,
                                     [r for _, r in parse.segments])
    top, _ = art.instance.sides(indices)
    assert top == "d" + ell_d(parse.recovered) + "dd"
    return d


def split_marker_blocks(art, sol):
    """Read a new-method solution allowing a block's ``c`` run to be paid by several RuleBeta pairs.

    Returns ``(rule, x, closing_rules)`` triples whose closing indices sum
    to ``rule``; replaying ``alpha_rule + x -> x + beta_c1 beta_c2 ...`` from
    the initial word reaches the target.  Raises MalformedSolutionError if
    the solution is not of that wider shape either.
    """
    indices = tuple(sol.indices if isinstance(sol, PcpSolution) else sol)
    _require_method(art, NEW)
    roles = [art.role(i) for i in indices]

    def bad(reason):
        return MalformedSolutionError(reason, indices, roles)

    if len(roles) < 2 or roles[0].kind != "Start" or roles[-1].kind != "End":
        raise bad("solution must start with Start and end with End")
    blocks = []
    cur = None
    for role in roles[1:-1]:
        if role.kind == "RuleAlpha" and (cur is None or sum(cur[2]) == cur[0]):
            cur = (role.rule, [], [])
            blocks.append(cur)
        elif role.is_copy and cur is not None and not cur[2]:
            cur[1].append(role.letter)
        elif role.kind == "RuleBeta" and cur is not None and sum(cur[2]) + role.rule <= cur[0]:
            cur[2].append(role.rule)
        else:
            raise bad(f"{role} does not fit a split-marker block")
    if cur is None or sum(cur[2]) != cur[0]:
        raise bad("last block's marker run is not paid off")
    out = [(j, "".join(x), tuple(c)) for j, x, c in blocks]
    word = art.source.initial
    for j, x, closing in out:
        if word != art.source.rule(j).alpha + x:
            raise bad(f"block of rule {j} does not match the current word {format_word(word)}")
        word = x + "".join(art.source.rule(c).beta for c in closing)
    if word != art.target_word:
        raise bad("split-marker replay does not reach the target")
    return out


def forward_bounds(art, d):
    """Search bounds under which the embedding of ``d`` is guaranteed to be found."""
    k = len(d.steps)
    xs = sum(len(x) for _, x in d.steps)
    body = 1 + len(art.source.initial) + sum(i + 1 + len(x) + len(art.source.rule(i).beta)
                                              for i, x in d.steps)
    return 2 + 2 * k + xs, 2 * body + 3


# -- Post's reduction ----------------------------------------------------

def post_rule_sequence(art, sol):
    """Rule indices of the auxiliary system spelled by the middle of a post-method solution."""
    _require_method(art, POST)
    indices = tuple(sol.indices if isinstance(sol, PcpSolution) else sol)
    roles = [art.role(i) for i in indices]
    if len(roles) < 2 or roles[0].kind != "Start" or roles[-1].kind != "End":
        raise MalformedSolutionError("solution must start with Start and end with End", indices, roles)
    t = art.source.t
    shift = {"a": t + 1, "b": t + 2, "c": t + 3}
    seq = []
    for role in roles[1:-1]:
        if role.kind == "RuleWhole":
            seq.append(role.rule)
        elif role.is_copy:
            seq.append(shift[role.letter])
        else:
            raise MalformedSolutionError(f"{role} in the middle of the solution", indices, roles)
    return seq


def verify_post_reduction(art, sol):
    """Check the reversed-word equation and its length condition behind a post-method solution."""
    indices = tuple(sol.indices if isinstance(sol, PcpSolution) else sol)
    _require_method(art, POST)
    _require_solution(art, indices)
    seq = post_rule_sequence(art, indices)
    if not seq:
        return art.source.initial == art.target_word
    return check_post_conditions(build_s1(art.source), reverse(art.target_word) + "c", seq)


def embed_s1_derivation(art, d1):
    """Post-method solution from a derivation of ``rev(u) c`` in the auxiliary system."""
    _require_method(art, POST)
    s1 = build_s1(art.source)
    if not check_derivation(s1, d1, reverse(art.target_word) + "c"):
        raise ValueError("derivation does not reach rev(u)c in the auxiliary system")
    t = art.source.t
    shift = "abc"
    out = [art.index_of(START)]
    for i, _ in d1.steps:
        role = PairRole("RuleWhole", i) if i <= t else COPY[shift[i - t - 1]]
        out.append(art.index_of(role))
    out.append(art.index_of(END))
    return PcpSolution(tuple(out))


# -- experiments ---------------------------------------------------------

@dataclass
class CaseReport:
    case_id: object
    system: object
    target: str
    verdict: str
    derivation: Derivation = None
    solution: PcpSolution = None
    extracted: Derivation = None
    pcp_bounds: tuple = None
    details: list = field(default_factory=list)

    def line(self):
        return f"case {self.case_id}: {self.verdict}" + "".join(" " + d for d in self.details)


def format_steps(d):
    if d is None:
        return "absent"
    return "".join(f"({i},{format_word(x)})" for i, x in d.steps) or "()"


def equivalence_experiment(sys, u, search_bounds=(6, 8), pcp_bounds=(20, 40), case_id=1):
    """Run derivation search and PCP search on the new reduction of ``(sys, u)`` and compare.

    When a derivation is found the PCP bounds are raised to at least
    :func:`forward_bounds`, so a forward failure is a real mismatch.  A PCP
    solution that extracts to a valid derivation counts as found even if
    the derivation lies beyond ``search_bounds``.
    """
    max_steps, max_len = search_bounds
    rep = CaseReport(case_id, sys, u, BOTH_ABSENT)
    d = derive_bounded(sys, u, max_steps, max_len)
    rep.derivation = d
    if u == sys.initial:
        rep.verdict = OUTSIDE_SCOPE
        rep.details = ["k=0 outside reduction scope", "derivation=()"]
        return rep
    art = reduce_new(sys, u)
    bounds = tuple(pcp_bounds)
    if d is not None:
        need = forward_bounds(art, d)
        bounds = (max(bounds[0], need[0]), max(bounds[1], need[1]))
    rep.pcp_bounds = bounds
    sol = solve_bounded(art.instance, *bounds)
    rep.solution = sol
    if sol is not None:
        try:
            rep.extracted = extract_derivation(art, sol)
        except MalformedSolutionError as exc:
            rep.verdict = MISMATCH
            rep.details = [f"malformed: {exc}", f"derivation={format_steps(d)}"]
            if d is not None:
                rep.details.append(f"embedded={embed_derivation(art, d)}")
            return rep
    if d is None and sol is None:
        rep.details = [f"bounds=steps<={max_steps},len<={max_len}/indices<={bounds[0]},overhang<={bounds[1]}"]
    elif sol is None:
        rep.verdict = MISMATCH
        rep.details = [f"forward: derivation={format_steps(d)} embedded={embed_derivation(art, d)} "
                       f"not found with bounds {bounds}"]
    else:
        rep.verdict = BOTH_FOUND
        rep.details = [f"k={len(rep.extracted)}", f"solution={sol}", f"derivation={format_steps(rep.extracted)}"]
        if d is None:
            rep.details.append("note=derivation recovered from solution beyond search bounds")
    return rep


def format_report(reports):
    return "".join(r.line() + "\n" for r in sorted(reports, key=lambda r: str(r.case_id)))
