"""Reductions from the normal-system assertion problem to the PCP.

``reduce_post`` goes through the auxiliary system of reversed words with
cyclic shifts; ``reduce_new`` splits every rule into two marked pairs.
Both return a :class:`ReductionArtifact` recording each pair's role.
"""

import os
import re
from dataclasses import dataclass

from .normal_system import NormalRule, NormalSystem, ParseError, read_system
from .pcp import PcpInstance, format_instance, parse_instance
from .words import BASE, WordError, check_word, ell_d, format_word, parse_word, r_d, reverse

POST = "post"
NEW = "new"


@dataclass(frozen=True)
class PairRole:
    """``kind`` is one of Start, End, CopyA, CopyB, CopyC, RuleWhole, RuleAlpha, RuleBeta."""

    kind: str
    rule: int = None

    KINDS = ("Start", "End", "CopyA", "CopyB", "CopyC", "RuleWhole", "RuleAlpha", "RuleBeta")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown pair role {self.kind!r}")
        if (self.rule is not None) != self.kind.startswith("Rule"):
            raise ValueError(f"role {self.kind} {'needs' if self.rule is None else 'takes no'} rule index")

    def __str__(self):
        return self.kind if self.rule is None else f"{self.kind}({self.rule})"

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*([A-Za-z]+)(?:\((\d+)\))?\s*", text)
        if not m:
            raise ValueError(f"bad pair role {text!r}")
        return cls(m.group(1), int(m.group(2)) if m.group(2) else None)

    @property
    def is_copy(self):
        return self.kind.startswith("Copy")

    @property
    def letter(self):
        return self.kind[-1].lower() if self.is_copy else None


START = PairRole("Start")
END = PairRole("End")
COPY = {"a": PairRole("CopyA"), "b": PairRole("CopyB"), "c": PairRole("CopyC")}


@dataclass(frozen=True)
class ReductionArtifact:
    source: NormalSystem
    target_word: str
    method: str
    instance: PcpInstance
    roles: tuple  # roles[i - 1] is the role of pair i

    def role(self, i):
        return self.roles[i - 1]

    def index_of(self, role):
        return self.roles.index(role) + 1


def _check_source(sys, u):
    if sys.tier != "base":
        raise WordError("reductions need a source system over {a, b}")
    if not u:
        raise WordError("target word must be nonempty")
    check_word(u, BASE)


def build_s1(sys):
    """Auxiliary system over {a, b, c}: reversed rules marked by ``c`` plus three cyclic shifts."""
    if sys.tier != "base":
        raise WordError("build_s1 needs a source system over {a, b}")
    rules = [NormalRule(reverse(r.alpha) + "c", "c" + reverse(r.beta)) for r in sys.rules]
    rules += [NormalRule(y, y) for y in "abc"]
    return NormalSystem(reverse(sys.initial) + "c", tuple(rules), "extended")


def reduce_post(sys, u):
    _check_source(sys, u)
    pairs = [("d" + ell_d(reverse(sys.initial) + "c"), "dd"),
             ("dd", r_d(reverse(u) + "c") + "d")]
    roles = [START, END]
    for y in "abc":
        pairs.append((ell_d(y), r_d(y)))
        roles.append(COPY[y])
    for j, rule in enumerate(sys.rules, 1):
        pairs.append((ell_d("c" + reverse(rule.beta)), r_d(reverse(rule.alpha) + "c")))
        roles.append(PairRole("RuleWhole", j))
    return ReductionArtifact(sys, u, POST, PcpInstance(tuple(pairs)), tuple(roles))


def reduce_new(sys, u):
    _check_source(sys, u)
    pairs = [("d" + ell_d("f" + sys.initial), "dd"),
             ("dd", r_d("f" + u) + "d"),
             ("da", "ad"),
             ("db", "bd")]
    roles = [START, END, COPY["a"], COPY["b"]]
    for j, rule in enumerate(sys.rules, 1):
        pairs.append((ell_d("c" * j + "f"), r_d("f" + rule.alpha)))
        pairs.append((ell_d(rule.beta), r_d("c" * j)))
        roles += [PairRole("RuleAlpha", j), PairRole("RuleBeta", j)]
    return ReductionArtifact(sys, u, NEW, PcpInstance(tuple(pairs)), tuple(roles))


REDUCERS = {POST: reduce_post, NEW: reduce_new}


def size_report(sys):
    """Instance sizes ``(post, new)``: ``(t + 5, 2t + 4)``."""
    return sys.t + 5, 2 * sys.t + 4


# -- artifact files ------------------------------------------------------

def format_artifact(art, source_ref="<inline>"):
    lines = [f"# method: {art.method}",
             f"# source: {source_ref}",
             f"# target: {format_word(art.target_word)}"]
    lines += [f"# role {i}: {role}" for i, role in enumerate(art.roles, 1)]
    return "\n".join(lines) + "\n" + format_instance(art.instance)


_META = re.compile(r"#\s*(method|source|target|role\s+(\d+))\s*:\s*(.*?)\s*$")


def parse_artifact(text, source=None, base_dir=None):
    """Read an artifact file back.

    The source system is loaded from the ``# source:`` path (relative paths
    resolve against ``base_dir``) and the instance must match a fresh
    reduction of it.  Without a readable source, ``art.source`` is None.
    """
    inst = parse_instance(text, source)
    meta = {}
    roles = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        m = _META.match(line.strip())
        if not m:
            continue
        if m.group(2):
            try:
                roles[int(m.group(2))] = PairRole.parse(m.group(3))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, source) from None
        else:
            meta[m.group(1)] = (m.group(3), lineno)
    if "method" not in meta or meta["method"][0] not in REDUCERS:
        raise ParseError("artifact needs '# method: new|post'", meta.get("method", (0, None))[1], source)
    if sorted(roles) != list(range(1, inst.size + 1)):
        raise ParseError("role comments must cover every pair index exactly once", None, source)
    method = meta["method"][0]
    target = None
    if "target" in meta:
        try:
            target = parse_word(meta["target"][0])
        except WordError as exc:
            raise ParseError(str(exc), meta["target"][1], source) from None
    sys = None
    ref = meta.get("source", ("<inline>", None))[0]
    if ref and ref != "<inline>":
        path = ref if os.path.isabs(ref) or base_dir is None else os.path.join(base_dir, ref)
        if os.path.exists(path):
            sys = read_system(path)
    art = ReductionArtifact(sys, target, method, inst, tuple(roles[i] for i in sorted(roles)))
    if sys is not None and target is not None:
        fresh = REDUCERS[method](sys, target)
        if fresh.instance != inst or fresh.roles != art.roles:
            raise ParseError(f"instance does not match a fresh '{method}' reduction of {ref}", None, source)
    return art


def read_artifact(path):
    with open(path, encoding="utf-8") as fh:
        return parse_artifact(fh.read(), source=str(path), base_dir=os.path.dirname(os.path.abspath(path)))
