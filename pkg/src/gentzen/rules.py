"""The natural deduction rule catalog and single-step validation.

A rule annotation is either a bare assumption tag (one lowercase letter)
or a rule name followed by the tags it discharges, e.g. ``->I a`` or
``\\/E a b``. Discharge tags refer to assumptions in the premises'
dependency sets; where the rule admits it, an absent tag means vacuous
discharge.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .formula import (
    FALSITY,
    TRUTH,
    And,
    AnyTerm,
    Const,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    ParseError,
    constants_of,
    match_instance,
    print_formula,
)


class RuleId(Enum):
    AND_I = "/\\I"
    AND_E = "/\\E"
    OR_I = "\\/I"
    OR_E = "\\/E"
    IMP_I = "->I"
    IMP_E = "->E"
    IFF_I = "<->I"
    IFF_E = "<->E"
    NOT_I = "!I"
    NOT_E = "!E"
    FORALL_I = "forallI"
    FORALL_E = "forallE"
    EXISTS_I = "existsI"
    EXISTS_E = "existsE"
    FALSE_E = "FalseE"
    TRUE_I = "TrueI"


PREMISE_COUNT = {
    RuleId.AND_I: 2,
    RuleId.AND_E: 1,
    RuleId.OR_I: 1,
    RuleId.OR_E: 3,
    RuleId.IMP_I: 1,
    RuleId.IMP_E: 2,
    RuleId.IFF_I: 2,
    RuleId.IFF_E: 1,
    RuleId.NOT_I: 2,
    RuleId.NOT_E: 2,
    RuleId.FORALL_I: 1,
    RuleId.FORALL_E: 1,
    RuleId.EXISTS_I: 1,
    RuleId.EXISTS_E: 2,
    RuleId.FALSE_E: 1,
    RuleId.TRUE_I: 0,
}

# (min, max) discharge tags each rule accepts; a minimum of 0 means
# vacuous discharge is legal for that rule
TAG_ARITY = {
    rule: ((2, 2) if rule is RuleId.OR_E
           else (0, 1) if rule in (RuleId.IMP_I, RuleId.NOT_I, RuleId.NOT_E, RuleId.EXISTS_E)
           else (0, 0))
    for rule in RuleId
}


@dataclass(frozen=True)
class Assume:
    tag: str


@dataclass(frozen=True)
class Apply:
    rule: RuleId
    tags: tuple[str, ...] = ()


RuleAnnotation = Assume | Apply

# tag → formula of the undischarged assumptions a subderivation depends on
AssumptionSet = Mapping[str, Formula]


@dataclass(frozen=True)
class StepVerdict:
    ok: bool
    discharged: frozenset[str] = frozenset()
    message: str | None = None


def _ok(discharged=()) -> StepVerdict:
    return StepVerdict(True, frozenset(discharged))


def _fail(message: str) -> StepVerdict:
    return StepVerdict(False, message=message)


# --- Annotation syntax -----------------------------------------------------

_BY_NAME = {rule.value: rule for rule in RuleId}
_TAG_RE = re.compile(r"[a-z]")


def parse_rule_annotation(text: str) -> RuleAnnotation:
    """Parse a rule input box; raises ParseError with a position on failure."""
    tokens = [(m.group(), m.start()) for m in re.finditer(r"\S+", text)]
    if not tokens:
        raise ParseError(0, "empty rule")
    head, head_pos = tokens[0]
    if len(tokens) == 1 and _TAG_RE.fullmatch(head):
        return Assume(head)
    rule = _BY_NAME.get(head)
    if rule is None:
        raise ParseError(head_pos, f"unknown rule {head!r}")
    tags = []
    for tok, pos in tokens[1:]:
        if not _TAG_RE.fullmatch(tok):
            raise ParseError(pos, f"assumption tag must be a single lowercase letter, found {tok!r}")
        tags.append(tok)
    lo, hi = TAG_ARITY[rule]
    if len(tags) > hi:
        raise ParseError(tokens[1 + hi][1], f"{head} takes at most {hi} tag{'s' if hi != 1 else ''}")
    if len(tags) < lo:
        raise ParseError(len(text), f"{head} needs {lo} assumption tags")
    return Apply(rule, tuple(tags))


def print_rule_annotation(annotation: RuleAnnotation) -> str:
    if isinstance(annotation, Assume):
        return annotation.tag
    return " ".join((annotation.rule.value, *annotation.tags))


# --- Single-step checking ----------------------------------------------------

def check_step(
    conclusion: Formula,
    premises: Sequence[tuple[Formula, AssumptionSet]],
    annotation: Apply,
) -> StepVerdict:
    """Validate one rule application.

    Premises are (formula, dependency set) pairs in left-to-right order.
    Returns Ok with the tags actually discharged, or Fail with a message
    naming the violated constraint.
    """
    rule = annotation.rule
    want = PREMISE_COUNT[rule]
    if len(premises) != want:
        return _fail(f"{rule.value} expects {want} premise{'s' if want != 1 else ''}, got {len(premises)}")
    lo, hi = TAG_ARITY[rule]
    if not lo <= len(annotation.tags) <= hi:
        return _fail(f"{rule.value} takes between {lo} and {hi} assumption tags")
    formulas = [f for f, _ in premises]
    deps = [d for _, d in premises]
    return _CHECKERS[rule](conclusion, formulas, deps, annotation.tags)


def _undischargeable(tag: str, licensed: set[int], deps) -> StepVerdict | None:
    # A tag may only be removed from the dependency sets the rule
    # discharges from; its presence anywhere else makes the step unsound.
    for i, d in enumerate(deps):
        if i not in licensed and tag in d:
            return _fail(f"assumption '{tag}' cannot be discharged from premise {i + 1}")
    return None


def _tag_mismatch(tag: str, required: Formula, deps: AssumptionSet) -> StepVerdict | None:
    got = deps.get(tag)
    if got is not None and got != required:
        return _fail(
            f"assumption '{tag}' is {print_formula(got)}, "
            f"but the rule needs {print_formula(required)}"
        )
    return None


def _and_i(concl, fs, deps, tags):
    if not isinstance(concl, And):
        return _fail("conclusion of /\\I must be a conjunction")
    if fs[0] != concl.left:
        return _fail("first premise must be the left conjunct")
    if fs[1] != concl.right:
        return _fail("second premise must be the right conjunct")
    return _ok()


def _and_e(concl, fs, deps, tags):
    if not isinstance(fs[0], And):
        return _fail("premise of /\\E must be a conjunction")
    if concl != fs[0].left and concl != fs[0].right:
        return _fail("conclusion must be one of the premise's conjuncts")
    return _ok()


def _or_i(concl, fs, deps, tags):
    if not isinstance(concl, Or):
        return _fail("conclusion of \\/I must be a disjunction")
    if fs[0] != concl.left and fs[0] != concl.right:
        return _fail("premise must be one of the conclusion's disjuncts")
    return _ok()


def _or_e(concl, fs, deps, tags):
    if not isinstance(fs[0], Or):
        return _fail("first premise of \\/E must be a disjunction")
    if fs[1] != concl:
        return _fail("second premise must equal the conclusion")
    if fs[2] != concl:
        return _fail("third premise must equal the conclusion")
    a, b = tags
    licensed = {a: {1}, b: {2}} if a != b else {a: {1, 2}}
    for tag, allowed in licensed.items():
        bad = _undischargeable(tag, allowed, deps)
        if bad:
            return bad
    bad = _tag_mismatch(a, fs[0].left, deps[1]) or _tag_mismatch(b, fs[0].right, deps[2])
    if bad:
        return bad
    return _ok({t for t, allowed in licensed.items() if any(t in deps[i] for i in allowed)})


def _imp_i(concl, fs, deps, tags):
    if not isinstance(concl, Implies):
        return _fail("conclusion of ->I must be an implication")
    if fs[0] != concl.right:
        return _fail("premise must be the consequent of the conclusion")
    if not tags:
        return _ok()
    bad = _tag_mismatch(tags[0], concl.left, deps[0])
    if bad:
        return bad
    return _ok({tags[0]} if tags[0] in deps[0] else ())


def _imp_e(concl, fs, deps, tags):
    if not isinstance(fs[0], Implies):
        return _fail("first premise of ->E must be an implication")
    if fs[1] != fs[0].left:
        return _fail("second premise must be the antecedent of the first")
    if concl != fs[0].right:
        return _fail("conclusion must be the consequent of the first premise")
    return _ok()


def _iff_i(concl, fs, deps, tags):
    if not isinstance(concl, Iff):
        return _fail("conclusion of <->I must be a biconditional")
    if fs[0] != Implies(concl.left, concl.right):
        return _fail("first premise must be the left-to-right implication")
    if fs[1] != Implies(concl.right, concl.left):
        return _fail("second premise must be the right-to-left implication")
    return _ok()


def _iff_e(concl, fs, deps, tags):
    if not isinstance(fs[0], Iff):
        return _fail("premise of <->E must be a biconditional")
    if concl not in (Implies(fs[0].left, fs[0].right), Implies(fs[0].right, fs[0].left)):
        return _fail("conclusion must be one of the premise's two implications")
    return _ok()


def _contradiction(fs) -> StepVerdict | None:
    if fs[1] != Not(fs[0]):
        return _fail("second premise must be the negation of the first")
    return None


def _not_i(concl, fs, deps, tags):
    bad = _contradiction(fs)
    if bad:
        return bad
    if not isinstance(concl, Not):
        return _fail("conclusion of !I must be a negation")
    if not tags:
        return _ok()
    tag = tags[0]
    bad = _tag_mismatch(tag, concl.body, deps[0]) or _tag_mismatch(tag, concl.body, deps[1])
    if bad:
        return bad
    return _ok({tag} if tag in deps[0] or tag in deps[1] else ())


def _not_e(concl, fs, deps, tags):
    bad = _contradiction(fs)
    if bad:
        return bad
    if not tags:
        return _ok()
    tag = tags[0]
    required = Not(concl)
    bad = _tag_mismatch(tag, required, deps[0]) or _tag_mismatch(tag, required, deps[1])
    if bad:
        return bad
    return _ok({tag} if tag in deps[0] or tag in deps[1] else ())


def _forall_i(concl, fs, deps, tags):
    if not isinstance(concl, Forall):
        return _fail("conclusion of forallI must be universally quantified")
    witness = match_instance(concl.body, concl.var, fs[0])
    if witness is None:
        return _fail("premise is not an instance of the conclusion's body")
    if isinstance(witness, AnyTerm):
        return _ok()
    if not isinstance(witness, Const):
        return _fail(f"the generalized term '{witness}' must be a constant")
    c = witness.name
    if c in constants_of(concl):
        return _fail(f"eigenvariable violation: '{c}' occurs in the conclusion")
    for tag, f in deps[0].items():
        if c in constants_of(f):
            return _fail(f"eigenvariable violation: '{c}' occurs in assumption '{tag}'")
    return _ok()


def _forall_e(concl, fs, deps, tags):
    if not isinstance(fs[0], Forall):
        return _fail("premise of forallE must be universally quantified")
    if match_instance(fs[0].body, fs[0].var, concl) is None:
        return _fail("conclusion is not an instance of the premise's body")
    return _ok()


def _exists_i(concl, fs, deps, tags):
    if not isinstance(concl, Exists):
        return _fail("conclusion of existsI must be existentially quantified")
    if match_instance(concl.body, concl.var, fs[0]) is None:
        return _fail("premise is not an instance of the conclusion's body")
    return _ok()


def _exists_e(concl, fs, deps, tags):
    if not isinstance(fs[0], Exists):
        return _fail("first premise of existsE must be existentially quantified")
    if fs[1] != concl:
        return _fail("second premise must equal the conclusion")
    if not tags:
        return _ok()
    tag = tags[0]
    bad = _undischargeable(tag, {1}, deps)
    if bad:
        return bad
    hypothesis = deps[1].get(tag)
    if hypothesis is None:
        return _ok()
    witness = match_instance(fs[0].body, fs[0].var, hypothesis)
    if witness is None:
        return _fail(f"assumption '{tag}' is not an instance of the existential's body")
    if isinstance(witness, AnyTerm):
        return _ok({tag})
    if not isinstance(witness, Const):
        return _fail(f"the witness term '{witness}' must be a constant")
    c = witness.name
    if c in constants_of(concl):
        return _fail(f"eigenvariable violation: witness '{c}' occurs in the conclusion")
    if c in constants_of(fs[0]):
        return _fail(f"eigenvariable violation: witness '{c}' occurs in the existential premise")
    for t, f in deps[1].items():
        if t != tag and c in constants_of(f):
            return _fail(f"eigenvariable violation: witness '{c}' occurs in assumption '{t}'")
    return _ok({tag})


def _false_e(concl, fs, deps, tags):
    if fs[0] != FALSITY:
        return _fail("premise of FalseE must be False")
    return _ok()


def _true_i(concl, fs, deps, tags):
    if concl != TRUTH:
        return _fail("conclusion of TrueI must be True")
    return _ok()


_CHECKERS = {
    RuleId.AND_I: _and_i,
    RuleId.AND_E: _and_e,
    RuleId.OR_I: _or_i,
    RuleId.OR_E: _or_e,
    RuleId.IMP_I: _imp_i,
    RuleId.IMP_E: _imp_e,
    RuleId.IFF_I: _iff_i,
    RuleId.IFF_E: _iff_e,
    RuleId.NOT_I: _not_i,
    RuleId.NOT_E: _not_e,
    RuleId.FORALL_I: _forall_i,
    RuleId.FORALL_E: _forall_e,
    RuleId.EXISTS_I: _exists_i,
    RuleId.EXISTS_E: _exists_e,
    RuleId.FALSE_E: _false_e,
    RuleId.TRUE_I: _true_i,
}


# --- Catalog for display ------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    rule: RuleId
    name: str
    premises: int
    tag_arity: tuple[int, int]
    schema: str


_SCHEMAS = {
    RuleId.AND_I: "from φ and ψ infer φ /\\ ψ",
    RuleId.AND_E: "from φ /\\ ψ infer φ (or ψ)",
    RuleId.OR_I: "from φ infer φ \\/ ψ (or ψ \\/ φ) for any ψ",
    RuleId.OR_E: "from φ \\/ ψ and two derivations of χ, one from assumptions φ tagged a and one from assumptions ψ tagged b, infer χ, discharging a and b",
    RuleId.IMP_I: "from ψ infer φ -> ψ, discharging assumptions φ tagged a",
    RuleId.IMP_E: "from φ -> ψ and φ infer ψ",
    RuleId.IFF_I: "from φ -> ψ and ψ -> φ infer φ <-> ψ",
    RuleId.IFF_E: "from φ <-> ψ infer φ -> ψ (or ψ -> φ)",
    RuleId.NOT_I: "from ψ and !ψ infer !φ, discharging assumptions φ tagged a",
    RuleId.NOT_E: "from ψ and !ψ infer φ, discharging assumptions !φ tagged a",
    RuleId.FORALL_I: "from φ[c/x] infer forall x . φ, where the constant c occurs neither in the conclusion nor in any remaining assumption",
    RuleId.FORALL_E: "from forall x . φ infer φ[t/x] for any term t",
    RuleId.EXISTS_I: "from φ[t/x] infer exists x . φ",
    RuleId.EXISTS_E: "from exists x . φ and a derivation of χ from assumptions φ[c/x] tagged a, infer χ, discharging a; the constant c must occur in neither χ, the existential premise, nor any other assumption",
    RuleId.FALSE_E: "from False infer any φ",
    RuleId.TRUE_I: "infer True from no premises",
}


def rule_catalog() -> list[CatalogEntry]:
    """One entry per rule, in a stable order, for display in a rule panel."""
    return [
        CatalogEntry(rule, rule.value, PREMISE_COUNT[rule], TAG_ARITY[rule], _SCHEMAS[rule])
        for rule in RuleId
    ]
