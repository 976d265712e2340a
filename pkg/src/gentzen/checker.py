"""Whole-tree validation with per-node feedback.

Checking folds the derivation bottom-up. Each subtree yields its parsed
conclusion, the assumptions it still depends on, the tags it discharged,
and whether it contains open premises; every node that can be judged gets
a status so one click colors the entire tree.
"""

from dataclasses import dataclass
from enum import Enum

from .formula import Formula, ParseError, parse_formula
from .prooftree import ProofNode, ProofTree
from .rules import Apply, Assume, check_step, parse_rule_annotation


class DependencyError(Exception):
    """Raised when assumption bookkeeping is inconsistent in a subtree."""


@dataclass(frozen=True)
class NodeStatus:
    kind: str  # "correct" | "error" | "pending"
    message: str | None = None


CORRECT = NodeStatus("correct")
PENDING = NodeStatus("pending")


def _error(message: str) -> NodeStatus:
    return NodeStatus("error", message)


@dataclass(frozen=True)
class AnnotatedNode:
    formula_text: str
    rule_text: str
    formula_status: NodeStatus
    rule_status: NodeStatus
    premises: tuple["AnnotatedNode", ...]

    @property
    def message(self) -> str | None:
        # formula problems first: nothing else is checkable without one
        if self.formula_status.kind == "error":
            return self.formula_status.message
        return self.rule_status.message


@dataclass(frozen=True)
class AnnotatedTree:
    goal_text: str
    root: AnnotatedNode


class ProofOutcome(Enum):
    COMPLETE = "complete"
    INCOMPLETE = "incomplete"
    HAS_ERRORS = "has-errors"


@dataclass(frozen=True)
class Dependencies:
    """What a subtree rests on: live assumptions plus an open-premise flag."""

    assumptions: tuple[tuple[str, Formula], ...]
    open: bool

    def as_dict(self) -> dict[str, Formula]:
        return dict(self.assumptions)


@dataclass
class _Info:
    formula: Formula | None
    formula_status: NodeStatus
    rule_status: NodeStatus
    deps: dict[str, Formula]
    discharged: frozenset[str]
    open: bool
    children: list["_Info"]
    dep_error: str | None = None


def _merge_deps(children: list[_Info]) -> tuple[dict[str, Formula], str | None]:
    merged: dict[str, Formula] = {}
    for child in children:
        for tag, f in child.deps.items():
            if tag in merged and merged[tag] != f:
                return merged, f"assumption '{tag}' names two different formulas"
            merged[tag] = f
    return merged, None


def _check_node(node: ProofNode) -> _Info:
    children = [_check_node(p) for p in node.premises]
    discharged_below = frozenset().union(*(c.discharged for c in children)) if children else frozenset()
    open_below = any(c.open for c in children)
    merged, conflict = _merge_deps(children)

    formula: Formula | None = None
    if not node.formula_text.strip():
        formula_status = PENDING
    else:
        try:
            formula = parse_formula(node.formula_text)
            formula_status = CORRECT
        except ParseError as e:
            formula_status = _error(str(e))

    def info(rule_status, deps, discharged=discharged_below, open_branch=open_below, dep_error=None):
        return _Info(formula, formula_status, rule_status, deps, discharged, open_branch, children, dep_error)

    if conflict is not None:
        return info(_error(conflict), merged, dep_error=conflict)

    if not node.rule_text.strip():
        # an open premise; for an inner node, a not-yet-justified step
        return info(PENDING, merged, open_branch=True)

    try:
        annotation = parse_rule_annotation(node.rule_text)
    except ParseError as e:
        return info(_error(str(e)), merged)

    if isinstance(annotation, Assume):
        if node.premises:
            return info(_error("an assumption cannot have premises"), merged)
        if formula is None:
            return info(CORRECT, {})
        return info(CORRECT, {annotation.tag: formula})

    if formula is None or any(c.formula is None for c in children):
        # a missing or unreadable formula blocks this step, but the fault
        # is reported where the text is, not here
        return info(PENDING, merged, open_branch=True)

    verdict = check_step(formula, [(c.formula, c.deps) for c in children], annotation)
    if not verdict.ok:
        return info(_error(verdict.message), merged)

    again = verdict.discharged & discharged_below
    if again:
        message = f"assumption '{sorted(again)[0]}' was already discharged below this step"
        return info(_error(message), merged, dep_error=message)

    deps = {tag: f for tag, f in merged.items() if tag not in verdict.discharged}
    return info(CORRECT, deps, discharged=discharged_below | verdict.discharged)


def dependencies(node: ProofNode) -> Dependencies:
    """Live assumptions of a subtree whose texts all parse.

    Raises DependencyError when one tag is bound to two formulas in the
    same scope or a tag is discharged twice on one root-path.
    """
    info = _check_node(node)

    def find_conflict(i: _Info):
        for child in i.children:
            find_conflict(child)
        if i.dep_error is not None:
            raise DependencyError(i.dep_error)

    find_conflict(info)
    return Dependencies(tuple(sorted(info.deps.items())), info.open)


def _annotate(node: ProofNode, info: _Info) -> AnnotatedNode:
    return AnnotatedNode(
        node.formula_text,
        node.rule_text,
        info.formula_status,
        info.rule_status,
        tuple(_annotate(p, c) for p, c in zip(node.premises, info.children)),
    )


def _scan(info: _Info, kind: str) -> bool:
    if info.formula_status.kind == kind or info.rule_status.kind == kind:
        return True
    return any(_scan(c, kind) for c in info.children)


def check_tree(tree: ProofTree) -> tuple[AnnotatedTree, ProofOutcome]:
    """Check every node and decide the overall outcome.

    All failures are expressed in node statuses; this never raises on any
    tree, however unfinished or wrong.
    """
    info = _check_node(tree.root)
    annotated = AnnotatedTree(tree.goal_text, _annotate(tree.root, info))
    if _scan(info, "error"):
        outcome = ProofOutcome.HAS_ERRORS
    elif _scan(info, "pending") or info.open or info.deps:
        # exercises are solved in an empty context: nothing may remain open
        # or undischarged
        outcome = ProofOutcome.INCOMPLETE
    else:
        outcome = ProofOutcome.COMPLETE
    return annotated, outcome


# --- Wire form ---------------------------------------------------------------

def encode_annotated_node(node: AnnotatedNode) -> dict:
    encoded = {
        "formula": node.formula_text,
        "rule": node.rule_text,
        "premises": [encode_annotated_node(p) for p in node.premises],
        "status": {
            "formula": node.formula_status.kind,
            "rule": node.rule_status.kind,
        },
    }
    if node.message is not None:
        encoded["message"] = node.message
    return encoded


def encode_annotated_tree(tree: AnnotatedTree) -> dict:
    return {"goal": tree.goal_text, "root": encode_annotated_node(tree.root)}
