"""Editable derivation trees.

Nodes hold raw text: the formula line and the rule box are stored verbatim
and parsed only when a check runs, so any intermediate editing state is
representable. Edits address nodes by child-index paths and produce new
trees; the JSON codec below is the wire format.
"""

import json
from dataclasses import dataclass, replace


class EditError(Exception):
    """Raised when an edit cannot be applied to the given tree."""

    def __init__(self, path: tuple[int, ...], message: str):
        super().__init__(f"{message} (at path {list(path)})")
        self.path = path
        self.message = message


class DecodeError(Exception):
    """Raised on malformed tree JSON; carries the offending JSON path."""

    def __init__(self, json_path: str, message: str):
        super().__init__(f"{message} (at {json_path})")
        self.json_path = json_path
        self.message = message


@dataclass(frozen=True)
class ProofNode:
    formula_text: str = ""
    rule_text: str = ""
    premises: tuple["ProofNode", ...] = ()


@dataclass(frozen=True)
class ProofTree:
    goal_text: str
    root: ProofNode


# child indices from the root; () addresses the root itself
NodePath = tuple[int, ...]


@dataclass(frozen=True)
class AddPremise:
    at: NodePath


@dataclass(frozen=True)
class DeleteLeaf:
    at: NodePath


@dataclass(frozen=True)
class SetFormula:
    at: NodePath
    text: str


@dataclass(frozen=True)
class SetRule:
    at: NodePath
    text: str


EditOp = AddPremise | DeleteLeaf | SetFormula | SetRule


def goal_only(goal_text: str) -> ProofTree:
    """The starting tree of an exercise: just the goal line, no rule."""
    return ProofTree(goal_text, ProofNode(goal_text, "", ()))


def node_at(tree: ProofTree, path: NodePath) -> ProofNode:
    node = tree.root
    for depth, index in enumerate(path):
        if not 0 <= index < len(node.premises):
            raise EditError(tuple(path[: depth + 1]), "no node at this path")
        node = node.premises[index]
    return node


def tree_depth(tree: ProofTree) -> int:
    def depth(node: ProofNode) -> int:
        return 1 + max((depth(p) for p in node.premises), default=0)

    return depth(tree.root)


def _rebuild(node: ProofNode, path: NodePath, full: NodePath, fn) -> ProofNode:
    if not path:
        return fn(node)
    index = path[0]
    if not 0 <= index < len(node.premises):
        raise EditError(full, "no node at this path")
    child = _rebuild(node.premises[index], path[1:], full, fn)
    premises = node.premises[:index] + (child,) + node.premises[index + 1 :]
    return replace(node, premises=premises)


def apply_edit(tree: ProofTree, op: EditOp) -> ProofTree:
    """Apply one edit, returning a new tree; the input is never mutated."""
    at = tuple(op.at)
    if isinstance(op, AddPremise):
        fn = lambda n: replace(n, premises=n.premises + (ProofNode(),))
        return ProofTree(tree.goal_text, _rebuild(tree.root, at, at, fn))
    if isinstance(op, DeleteLeaf):
        if not at:
            raise EditError(at, "the goal line cannot be deleted")
        target = node_at(tree, at)
        if target.premises:
            raise EditError(at, "only leaves can be deleted")
        parent_path, index = at[:-1], at[-1]
        fn = lambda n: replace(n, premises=n.premises[:index] + n.premises[index + 1 :])
        return ProofTree(tree.goal_text, _rebuild(tree.root, parent_path, at, fn))
    if isinstance(op, SetFormula):
        if not at:
            raise EditError(at, "the goal formula is fixed by the exercise")
        fn = lambda n: replace(n, formula_text=op.text)
        return ProofTree(tree.goal_text, _rebuild(tree.root, at, at, fn))
    if isinstance(op, SetRule):
        fn = lambda n: replace(n, rule_text=op.text)
        return ProofTree(tree.goal_text, _rebuild(tree.root, at, at, fn))
    raise TypeError(f"unknown edit {op!r}")


# --- JSON codec -----------------------------------------------------------

def encode_node(node: ProofNode) -> dict:
    return {
        "formula": node.formula_text,
        "rule": node.rule_text,
        "premises": [encode_node(p) for p in node.premises],
    }


def encode_tree(tree: ProofTree) -> dict:
    return {"goal": tree.goal_text, "root": encode_node(tree.root)}


def _expect_str(value, path: str) -> str:
    if not isinstance(value, str):
        raise DecodeError(path, f"expected a string, got {type(value).__name__}")
    return value


def _require(value: dict, field: str, path: str):
    if field not in value:
        raise DecodeError(f"{path}/{field}" if path != "/" else f"/{field}", "missing required field")
    return value[field]


def _reject_extras(value: dict, allowed: set[str], path: str):
    extra = set(value) - allowed
    if extra:
        raise DecodeError(path, f"unexpected field {sorted(extra)[0]!r}")


def _decode_node(value, path: str) -> ProofNode:
    if not isinstance(value, dict):
        raise DecodeError(path, f"expected an object, got {type(value).__name__}")
    _reject_extras(value, {"formula", "rule", "premises"}, path)
    formula = _expect_str(_require(value, "formula", path), f"{path}/formula")
    rule = _expect_str(_require(value, "rule", path), f"{path}/rule")
    premises = _require(value, "premises", path)
    if not isinstance(premises, list):
        raise DecodeError(f"{path}/premises", "expected an array")
    children = tuple(
        _decode_node(child, f"{path}/premises/{i}") for i, child in enumerate(premises)
    )
    return ProofNode(formula, rule, children)


def decode_tree(value) -> ProofTree:
    """Decode the strict wire schema; raises DecodeError naming the JSON path."""
    if not isinstance(value, dict):
        raise DecodeError("/", f"expected an object, got {type(value).__name__}")
    _reject_extras(value, {"goal", "root"}, "/")
    goal = _expect_str(_require(value, "goal", "/"), "/goal")
    root = _decode_node(_require(value, "root", "/"), "/root")
    if root.formula_text != goal:
        raise DecodeError("/root/formula", "the root formula must equal the goal")
    return ProofTree(goal, root)


def dump_tree(tree: ProofTree) -> str:
    """Compact deterministic JSON text for golden files and wire bodies."""
    return json.dumps(encode_tree(tree), ensure_ascii=False, separators=(",", ":"))
