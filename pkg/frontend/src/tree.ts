/**
 * Proof trees as the check service understands them.
 *
 * A node is a formula, the rule that justifies it, and the premises the
 * rule consumes. Everything is immutable: edits return new trees. The
 * plain object shape doubles as the wire form of POST /api/check, so
 * `JSON.stringify(tree)` is already a valid request tree.
 */

export interface ProofNode {
  readonly formula: string;
  readonly rule: string;
  readonly premises: readonly ProofNode[];
}

export interface ProofTree {
  readonly goal: string;
  readonly root: ProofNode;
}

/** Child indices from the root; the empty path addresses the root. */
export type NodePath = readonly number[];

export class EditError extends Error {
  constructor(readonly path: NodePath, message: string) {
    super(message);
    this.name = "EditError";
  }
}

/** The starting tree of an exercise: just the goal line, no rule. */
export function goalOnly(goal: string): ProofTree {
  return { goal, root: { formula: goal, rule: "", premises: [] } };
}

export function nodeAt(tree: ProofTree, path: NodePath): ProofNode {
  let node = tree.root;
  for (let depth = 0; depth < path.length; depth++) {
    const index = path[depth]!;
    const child = node.premises[index];
    if (child === undefined) {
      throw new EditError(path.slice(0, depth + 1), "no node at this path");
    }
    node = child;
  }
  return node;
}

function rebuild(
  node: ProofNode,
  path: NodePath,
  full: NodePath,
  fn: (node: ProofNode) => ProofNode,
): ProofNode {
  if (path.length === 0) {
    return fn(node);
  }
  const index = path[0]!;
  const target = node.premises[index];
  if (target === undefined) {
    throw new EditError(full, "no node at this path");
  }
  const child = rebuild(target, path.slice(1), full, fn);
  const premises = [...node.premises];
  premises[index] = child;
  return { formula: node.formula, rule: node.rule, premises };
}

export type TreeEdit =
  | { readonly op: "add-premise"; readonly path: NodePath }
  | { readonly op: "delete-leaf"; readonly path: NodePath }
  | { readonly op: "set-formula"; readonly path: NodePath; readonly value: string }
  | { readonly op: "set-rule"; readonly path: NodePath; readonly value: string };

/** Apply one edit, returning a new tree; the input is never mutated. */
export function applyEdit(tree: ProofTree, edit: TreeEdit): ProofTree {
  const at = edit.path;
  switch (edit.op) {
    case "add-premise": {
      const fn = (n: ProofNode): ProofNode => ({
        formula: n.formula,
        rule: n.rule,
        premises: [...n.premises, { formula: "", rule: "", premises: [] }],
      });
      return { goal: tree.goal, root: rebuild(tree.root, at, at, fn) };
    }
    case "delete-leaf": {
      if (at.length === 0) {
        throw new EditError(at, "the goal line cannot be deleted");
      }
      if (nodeAt(tree, at).premises.length > 0) {
        throw new EditError(at, "only leaves can be deleted");
      }
      const index = at[at.length - 1]!;
      const fn = (n: ProofNode): ProofNode => ({
        formula: n.formula,
        rule: n.rule,
        premises: n.premises.filter((_, i) => i !== index),
      });
      return { goal: tree.goal, root: rebuild(tree.root, at.slice(0, -1), at, fn) };
    }
    case "set-formula": {
      if (at.length === 0) {
        throw new EditError(at, "the goal formula is fixed by the exercise");
      }
      const fn = (n: ProofNode): ProofNode => ({
        formula: edit.value,
        rule: n.rule,
        premises: n.premises,
      });
      return { goal: tree.goal, root: rebuild(tree.root, at, at, fn) };
    }
    case "set-rule": {
      const fn = (n: ProofNode): ProofNode => ({
        formula: n.formula,
        rule: edit.value,
        premises: n.premises,
      });
      return { goal: tree.goal, root: rebuild(tree.root, at, at, fn) };
    }
  }
}

/** Wire form with a fixed key order, byte-stable under JSON.stringify. */
export function encodeTree(tree: ProofTree): ProofTree {
  const encodeNode = (node: ProofNode): ProofNode => ({
    formula: node.formula,
    rule: node.rule,
    premises: node.premises.map(encodeNode),
  });
  return { goal: tree.goal, root: encodeNode(tree.root) };
}

// --- Check responses -------------------------------------------------------

export interface NodeStatus {
  readonly formula: "correct" | "error" | "pending";
  readonly rule: "correct" | "error" | "pending";
}

export interface AnnotatedNode {
  readonly formula: string;
  readonly rule: string;
  readonly premises: readonly AnnotatedNode[];
  readonly status: NodeStatus;
  readonly message?: string;
}

export interface AnnotatedTree {
  readonly goal: string;
  readonly root: AnnotatedNode;
}

export type Outcome = "complete" | "incomplete" | "has-errors";

export interface CheckResponse {
  readonly trees: readonly AnnotatedTree[];
  readonly outcomes: readonly Outcome[];
}
