/**
 * DOM rendering of one proof tree.
 *
 * Premises sit above their conclusion, as on paper. Rendering is a pure
 * rebuild: the caller passes the current tree plus the annotations of
 * the last check (or null after an edit made them stale), and every
 * interaction goes back through the handlers.
 */

import { RULES } from "./rules.js";
import type {
  AnnotatedNode,
  AnnotatedTree,
  NodePath,
  ProofNode,
  ProofTree,
} from "./tree.js";

export interface ViewHandlers {
  setFormula(path: NodePath, text: string): void;
  setRule(path: NodePath, text: string): void;
  addPremise(path: NodePath): void;
  deleteLeaf(path: NodePath): void;
}

const RULE_LIST_ID = "rule-names";

/** The shared <datalist> completing rule boxes; created once per document. */
export function ensureRuleList(doc: Document): void {
  if (doc.getElementById(RULE_LIST_ID) !== null) {
    return;
  }
  const list = doc.createElement("datalist");
  list.id = RULE_LIST_ID;
  for (const rule of RULES) {
    const option = doc.createElement("option");
    option.value = rule.name;
    option.label = rule.hint;
    list.append(option);
  }
  doc.body.append(list);
}

function field(
  doc: Document,
  kind: "formula" | "rule",
  value: string,
  status: string | undefined,
  commit: (text: string) => void,
): HTMLInputElement {
  const input = doc.createElement("input");
  input.className = kind + (status === undefined ? "" : ` ${status}`);
  input.value = value;
  input.spellcheck = false;
  if (kind === "rule") {
    input.setAttribute("list", RULE_LIST_ID);
    input.placeholder = "rule";
  } else {
    input.placeholder = "formula";
  }
  input.addEventListener("change", () => commit(input.value));
  return input;
}

function button(
  doc: Document,
  className: string,
  label: string,
  onClick: () => void,
): HTMLButtonElement {
  const element = doc.createElement("button");
  element.type = "button";
  element.className = className;
  element.textContent = label;
  element.addEventListener("click", onClick);
  return element;
}

function renderNode(
  doc: Document,
  node: ProofNode,
  annotated: AnnotatedNode | null,
  path: NodePath,
  handlers: ViewHandlers,
): HTMLElement {
  const container = doc.createElement("div");
  container.className = "node";
  container.dataset["path"] = path.join(".");

  const premises = doc.createElement("div");
  premises.className = "premises";
  node.premises.forEach((premise, i) => {
    premises.append(
      renderNode(
        doc,
        premise,
        annotated?.premises[i] ?? null,
        [...path, i],
        handlers,
      ),
    );
  });
  container.append(premises);

  const line = doc.createElement("div");
  line.className = "line";
  const formula = field(
    doc,
    "formula",
    node.formula,
    annotated?.status.formula,
    (text) => handlers.setFormula(path, text),
  );
  if (path.length === 0) {
    // the goal line is fixed by the exercise
    formula.disabled = true;
  }
  const rule = field(doc, "rule", node.rule, annotated?.status.rule, (text) =>
    handlers.setRule(path, text),
  );
  line.append(formula, rule);
  line.append(
    button(doc, "add", "+ premise", () => handlers.addPremise(path)),
  );
  if (path.length > 0 && node.premises.length === 0) {
    line.append(button(doc, "del", "×", () => handlers.deleteLeaf(path)));
  }
  if (annotated?.message !== undefined) {
    const message = doc.createElement("span");
    message.className = "message";
    message.textContent = annotated.message;
    line.append(message);
  }
  container.append(line);
  return container;
}

export function renderTree(
  container: HTMLElement,
  tree: ProofTree,
  annotated: AnnotatedTree | null,
  handlers: ViewHandlers,
): void {
  const doc = container.ownerDocument;
  ensureRuleList(doc);
  container.replaceChildren(
    renderNode(doc, tree.root, annotated?.root ?? null, [], handlers),
  );
}
