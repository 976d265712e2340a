/**
 * The rule palette: what the student can type into a rule box.
 *
 * Checking happens on the server; this table only drives the picker and
 * its hints. A bare lowercase letter is an assumption tag rather than a
 * named rule and is listed here as its own entry.
 */

export interface RuleInfo {
  readonly name: string;
  readonly premises: number;
  /** [min, max] discharge tags the rule accepts after its name. */
  readonly tags: readonly [number, number];
  readonly hint: string;
}

export const RULES: readonly RuleInfo[] = [
  { name: "/\\I", premises: 2, tags: [0, 0], hint: "from φ and ψ infer φ /\\ ψ" },
  { name: "/\\E", premises: 1, tags: [0, 0], hint: "from φ /\\ ψ infer either conjunct" },
  { name: "\\/I", premises: 1, tags: [0, 0], hint: "from either disjunct infer φ \\/ ψ" },
  { name: "\\/E", premises: 3, tags: [2, 2], hint: "from φ \\/ ψ and two derivations of χ infer χ, discharging one tag per case" },
  { name: "->I", premises: 1, tags: [0, 1], hint: "from ψ infer φ -> ψ, discharging assumptions φ" },
  { name: "->E", premises: 2, tags: [0, 0], hint: "from φ -> ψ and φ infer ψ" },
  { name: "<->I", premises: 2, tags: [0, 0], hint: "from both directions infer φ <-> ψ" },
  { name: "<->E", premises: 1, tags: [0, 0], hint: "from φ <-> ψ infer either direction" },
  { name: "!I", premises: 2, tags: [0, 1], hint: "from ψ and !ψ infer !φ, discharging assumptions φ" },
  { name: "!E", premises: 2, tags: [0, 1], hint: "from ψ and !ψ infer φ, discharging assumptions !φ" },
  { name: "forallI", premises: 1, tags: [0, 0], hint: "from φ with a fresh constant infer forall x . φ" },
  { name: "forallE", premises: 1, tags: [0, 0], hint: "from forall x . φ infer any instance" },
  { name: "existsI", premises: 1, tags: [0, 0], hint: "from an instance infer exists x . φ" },
  { name: "existsE", premises: 2, tags: [0, 1], hint: "from exists x . φ and a derivation from an instance infer its conclusion, discharging the instance" },
  { name: "FalseE", premises: 1, tags: [0, 0], hint: "from False infer anything" },
  { name: "TrueI", premises: 0, tags: [0, 0], hint: "True needs no premises" },
];

export const ASSUMPTION_HINT =
  "a bare lowercase letter assumes the line's formula under that tag";

export function ruleByName(name: string): RuleInfo | undefined {
  return RULES.find((rule) => rule.name === name);
}
