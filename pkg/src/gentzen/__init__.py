"""Natural deduction proof checking for teaching logic.

The package provides the formula language and its parser, the rule set and
single-step checker, editable proof trees, whole-tree checking with
per-node feedback, a bundled exercise catalog, an event-sourced editing
log, usage analytics over exported logs, and a stateless HTTP service.
"""

from .checker import (
    AnnotatedNode,
    AnnotatedTree,
    Dependencies,
    DependencyError,
    ProofOutcome,
    check_tree,
    dependencies,
    encode_annotated_tree,
)
from .eventlog import (
    Event,
    EventLog,
    LogImportError,
    ReplayError,
    export_log,
    import_log,
    replay,
)
from .exercises import (
    Catalog,
    CatalogError,
    Exercise,
    bundled_catalog,
    get_exercise,
    load_catalog,
)
from .formula import (
    ANY_TERM,
    And,
    AnyTerm,
    Atom,
    CaptureError,
    Const,
    Exists,
    Falsity,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    ParseError,
    Term,
    Truth,
    Var,
    constants_of,
    free_variables,
    match_instance,
    parse_formula,
    print_formula,
    substitute,
)
from .prooftree import (
    AddPremise,
    DecodeError,
    DeleteLeaf,
    EditError,
    ProofNode,
    ProofTree,
    SetFormula,
    SetRule,
    apply_edit,
    decode_tree,
    dump_tree,
    encode_tree,
    goal_only,
)
from .rules import (
    Apply,
    Assume,
    RuleId,
    StepVerdict,
    check_step,
    parse_rule_annotation,
    print_rule_annotation,
    rule_catalog,
)

__all__ = [
    "ANY_TERM",
    "AddPremise",
    "And",
    "AnnotatedNode",
    "AnnotatedTree",
    "AnyTerm",
    "Apply",
    "Assume",
    "Atom",
    "CaptureError",
    "Catalog",
    "CatalogError",
    "Const",
    "DecodeError",
    "DeleteLeaf",
    "Dependencies",
    "DependencyError",
    "EditError",
    "Event",
    "EventLog",
    "Exercise",
    "Exists",
    "Falsity",
    "Forall",
    "Formula",
    "Iff",
    "Implies",
    "LogImportError",
    "Not",
    "Or",
    "ParseError",
    "ProofNode",
    "ProofOutcome",
    "ProofTree",
    "ReplayError",
    "RuleId",
    "SetFormula",
    "SetRule",
    "StepVerdict",
    "Term",
    "Truth",
    "Var",
    "apply_edit",
    "bundled_catalog",
    "check_step",
    "check_tree",
    "constants_of",
    "decode_tree",
    "dependencies",
    "dump_tree",
    "encode_annotated_tree",
    "encode_tree",
    "export_log",
    "free_variables",
    "get_exercise",
    "goal_only",
    "import_log",
    "load_catalog",
    "match_instance",
    "parse_formula",
    "parse_rule_annotation",
    "print_formula",
    "print_rule_annotation",
    "replay",
    "rule_catalog",
    "substitute",
]
