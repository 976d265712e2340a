import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gentzen.formula import (
    FALSITY,
    TRUTH,
    And,
    Atom,
    Const,
    Exists,
    Forall,
    Iff,
    Implies,
    Not,
    Or,
    ParseError,
    Var,
    free_variables,
    parse_formula,
    substitute,
)
from gentzen.rules import (
    PREMISE_COUNT,
    TAG_ARITY,
    Apply,
    Assume,
    RuleId,
    check_step,
    parse_rule_annotation,
    print_rule_annotation,
    rule_catalog,
)

from .gen import random_prop_formula
from .oracles import brute_match, entails

P, Q, R = Atom("P"), Atom("Q"), Atom("R")


# --- Annotation syntax -------------------------------------------------------

def test_parse_annotation_goldens():
    assert parse_rule_annotation("a") == Assume("a")
    assert parse_rule_annotation("  z ") == Assume("z")
    assert parse_rule_annotation("->I a") == Apply(RuleId.IMP_I, ("a",))
    assert parse_rule_annotation("->I") == Apply(RuleId.IMP_I)
    assert parse_rule_annotation("\\/E a b") == Apply(RuleId.OR_E, ("a", "b"))
    assert parse_rule_annotation("/\\I") == Apply(RuleId.AND_I)
    assert parse_rule_annotation("forallE") == Apply(RuleId.FORALL_E)
    assert parse_rule_annotation("TrueI") == Apply(RuleId.TRUE_I)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "   ",
        "frobnicate",
        "ab",
        "->I a b",
        "->I ab",
        "\\/E a",
        "\\/E a b c",
        "/\\I a",
        "forallI x y",
        "a b",
        "->i",
    ],
)
def test_malformed_annotations_raise(text):
    with pytest.raises(ParseError):
        parse_rule_annotation(text)


def test_annotation_error_positions():
    with pytest.raises(ParseError) as e:
        parse_rule_annotation("frobnicate")
    assert e.value.position == 0
    with pytest.raises(ParseError) as e:
        parse_rule_annotation("->I a b")
    assert e.value.position == 6
    with pytest.raises(ParseError) as e:
        parse_rule_annotation("->I aa")
    assert e.value.position == 4


def test_annotation_round_trip():
    samples = [
        Assume("a"),
        Apply(RuleId.AND_E),
        Apply(RuleId.IMP_I, ("b",)),
        Apply(RuleId.OR_E, ("a", "c")),
        Apply(RuleId.EXISTS_E, ("d",)),
    ]
    for ann in samples:
        assert parse_rule_annotation(print_rule_annotation(ann)) == ann


# --- Catalog -------------------------------------------------------------------

def test_catalog_shape():
    catalog = rule_catalog()
    assert len(catalog) == 16
    assert [e.rule for e in catalog] == list(RuleId)
    imp_i = next(e for e in catalog if e.rule is RuleId.IMP_I)
    assert imp_i.name == "->I"
    assert imp_i.premises == 1
    assert imp_i.tag_arity == (0, 1)
    for entry in catalog:
        assert entry.schema


def test_catalog_names_round_trip():
    for entry in rule_catalog():
        lo, _ = entry.tag_arity
        tags = ("a", "b")[:lo]
        text = " ".join((entry.name, *tags))
        assert parse_rule_annotation(text) == Apply(entry.rule, tags)


# --- Premise counts --------------------------------------------------------------

def test_wrong_premise_count_always_fails():
    for rule in RuleId:
        arity = PREMISE_COUNT[rule]
        lo, _ = TAG_ARITY[rule]
        ann = Apply(rule, ("a", "b")[:lo])
        for count in range(5):
            if count == arity:
                continue
            verdict = check_step(P, [(Q, {})] * count, ann)
            assert not verdict.ok
            assert "expects" in verdict.message


# --- Spec'd verdict goldens -------------------------------------------------------

A_of = lambda t: Atom("A", (t,))
B_of = lambda t: Atom("B", (t,))


def test_forall_elim_instance():
    premise = Forall("x", And(A_of(Var("x")), B_of(Var("x"))))
    verdict = check_step(And(A_of(Const("c")), B_of(Const("c"))), [(premise, {})], Apply(RuleId.FORALL_E))
    assert verdict.ok
    assert verdict.discharged == frozenset()


def test_exists_intro_instance():
    verdict = check_step(
        Exists("x", B_of(Var("x"))),
        [(B_of(Const("c")), {"a": Forall("x", And(A_of(Var("x")), B_of(Var("x"))))})],
        Apply(RuleId.EXISTS_I),
    )
    assert verdict.ok


def test_and_intro_connective_mismatch():
    verdict = check_step(Implies(P, Q), [(P, {}), (Q, {})], Apply(RuleId.AND_I))
    assert not verdict.ok
    assert "conjunction" in verdict.message


def test_forall_intro_eigenvariable_violation():
    premise = (A_of(Const("c")), {"a": A_of(Const("c"))})
    verdict = check_step(Forall("x", A_of(Var("x"))), [premise], Apply(RuleId.FORALL_I))
    assert not verdict.ok
    assert "eigenvariable" in verdict.message


# --- Propositional rules ------------------------------------------------------------

def test_and_rules():
    assert check_step(And(P, Q), [(P, {}), (Q, {})], Apply(RuleId.AND_I)).ok
    assert not check_step(And(P, Q), [(Q, {}), (P, {})], Apply(RuleId.AND_I)).ok
    assert check_step(P, [(And(P, Q), {})], Apply(RuleId.AND_E)).ok
    assert check_step(Q, [(And(P, Q), {})], Apply(RuleId.AND_E)).ok
    assert not check_step(R, [(And(P, Q), {})], Apply(RuleId.AND_E)).ok
    assert not check_step(P, [(Or(P, Q), {})], Apply(RuleId.AND_E)).ok


def test_or_intro():
    assert check_step(Or(P, Q), [(P, {})], Apply(RuleId.OR_I)).ok
    assert check_step(Or(P, Q), [(Q, {})], Apply(RuleId.OR_I)).ok
    assert not check_step(Or(P, Q), [(R, {})], Apply(RuleId.OR_I)).ok


def test_or_elim_discharges_both_tags():
    premises = [
        (Or(P, Q), {"z": Or(P, Q)}),
        (R, {"a": P}),
        (R, {"b": Q}),
    ]
    verdict = check_step(R, premises, Apply(RuleId.OR_E, ("a", "b")))
    assert verdict.ok
    assert verdict.discharged == frozenset({"a", "b"})


def test_or_elim_tag_formula_mismatch():
    premises = [(Or(P, Q), {}), (R, {"a": Q}), (R, {"b": Q})]
    verdict = check_step(R, premises, Apply(RuleId.OR_E, ("a", "b")))
    assert not verdict.ok
    assert "'a'" in verdict.message


def test_or_elim_rejects_swapped_tags():
    # each tag is tied to its own branch; naming the other branch's
    # assumption would silently discharge a live hypothesis
    premises = [(Or(P, Q), {}), (R, {"c": R}), (R, {"b": R})]
    verdict = check_step(R, premises, Apply(RuleId.OR_E, ("b", "c")))
    assert not verdict.ok
    assert "cannot be discharged" in verdict.message


def test_or_elim_tag_in_major_premise_fails():
    premises = [(Or(P, Q), {"a": P}), (R, {"a": P}), (R, {"b": Q})]
    verdict = check_step(R, premises, Apply(RuleId.OR_E, ("a", "b")))
    assert not verdict.ok
    assert "cannot be discharged" in verdict.message


def test_or_elim_shared_tag_on_same_disjunct():
    premises = [(Or(P, P), {}), (Q, {"a": P}), (Q, {"a": P})]
    verdict = check_step(Q, premises, Apply(RuleId.OR_E, ("a", "a")))
    assert verdict.ok
    assert verdict.discharged == frozenset({"a"})


def test_imp_intro():
    verdict = check_step(Implies(P, Q), [(Q, {"a": P})], Apply(RuleId.IMP_I, ("a",)))
    assert verdict.ok
    assert verdict.discharged == frozenset({"a"})
    # vacuous discharge: the antecedent was never assumed
    verdict = check_step(Implies(P, Q), [(Q, {})], Apply(RuleId.IMP_I, ("a",)))
    assert verdict.ok
    assert verdict.discharged == frozenset()
    assert check_step(Implies(P, Q), [(Q, {})], Apply(RuleId.IMP_I)).ok
    # the tagged assumption must be the antecedent
    verdict = check_step(Implies(P, Q), [(Q, {"a": R})], Apply(RuleId.IMP_I, ("a",)))
    assert not verdict.ok
    assert not check_step(Implies(P, Q), [(P, {})], Apply(RuleId.IMP_I)).ok


def test_imp_elim_order():
    assert check_step(Q, [(Implies(P, Q), {}), (P, {})], Apply(RuleId.IMP_E)).ok
    assert not check_step(Q, [(P, {}), (Implies(P, Q), {})], Apply(RuleId.IMP_E)).ok
    assert not check_step(P, [(Implies(P, Q), {}), (P, {})], Apply(RuleId.IMP_E)).ok


def test_iff_rules():
    assert check_step(Iff(P, Q), [(Implies(P, Q), {}), (Implies(Q, P), {})], Apply(RuleId.IFF_I)).ok
    assert not check_step(Iff(P, Q), [(Implies(Q, P), {}), (Implies(P, Q), {})], Apply(RuleId.IFF_I)).ok
    assert check_step(Implies(P, Q), [(Iff(P, Q), {})], Apply(RuleId.IFF_E)).ok
    assert check_step(Implies(Q, P), [(Iff(P, Q), {})], Apply(RuleId.IFF_E)).ok
    assert not check_step(Iff(Q, P), [(Iff(P, Q), {})], Apply(RuleId.IFF_E)).ok


def test_not_intro():
    premises = [(Q, {"a": P}), (Not(Q), {})]
    verdict = check_step(Not(P), premises, Apply(RuleId.NOT_I, ("a",)))
    assert verdict.ok
    assert verdict.discharged == frozenset({"a"})
    # the tag may live in either premise
    premises = [(Q, {}), (Not(Q), {"a": P})]
    assert check_step(Not(P), premises, Apply(RuleId.NOT_I, ("a",))).ok
    # premises must contradict
    assert not check_step(Not(P), [(Q, {"a": P}), (Not(R), {})], Apply(RuleId.NOT_I, ("a",))).ok
    # tagged assumption must match the negated conclusion
    assert not check_step(Not(P), [(Q, {"a": R}), (Not(Q), {})], Apply(RuleId.NOT_I, ("a",))).ok


def test_not_elim_is_classical():
    premises = [(Q, {"a": Not(P)}), (Not(Q), {})]
    verdict = check_step(P, premises, Apply(RuleId.NOT_E, ("a",)))
    assert verdict.ok
    assert verdict.discharged == frozenset({"a"})
    assert not check_step(P, [(Q, {"a": P}), (Not(Q), {})], Apply(RuleId.NOT_E, ("a",))).ok


# --- Quantifier rules ----------------------------------------------------------------

def test_forall_intro():
    concl = Forall("x", A_of(Var("x")))
    assert check_step(concl, [(A_of(Const("c")), {})], Apply(RuleId.FORALL_I)).ok
    assert check_step(concl, [(A_of(Const("c")), {"a": B_of(Const("d"))})], Apply(RuleId.FORALL_I)).ok
    # vacuous generalization over a formula the variable does not touch
    assert check_step(Forall("x", P), [(P, {})], Apply(RuleId.FORALL_I)).ok
    # generalized term must be a constant
    verdict = check_step(concl, [(A_of(Var("y")), {})], Apply(RuleId.FORALL_I))
    assert not verdict.ok
    assert "constant" in verdict.message
    # eigenvariable occurs in the conclusion itself
    concl2 = Forall("x", Atom("R", (Var("x"), Const("c"))))
    verdict = check_step(concl2, [(Atom("R", (Const("c"), Const("c"))), {})], Apply(RuleId.FORALL_I))
    assert not verdict.ok
    assert "eigenvariable" in verdict.message


def test_forall_elim_witness_may_be_free_variable():
    premise = Forall("x", Atom("R", (Var("x"), Var("y"))))
    concl = Atom("R", (Var("y"), Var("y")))
    assert check_step(concl, [(premise, {})], Apply(RuleId.FORALL_E)).ok


def test_forall_elim_rejects_non_instances():
    premise = Forall("x", And(A_of(Var("x")), B_of(Var("x"))))
    verdict = check_step(And(A_of(Const("c")), B_of(Const("d"))), [(premise, {})], Apply(RuleId.FORALL_E))
    assert not verdict.ok
    assert "instance" in verdict.message


def test_exists_intro_rejects_non_instances():
    concl = Exists("x", And(A_of(Var("x")), B_of(Var("x"))))
    assert not check_step(concl, [(And(A_of(Const("c")), B_of(Const("d"))), {})], Apply(RuleId.EXISTS_I)).ok


def test_exists_elim():
    ex = Exists("x", A_of(Var("x")))
    premises = [(ex, {}), (Q, {"a": A_of(Const("c")), "b": R})]
    verdict = check_step(Q, premises, Apply(RuleId.EXISTS_E, ("a",)))
    assert verdict.ok
    assert verdict.discharged == frozenset({"a"})


def test_exists_elim_eigenvariable_violations():
    ex = Exists("x", A_of(Var("x")))
    # witness occurs in the conclusion
    premises = [(ex, {}), (B_of(Const("c")), {"a": A_of(Const("c"))})]
    verdict = check_step(B_of(Const("c")), premises, Apply(RuleId.EXISTS_E, ("a",)))
    assert not verdict.ok
    assert "eigenvariable" in verdict.message
    # witness occurs in another live assumption
    premises = [(ex, {}), (Q, {"a": A_of(Const("c")), "b": B_of(Const("c"))})]
    assert not check_step(Q, premises, Apply(RuleId.EXISTS_E, ("a",))).ok
    # witness occurs in the existential premise itself
    ex2 = Exists("x", Atom("R", (Var("x"), Const("c"))))
    premises = [(ex2, {}), (Q, {"a": Atom("R", (Const("c"), Const("c")))})]
    assert not check_step(Q, premises, Apply(RuleId.EXISTS_E, ("a",))).ok


def test_exists_elim_tag_scope():
    ex = Exists("x", A_of(Var("x")))
    # tag also names a live assumption of the major premise
    premises = [(ex, {"a": A_of(Const("c"))}), (Q, {"a": A_of(Const("c"))})]
    verdict = check_step(Q, premises, Apply(RuleId.EXISTS_E, ("a",)))
    assert not verdict.ok
    assert "cannot be discharged" in verdict.message
    # vacuous use: the minor derivation never used the witness
    premises = [(ex, {}), (Q, {"b": R})]
    verdict = check_step(Q, premises, Apply(RuleId.EXISTS_E, ("a",)))
    assert verdict.ok
    assert verdict.discharged == frozenset()


def test_false_and_true_rules():
    assert check_step(P, [(FALSITY, {})], Apply(RuleId.FALSE_E)).ok
    assert not check_step(P, [(Q, {})], Apply(RuleId.FALSE_E)).ok
    assert check_step(TRUTH, [], Apply(RuleId.TRUE_I)).ok
    assert not check_step(P, [], Apply(RuleId.TRUE_I)).ok


# --- Properties ------------------------------------------------------------------------

_PROP_RULES = [
    RuleId.AND_I,
    RuleId.AND_E,
    RuleId.OR_I,
    RuleId.OR_E,
    RuleId.IMP_I,
    RuleId.IMP_E,
    RuleId.IFF_I,
    RuleId.IFF_E,
    RuleId.NOT_I,
    RuleId.NOT_E,
    RuleId.FALSE_E,
    RuleId.TRUE_I,
]


def _random_step(rng):
    """A plausible propositional step; valid often enough to be useful."""
    rule = rng.choice(_PROP_RULES)
    lo, hi = TAG_ARITY[rule]
    tags = tuple("ab"[: rng.randint(lo, hi)])
    small = lambda: random_prop_formula(rng, rng.randint(0, 2))
    deps = lambda: {t: small() for t in "abc" if rng.random() < 0.3}
    concl = small()
    premises = [(small(), deps()) for _ in range(PREMISE_COUNT[rule])]
    if rng.random() < 0.6:
        # rebuild the premises so the step is actually correct
        if rule is RuleId.AND_I and isinstance(concl, type(And(P, Q))):
            premises = [(concl.left, deps()), (concl.right, deps())]
        elif rule is RuleId.AND_E:
            premises = [(And(concl, small()), deps())]
        elif rule is RuleId.OR_I:
            concl = Or(premises[0][0], small())
        elif rule is RuleId.IMP_E:
            premises = [(Implies(premises[0][0], concl), deps()), (premises[0][0], deps())]
        elif rule is RuleId.FALSE_E:
            premises = [(FALSITY, deps())]
        elif rule is RuleId.TRUE_I:
            concl = TRUTH
    return concl, premises, Apply(rule, tags)


@given(st.integers(0, 10**9))
def test_accepted_propositional_steps_are_sound(seed):
    rng = random.Random(seed)
    concl, premises, ann = _random_step(rng)
    verdict = check_step(concl, premises, ann)
    assert check_step(concl, premises, ann) == verdict
    if verdict.ok:
        assert entails([f for f, _ in premises], concl)
        assert verdict.discharged <= set(ann.tags)


@given(st.integers(0, 10**9))
def test_forall_elim_agrees_with_brute_force(seed):
    rng = random.Random(seed)
    body_source = parse_formula("forall x . A(x) /\\ R(x, c)")
    t = rng.choice([Const("c"), Const("d"), Const("k")])
    concl = substitute(body_source.body, "x", t)
    if rng.random() < 0.4:
        concl = And(A_of(t), Atom("R", (Const("d"), Const("c"))))
    verdict = check_step(concl, [(body_source, {})], Apply(RuleId.FORALL_E))
    witnesses = brute_match(body_source.body, "x", concl)
    assert verdict.ok == bool(witnesses)
