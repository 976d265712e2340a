"""Event-sourced editing history.

Every user action on a proof tree is recorded as a timestamped event.
Replaying a log reconstructs the trees it describes; undo is itself an
event, interpreted during replay, so nothing is ever removed from a log.
Logs serialize to JSON Lines for export and import.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .exercises import Catalog
from .prooftree import (
    AddPremise,
    DeleteLeaf,
    EditError,
    ProofTree,
    SetFormula,
    SetRule,
    apply_edit,
    goal_only,
)

EDIT_KINDS = ("add-premise", "delete-leaf", "set-formula", "set-rule")
EVENT_KINDS = EDIT_KINDS + ("check", "undo")

# kind -> (has path, has value)
_FIELDS = {
    "add-premise": (True, False),
    "delete-leaf": (True, False),
    "set-formula": (True, True),
    "set-rule": (True, True),
    "check": (False, False),
    "undo": (False, False),
}


class ReplayError(Exception):
    """A log event that cannot be applied to the state built by its prefix."""

    def __init__(self, event_index: int, message: str):
        super().__init__(f"event {event_index}: {message}")
        self.event_index = event_index
        self.message = message


class LogImportError(Exception):
    """A malformed line in an exported log file."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class Event:
    t: int
    exercise_id: str
    tree_index: int
    kind: str
    path: tuple[int, ...] | None = None
    value: str | None = None

    def __post_init__(self):
        if self.kind not in _FIELDS:
            raise ValueError(f"unknown event kind {self.kind!r}")
        if self.tree_index < 0:
            raise ValueError("tree_index must be nonnegative")
        has_path, has_value = _FIELDS[self.kind]
        if has_path != (self.path is not None):
            expected = "requires" if has_path else "does not take"
            raise ValueError(f"{self.kind} {expected} a path")
        if has_value != (self.value is not None):
            expected = "requires" if has_value else "does not take"
            raise ValueError(f"{self.kind} {expected} a value")


EventLog = list[Event]


def _edit_for(event: Event):
    if event.kind == "add-premise":
        return AddPremise(event.path)
    if event.kind == "delete-leaf":
        return DeleteLeaf(event.path)
    if event.kind == "set-formula":
        return SetFormula(event.path, event.value)
    return SetRule(event.path, event.value)


def replay(log: EventLog, catalog: Catalog) -> dict[tuple[str, int], ProofTree]:
    """Left fold of a log from goal-only trees.

    Edit events apply to the named tree; check events change nothing; an
    undo reverts the most recent not-yet-undone edit of its tree (and is a
    no-op when there is none).  Returns the state of every tree with at
    least one live edit; a tree all of whose edits were undone is absent,
    its state being the goal-only tree it started from.  This keeps
    appending an edit plus an undo a strict identity on the result.
    """
    # One state stack per tree: the last entry is current, earlier entries
    # are what undos revert to.
    stacks: dict[tuple[str, int], list[ProofTree]] = {}
    for index, event in enumerate(log):
        key = (event.exercise_id, event.tree_index)
        if key not in stacks:
            exercise = catalog.get(event.exercise_id)
            if exercise is None:
                raise ReplayError(index, f"unknown exercise '{event.exercise_id}'")
            if event.tree_index >= len(exercise.goals):
                raise ReplayError(
                    index,
                    f"exercise '{event.exercise_id}' has no tree "
                    f"{event.tree_index}",
                )
            stacks[key] = [goal_only(exercise.goals[event.tree_index])]
        stack = stacks[key]
        if event.kind == "check":
            continue
        if event.kind == "undo":
            if len(stack) > 1:
                stack.pop()
            continue
        try:
            stack.append(apply_edit(stack[-1], _edit_for(event)))
        except EditError as error:
            raise ReplayError(index, str(error)) from error
    return {key: stack[-1] for key, stack in stacks.items() if len(stack) > 1}


def encode_event(event: Event) -> dict:
    record: dict = {
        "t": event.t,
        "exercise": event.exercise_id,
        "tree": event.tree_index,
        "op": event.kind,
    }
    if event.path is not None:
        record["path"] = list(event.path)
    if event.value is not None:
        record["value"] = event.value
    return record


def export_log(log: EventLog) -> str:
    """The JSONL file text for a log: one event per line, newline-terminated."""
    return "".join(
        json.dumps(encode_event(event), ensure_ascii=False, separators=(",", ":"))
        + "\n"
        for event in log
    )


def _decode_event(record: object, line: int) -> Event:
    if not isinstance(record, dict):
        raise LogImportError(line, "an event must be an object")
    for name, kind in (("t", int), ("exercise", str), ("tree", int), ("op", str)):
        if name not in record:
            raise LogImportError(line, f"missing field '{name}'")
        value = record[name]
        if not isinstance(value, kind) or isinstance(value, bool):
            raise LogImportError(line, f"field '{name}' must be a {kind.__name__}")
    op = record["op"]
    if op not in _FIELDS:
        raise LogImportError(line, f"unknown op {op!r}")
    has_path, has_value = _FIELDS[op]
    allowed = {"t", "exercise", "tree", "op"}
    path = None
    if has_path:
        allowed.add("path")
        if "path" not in record:
            raise LogImportError(line, f"op {op!r} requires a path")
        raw = record["path"]
        if not isinstance(raw, list) or not all(
            isinstance(step, int) and not isinstance(step, bool) and step >= 0
            for step in raw
        ):
            raise LogImportError(line, "path must be a list of nonnegative integers")
        path = tuple(raw)
    value = None
    if has_value:
        allowed.add("value")
        if "value" not in record:
            raise LogImportError(line, f"op {op!r} requires a value")
        value = record["value"]
        if not isinstance(value, str):
            raise LogImportError(line, "value must be a string")
    extras = set(record) - allowed
    if extras:
        raise LogImportError(line, f"unknown field '{sorted(extras)[0]}'")
    if record["tree"] < 0:
        raise LogImportError(line, "tree must be nonnegative")
    return Event(record["t"], record["exercise"], record["tree"], op, path, value)


def import_log(text: str) -> EventLog:
    """Parse exported JSONL text; raises LogImportError with a line number."""
    log: EventLog = []
    previous_t: int | None = None
    for line_number, line in enumerate(text.split("\n"), start=1):
        if line == "":
            # Allowed only as the tail of the final newline.
            if line_number <= text.count("\n"):
                raise LogImportError(line_number, "empty line")
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as error:
            raise LogImportError(line_number, f"not valid JSON: {error.msg}") from error
        event = _decode_event(record, line_number)
        if previous_t is not None and event.t < previous_t:
            raise LogImportError(line_number, "timestamps must be nondecreasing")
        previous_t = event.t
        log.append(event)
    return log
