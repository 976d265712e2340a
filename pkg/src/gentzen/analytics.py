"""Behavioral metrics over exported event logs, and their CLI.

Each log file is one student's JSONL export.  Metrics are keyed by
exercise id and are invariant under the order in which logs are supplied.
Output is CSV with a header row; undefined ratios print as "n/a".
"""

from __future__ import annotations

import argparse
import csv
import io
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .eventlog import EDIT_KINDS, Event, EventLog, LogImportError, import_log

DEFAULT_GAP_MINUTES = 10.0


@dataclass(frozen=True)
class ExerciseMetrics:
    exercise_id: str
    attempts: int
    total_minutes: float
    checks: int
    additions: int
    deletions: int
    edits: int

    @property
    def edits_per_check(self) -> float | None:
        return self.edits / self.checks if self.checks else None

    @property
    def deletion_addition_ratio(self) -> float | None:
        return self.deletions / self.additions if self.additions else None


def _is_edit(event: Event) -> bool:
    return event.kind in EDIT_KINDS


def _exercise_ids(logs: list[EventLog]) -> set[str]:
    return {event.exercise_id for log in logs for event in log}


def attempts(logs: list[EventLog]) -> dict[str, int]:
    """Per exercise, how many students made at least one edit to it."""
    counts = {exercise_id: 0 for exercise_id in _exercise_ids(logs)}
    for log in logs:
        for exercise_id in {e.exercise_id for e in log if _is_edit(e)}:
            counts[exercise_id] += 1
    return counts


def time_spent(
    logs: list[EventLog], gap_minutes: float = DEFAULT_GAP_MINUTES
) -> dict[str, float]:
    """Sessionized minutes per exercise.

    The delta between consecutive events of one log is attributed to the
    earlier event's exercise; deltas above the gap threshold are session
    breaks and contribute nothing.
    """
    gap_ms = gap_minutes * 60_000
    total_ms = {exercise_id: 0 for exercise_id in _exercise_ids(logs)}
    for log in logs:
        for earlier, later in zip(log, log[1:]):
            delta = later.t - earlier.t
            if delta <= gap_ms:
                total_ms[earlier.exercise_id] += delta
    return {exercise_id: ms / 60_000 for exercise_id, ms in total_ms.items()}


def _count(logs: list[EventLog], wanted) -> dict[str, int]:
    counts = {exercise_id: 0 for exercise_id in _exercise_ids(logs)}
    for log in logs:
        for event in log:
            if wanted(event):
                counts[event.exercise_id] += 1
    return counts


def checks_per_exercise(logs: list[EventLog]) -> dict[str, int]:
    return _count(logs, lambda e: e.kind == "check")


def edit_check_ratio(logs: list[EventLog]) -> dict[str, float | None]:
    """Edits per check; None where no check was ever run."""
    edits = _count(logs, _is_edit)
    checks = checks_per_exercise(logs)
    return {
        exercise_id: edits[exercise_id] / checks[exercise_id] if checks[exercise_id] else None
        for exercise_id in edits
    }


def deletion_addition_ratio(logs: list[EventLog]) -> dict[str, float | None]:
    """Deleted premises per added premise; None where nothing was added."""
    additions = _count(logs, lambda e: e.kind == "add-premise")
    deletions = _count(logs, lambda e: e.kind == "delete-leaf")
    return {
        exercise_id: deletions[exercise_id] / additions[exercise_id]
        if additions[exercise_id]
        else None
        for exercise_id in additions
    }


def exercise_metrics(
    logs: list[EventLog], gap_minutes: float = DEFAULT_GAP_MINUTES
) -> dict[str, ExerciseMetrics]:
    attempt_counts = attempts(logs)
    minutes = time_spent(logs, gap_minutes)
    checks = checks_per_exercise(logs)
    additions = _count(logs, lambda e: e.kind == "add-premise")
    deletions = _count(logs, lambda e: e.kind == "delete-leaf")
    edits = _count(logs, _is_edit)
    return {
        exercise_id: ExerciseMetrics(
            exercise_id=exercise_id,
            attempts=attempt_counts[exercise_id],
            total_minutes=minutes[exercise_id],
            checks=checks[exercise_id],
            additions=additions[exercise_id],
            deletions=deletions[exercise_id],
            edits=edits[exercise_id],
        )
        for exercise_id in attempt_counts
    }


def natural_key(exercise_id: str):
    """Sort "2-b" before "10-a": digit runs compare numerically."""
    return [
        int(part) if part.isdigit() else part
        for part in re.split(r"(\d+)", exercise_id)
    ]


def _cell(value) -> str:
    if value is None:
        return "n/a"
    return str(value)


_TABLES = {
    "attempts": (
        ("exercise", "attempts"),
        lambda logs, gap: attempts(logs),
    ),
    "time": (
        ("exercise", "minutes"),
        lambda logs, gap: time_spent(logs, gap),
    ),
    "checks": (
        ("exercise", "checks"),
        lambda logs, gap: checks_per_exercise(logs),
    ),
    "edit-check-ratio": (
        ("exercise", "edits_per_check"),
        lambda logs, gap: edit_check_ratio(logs),
    ),
    "deletion-addition-ratio": (
        ("exercise", "deletion_addition_ratio"),
        lambda logs, gap: deletion_addition_ratio(logs),
    ),
}

_ALL_HEADER = (
    "exercise",
    "attempts",
    "minutes",
    "checks",
    "additions",
    "deletions",
    "edits",
    "edits_per_check",
    "deletion_addition_ratio",
)


def render_csv(metric: str, logs: list[EventLog], gap_minutes: float) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if metric == "all":
        writer.writerow(_ALL_HEADER)
        table = exercise_metrics(logs, gap_minutes)
        for exercise_id in sorted(table, key=natural_key):
            m = table[exercise_id]
            writer.writerow(
                [
                    m.exercise_id,
                    m.attempts,
                    _cell(m.total_minutes),
                    m.checks,
                    m.additions,
                    m.deletions,
                    m.edits,
                    _cell(m.edits_per_check),
                    _cell(m.deletion_addition_ratio),
                ]
            )
    else:
        header, compute = _TABLES[metric]
        writer.writerow(header)
        table = compute(logs, gap_minutes)
        for exercise_id in sorted(table, key=natural_key):
            writer.writerow([exercise_id, _cell(table[exercise_id])])
    return out.getvalue()


def load_logs(directory: str | Path) -> list[EventLog]:
    """Import every *.jsonl file in a directory, in name order."""
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"not a directory: {directory}")
    logs = []
    for path in sorted(directory.glob("*.jsonl")):
        try:
            logs.append(import_log(path.read_text(encoding="utf-8")))
        except LogImportError as error:
            raise LogImportError(error.line, f"{path.name}: {error.message}") from error
    return logs


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="analytics",
        description="Compute per-exercise usage metrics from exported event logs.",
    )
    parser.add_argument(
        "metric",
        choices=sorted(_TABLES) + ["all"],
        help="which table to emit",
    )
    parser.add_argument(
        "--logs",
        required=True,
        metavar="DIR",
        help="directory of JSONL log exports, one file per student",
    )
    parser.add_argument(
        "--gap-minutes",
        type=float,
        default=DEFAULT_GAP_MINUTES,
        metavar="N",
        help="idle gap that ends a work session (default: %(default)s)",
    )
    parser.add_argument(
        "--out",
        metavar="FILE",
        help="write CSV here instead of standard output",
    )
    parser.add_argument("--format", choices=["csv"], default="csv")
    args = parser.parse_args(argv)
    try:
        logs = load_logs(args.logs)
    except (FileNotFoundError, LogImportError) as error:
        print(f"analytics: {error}", file=sys.stderr)
        return 1
    text = render_csv(args.metric, logs, args.gap_minutes)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
