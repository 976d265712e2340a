"""Exercise catalogs.

An exercise names one or more goal sentences; a catalog is an ordered,
duplicate-free collection of exercises loaded from a JSON file.  Loading
validates the shape of the file and parses every goal, so code downstream
can assume catalog goals are well formed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .formula import Formula, ParseError, parse_formula


class CatalogError(Exception):
    """Raised when a catalog file cannot be loaded."""


@dataclass(frozen=True)
class Exercise:
    id: str
    title: str
    description: str
    goals: tuple[str, ...]

    def parsed_goals(self) -> tuple[Formula, ...]:
        return tuple(parse_formula(goal) for goal in self.goals)


@dataclass(frozen=True)
class Catalog:
    exercises: tuple[Exercise, ...]

    def __len__(self) -> int:
        return len(self.exercises)

    def __iter__(self):
        return iter(self.exercises)

    def get(self, exercise_id: str):
        """Return the exercise with the given id, or None."""
        for exercise in self.exercises:
            if exercise.id == exercise_id:
                return exercise
        return None


def get_exercise(catalog: Catalog, exercise_id: str):
    """Exact-match lookup; returns None when the id is unknown."""
    return catalog.get(exercise_id)


def _field(entry: dict, name: str, where: str) -> object:
    if name not in entry:
        raise CatalogError(f"{where}: missing field '{name}'")
    return entry[name]


def _string_field(entry: dict, name: str, where: str) -> str:
    value = _field(entry, name, where)
    if not isinstance(value, str):
        raise CatalogError(f"{where}: field '{name}' must be a string")
    return value


def _decode_exercise(entry: object, where: str) -> Exercise:
    if not isinstance(entry, dict):
        raise CatalogError(f"{where}: an exercise must be an object")
    exercise_id = _string_field(entry, "id", where)
    where = f"exercise '{exercise_id}'"
    title = _string_field(entry, "title", where)
    description = _string_field(entry, "description", where)
    goals = _field(entry, "goals", where)
    if not isinstance(goals, list) or not goals:
        raise CatalogError(f"{where}: 'goals' must be a non-empty list")
    for goal in goals:
        if not isinstance(goal, str):
            raise CatalogError(f"{where}: goals must be strings")
        try:
            parse_formula(goal)
        except ParseError as error:
            raise CatalogError(
                f"{where}: goal does not parse at position "
                f"{error.position}: {error.message}"
            ) from error
    extras = set(entry) - {"id", "title", "description", "goals"}
    if extras:
        raise CatalogError(f"{where}: unknown field '{sorted(extras)[0]}'")
    return Exercise(exercise_id, title, description, tuple(goals))


def decode_catalog(text: str, source: str = "catalog") -> Catalog:
    """Decode catalog JSON, validating shape, goal syntax and id uniqueness."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise CatalogError(f"{source}: not valid JSON: {error}") from error
    if not isinstance(data, dict) or set(data) != {"exercises"}:
        raise CatalogError(f"{source}: expected an object with an 'exercises' list")
    entries = data["exercises"]
    if not isinstance(entries, list) or not entries:
        raise CatalogError(f"{source}: 'exercises' must be a non-empty list")
    exercises = []
    seen: set[str] = set()
    for index, entry in enumerate(entries):
        exercise = _decode_exercise(entry, f"{source}: exercise #{index}")
        if exercise.id in seen:
            raise CatalogError(f"{source}: duplicate exercise id '{exercise.id}'")
        seen.add(exercise.id)
        exercises.append(exercise)
    return Catalog(tuple(exercises))


def load_catalog(path: str | Path) -> Catalog:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise CatalogError(f"cannot read catalog {path}: {error}") from error
    return decode_catalog(text, source=str(path))


def bundled_catalog() -> Catalog:
    """The exercise collection shipped with the package."""
    text = resources.files("gentzen").joinpath("data/exercises.json").read_text("utf-8")
    return decode_catalog(text, source="bundled catalog")


def encode_exercise(exercise: Exercise) -> dict:
    return {
        "id": exercise.id,
        "title": exercise.title,
        "description": exercise.description,
        "goals": list(exercise.goals),
    }
