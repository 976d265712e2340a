"""Stateless HTTP facade over the checker and the exercise catalog.

Every handler is a pure function of the request and the immutable data
the app was created with, so any request can be replayed against a fresh
process with an identical result.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import uvicorn
from fastapi import FastAPI, Request
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from .checker import check_tree, encode_annotated_tree
from .exercises import Catalog, bundled_catalog, encode_exercise, load_catalog
from .formula import ParseError, parse_formula
from .prooftree import DecodeError, decode_tree, tree_depth

MAX_BODY_BYTES = 1 << 20
MAX_TREE_DEPTH = 200

DEFAULT_LISTEN = "127.0.0.1:8000"

_FALLBACK_PAGE = """<!doctype html>
<html>
  <head><meta charset="utf-8"><title>Proof exercises</title></head>
  <body>
    <h1>Proof exercises</h1>
    <p>No editor bundle is installed on this server.</p>
    <p>The API is available: <a href="/api/exercises">/api/exercises</a></p>
  </body>
</html>
"""


class _BadRequest(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=status)


def _decode_check_request(body: bytes, catalog: Catalog):
    if len(body) > MAX_BODY_BYTES:
        raise _BadRequest("request body exceeds 1 MiB")
    try:
        data = json.loads(body)
    except (json.JSONDecodeError, UnicodeDecodeError) as error:
        raise _BadRequest(f"not valid JSON: {error}") from error
    if not isinstance(data, dict) or set(data) != {"exercise_id", "trees"}:
        raise _BadRequest(
            "expected an object with exactly 'exercise_id' and 'trees'"
        )
    exercise_id = data["exercise_id"]
    if not isinstance(exercise_id, str):
        raise _BadRequest("'exercise_id' must be a string")
    raw_trees = data["trees"]
    if not isinstance(raw_trees, list) or not raw_trees:
        raise _BadRequest("'trees' must be a non-empty list")
    exercise = catalog.get(exercise_id)
    if exercise is None:
        raise _BadRequest(f"unknown exercise '{exercise_id}'")
    goals = exercise.parsed_goals()
    trees = []
    for index, raw in enumerate(raw_trees):
        try:
            tree = decode_tree(raw)
        except DecodeError as error:
            raise _BadRequest(f"trees[{index}]: {error}") from error
        if tree_depth(tree) > MAX_TREE_DEPTH:
            raise _BadRequest(f"trees[{index}]: deeper than {MAX_TREE_DEPTH}")
        try:
            goal = parse_formula(tree.goal_text)
        except ParseError as error:
            raise _BadRequest(
                f"trees[{index}]: goal does not parse: {error}"
            ) from error
        if goal not in goals:
            raise _BadRequest(
                f"trees[{index}]: goal does not match exercise "
                f"'{exercise_id}'"
            )
        trees.append(tree)
    return trees


def create_app(
    catalog: Catalog | None = None, assets_dir: str | Path | None = None
) -> FastAPI:
    catalog = catalog if catalog is not None else bundled_catalog()
    assets = Path(assets_dir) if assets_dir is not None else None
    app = FastAPI(title="Proof exercise service", docs_url=None, redoc_url=None)

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, error: StarletteHTTPException):
        return _error(error.status_code, str(error.detail))

    @app.get("/", response_class=HTMLResponse)
    async def front_page():
        if assets is not None:
            index = assets / "index.html"
            if index.is_file():
                return HTMLResponse(index.read_text(encoding="utf-8"))
        return HTMLResponse(_FALLBACK_PAGE)

    @app.get("/api/exercises")
    async def list_exercises():
        return {"exercises": [encode_exercise(e) for e in catalog]}

    @app.get("/api/exercises/{exercise_id}")
    async def one_exercise(exercise_id: str):
        exercise = catalog.get(exercise_id)
        if exercise is None:
            return _error(404, f"unknown exercise '{exercise_id}'")
        return encode_exercise(exercise)

    @app.post("/api/check")
    async def check(request: Request):
        body = await request.body()
        try:
            trees = _decode_check_request(body, catalog)
        except _BadRequest as error:
            return _error(400, error.message)
        except RecursionError:
            return _error(400, "request nests too deeply")
        results = [check_tree(tree) for tree in trees]
        return {
            "trees": [encode_annotated_tree(annotated) for annotated, _ in results],
            "outcomes": [outcome.value for _, outcome in results],
        }

    if assets is not None and assets.is_dir():
        app.mount("/", StaticFiles(directory=assets), name="assets")

    return app


def _setting(flag_value, env_name: str, default):
    """Flags beat environment variables beat defaults."""
    if flag_value is not None:
        return flag_value
    return os.environ.get(env_name, default)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="gentzen-server",
        description="Serve the exercise catalog, the checker, and the editor.",
    )
    parser.add_argument(
        "--listen",
        metavar="HOST:PORT",
        help=f"listen address (default: {DEFAULT_LISTEN}; env LISTEN)",
    )
    parser.add_argument(
        "--catalog",
        metavar="FILE",
        help="exercise catalog JSON (default: bundled; env CATALOG)",
    )
    parser.add_argument(
        "--assets",
        metavar="DIR",
        help="static editor bundle to serve at / (env ASSETS)",
    )
    args = parser.parse_args(argv)

    listen = _setting(args.listen, "LISTEN", DEFAULT_LISTEN)
    catalog_path = _setting(args.catalog, "CATALOG", None)
    assets_dir = _setting(args.assets, "ASSETS", None)

    host, _, port_text = listen.rpartition(":")
    if not host or not port_text.isdigit():
        print(f"gentzen-server: bad listen address {listen!r}", file=sys.stderr)
        return 2
    catalog = load_catalog(catalog_path) if catalog_path else bundled_catalog()
    app = create_app(catalog, assets_dir)
    uvicorn.run(app, host=host, port=int(port_text))
    return 0


if __name__ == "__main__":
    sys.exit(main())
