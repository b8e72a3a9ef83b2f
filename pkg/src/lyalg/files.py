"""JSON input files: algebras, commutative algebras, modules, matrices and points."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .algebra import CommAlgebra, InputError, LYAlgebra, scalar


def sha256(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def read_json(path):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", str(p)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}", str(p)) from None


def _wrap(path, fn, data):
    try:
        return fn(data)
    except InputError as exc:
        raise InputError(str(exc), str(path)) from None
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"malformed content ({exc})", str(path)) from None


def load_algebra(path) -> LYAlgebra:
    return _wrap(path, LYAlgebra.from_json, read_json(path))


def load_comm_algebra(path) -> CommAlgebra:
    return _wrap(path, CommAlgebra.from_json, read_json(path))


def load_module(path, over: LYAlgebra | None = None):
    """Module file; its ``"over"`` field names an algebra file relative to the module file."""
    from .rep import LYModule

    data = read_json(path)
    if over is None:
        ref = data.get("over") if isinstance(data, dict) else None
        if not isinstance(ref, str):
            raise InputError("field 'over' must name an algebra file", str(path))
        over = load_algebra(Path(path).parent / ref)
    return _wrap(path, lambda d: LYModule.from_json(d, over), data)


def parse_matrix(data, where: str = "matrix") -> list:
    if isinstance(data, dict):
        data = data.get("matrix")
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise InputError("expected a list of rows", where)
    width = len(data[0])
    out = []
    for k, row in enumerate(data):
        if len(row) != width:
            raise InputError(f"row {k + 1} has length {len(row)}, expected {width}", where)
        out.append([scalar(x) for x in row])
    return out


def load_matrix(path) -> list:
    return _wrap(path, parse_matrix, read_json(path))


def load_point_images(path) -> dict:
    """``{"images": [[s, i, matrix], ...]}`` for a matrix point."""
    data = read_json(path)

    def parse(d):
        rows = d["images"]
        out = {}
        for k, entry in enumerate(rows):
            s, i, mat = entry
            out[(int(s), int(i))] = parse_matrix(mat, f"images[{k}]")
        return out

    return _wrap(path, parse, data)
