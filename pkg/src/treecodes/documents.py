"""JSON document format for tree-codes ("treecode/v1").

Serialization is canonical (sorted keys, sorted edges, fixed indentation)
so the embedded content hash and the file bytes are reproducible.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .codes import TreeCode, code_from_edge_lists
from .errors import DataIntegrityError, FormatError, StructureError

FORMAT = "treecode/v1"


def content_hash(n: int, trees: list[list[list[int]]]) -> str:
    blob = json.dumps({"n": n, "trees": trees}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _jsonable(x: Any):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def code_to_document(code: TreeCode, **extra_meta) -> dict:
    trees = [t.to_json() for t in code.codewords]
    meta = _jsonable({**code.meta, **extra_meta})
    meta["content_hash"] = content_hash(code.n, trees)
    return {
        "format": FORMAT,
        "n": code.n,
        "claimed_distance": code.claimed_distance,
        "family": code.family_tag,
        "trees": trees,
        "meta": meta,
    }


def dumps(doc: dict) -> str:
    """Canonical text: sorted keys, one tree per line."""
    compact = lambda x: json.dumps(x, sort_keys=True, separators=(",", ":"))
    lines = ["{"]
    keys = sorted(doc)
    for i, k in enumerate(keys):
        tail = "," if i < len(keys) - 1 else ""
        if k == "trees":
            rows = [" " * 4 + compact(t) for t in doc[k]]
            body = ",\n".join(rows)
            lines.append(f' "trees": [\n{body}\n ]{tail}' if rows else f' "trees": []{tail}')
        else:
            lines.append(f" {json.dumps(k)}: {compact(doc[k])}{tail}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def document_to_code(doc: dict, check_hash: bool = True) -> TreeCode:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise FormatError(f"not a {FORMAT} document")
    try:
        n = int(doc["n"])
        trees = [[[int(u), int(v)] for u, v in t] for t in doc["trees"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed document: {exc}") from None
    meta = dict(doc.get("meta") or {})
    stored = meta.get("content_hash")
    if check_hash and stored is not None:
        canon = [sorted([min(u, v), max(u, v)] for u, v in t) for t in trees]
        if stored != content_hash(n, canon):
            raise DataIntegrityError("content hash does not match the trees")
    try:
        return code_from_edge_lists(n, trees, claimed_distance=doc.get("claimed_distance"),
                                    family_tag=doc.get("family", ""), meta=meta)
    except StructureError as exc:
        raise FormatError(str(exc)) from None


def write_code(code: TreeCode, path, **extra_meta) -> str:
    text = dumps(code_to_document(code, **extra_meta))
    Path(path).write_text(text)
    return text


def read_code(path) -> TreeCode:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    return document_to_code(doc)


def read_edges(path) -> list[tuple[int, int]]:
    """Received word: a JSON edge list, or an object with an "edges" key."""
    try:
        doc = json.loads(Path(path).read_text())
        if isinstance(doc, dict):
            doc = doc["edges"]
        return [(int(u), int(v)) for u, v in doc]
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"cannot read edge list {path}: {exc}") from None
