"""JSON reports and their schema."""

import hashlib
import json
from functools import lru_cache
from importlib import resources

from . import __version__


def content_hash(obj):
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()


def monoid_subject(M, ident):
    return {"kind": "monoid", "id": str(ident), "hash": content_hash([list(r) for r in M.table])}


def act_subject(acts, ident):
    """Subject for one act or several (hashed together, monoid included)."""
    payload = [[[list(r) for r in A.monoid.table], [list(r) for r in A.action]] for A in acts]
    kind = "act" if len(acts) == 1 else "acts"
    return {"kind": kind, "id": str(ident), "hash": content_hash(payload)}


def plain_subject(kind, ident, payload):
    return {"kind": kind, "id": str(ident), "hash": content_hash(payload)}


def analysis_report(subject, results, seed):
    return {"subject": subject, "results": results, "toolVersion": __version__, "seed": seed}


def error_report(exc):
    body = {"type": type(exc).__name__, "message": str(exc)}
    details = getattr(exc, "details", None)
    if callable(details):
        body["details"] = jsonable(details())
    return {"error": body, "toolVersion": __version__}


def jsonable(obj):
    """Coerce sets, tuples and non-string keys into plain JSON values."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@lru_cache(maxsize=None)
def schema():
    text = resources.files("actlab").joinpath("report.schema.json").read_text()
    return json.loads(text)


def validate(report):
    """Raise ``jsonschema.ValidationError`` if ``report`` is malformed."""
    import jsonschema

    jsonschema.validate(report, schema())
