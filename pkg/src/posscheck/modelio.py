"""Loading and dumping of model files (schema, table, graph, t-norm).

Model JSON layout::

    {"variables": [{"name": "X", "domain": ["0", "1"]}, ...],
     "table": {"default": 0.0,
               "entries": [{"assignment": {"X": "0", ...}, "value": 1.0}, ...]},
     "graph": {"edges": [["X", "Y"], ...], "isolated": ["Q"]},      # optional
     "tnorm": {"base": "godel"}}                                     # optional

Values may be decimal numbers or "p/q" strings; in exact mode every value
becomes a ``fractions.Fraction`` and transformed t-norms are rejected.
"""

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import ModelFormatError
from .graphs import UndirectedGraph
from .possibility import PossibilityTable, Schema
from .tnorm import TNorm


@dataclass(frozen=True, eq=False)
class Model:
    """A loaded model file: schema + table, with optional graph and t-norm."""

    schema: Schema
    table: PossibilityTable
    graph: Optional[UndirectedGraph]
    tnorm: Optional[TNorm]
    digest: str


def parse_value(raw, exact=False):
    """Interpret a JSON value as a unit-interval number.

    Accepts numbers and "p/q" strings; exact mode yields Fractions (decimal
    literals convert exactly).
    """
    if isinstance(raw, str):
        try:
            value = Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ModelFormatError(f"cannot parse value {raw!r}: {exc}") from exc
        return value if exact else float(value)
    if isinstance(raw, bool) or not isinstance(raw, (int, float, Fraction)):
        raise ModelFormatError(f"value {raw!r} is not a number or 'p/q' string")
    if exact:
        try:
            return Fraction(str(raw))
        except ValueError as exc:
            raise ModelFormatError(f"value {raw!r} is not rational: {exc}") from exc
    return float(raw)


def schema_from_json(doc):
    if not isinstance(doc, list) or not doc:
        raise ModelFormatError("'variables' must be a nonempty array")
    pairs = []
    for item in doc:
        if not isinstance(item, dict) or "name" not in item or "domain" not in item:
            raise ModelFormatError("each variable needs 'name' and 'domain'")
        pairs.append((item["name"], [str(v) for v in item["domain"]]))
    return Schema(pairs)


def table_from_json(schema, doc, exact=False):
    if not isinstance(doc, dict):
        raise ModelFormatError("'table' must be an object")
    default = parse_value(doc.get("default", 0.0), exact)
    entries = []
    for item in doc.get("entries", []):
        if not isinstance(item, dict) or "assignment" not in item or "value" not in item:
            raise ModelFormatError("each entry needs 'assignment' and 'value'")
        entries.append((item["assignment"], parse_value(item["value"], exact)))
    return PossibilityTable.load(schema, entries, default)


def model_from_json(doc, exact=False):
    if not isinstance(doc, dict):
        raise ModelFormatError("model document must be an object")
    if "variables" not in doc or "table" not in doc:
        raise ModelFormatError("model needs 'variables' and 'table'")
    schema = schema_from_json(doc["variables"])
    table = table_from_json(schema, doc["table"], exact)
    graph = None
    if doc.get("graph") is not None:
        graph = UndirectedGraph.from_json_dict(doc["graph"])
        unknown = set(graph.vertices) - set(schema.variables)
        if unknown:
            raise ModelFormatError(f"graph vertices {sorted(unknown)} are not schema variables")
    tn = None
    if doc.get("tnorm") is not None:
        tn = TNorm.from_json_dict(doc["tnorm"])
        if exact and tn.transform is not None:
            raise ModelFormatError("exact mode does not support transformed t-norms")
    return Model(schema, table, graph, tn, model_digest(doc))


def load_model(source, exact=False):
    """Load a model from a path, JSON string, or already-parsed dict."""
    if isinstance(source, dict):
        return model_from_json(source, exact)
    text = Path(source).read_text() if not str(source).lstrip().startswith("{") else str(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"invalid JSON: {exc}") from exc
    return model_from_json(doc, exact)


def model_digest(doc):
    """Stable content digest of a model document."""
    canonical = json.dumps(doc, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(canonical.encode()).hexdigest()[:16]
