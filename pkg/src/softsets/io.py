"""JSON interchange for soft sets, plus the shipped worked-example fixtures.

Document shapes::

    {"kind": "t1ss", "universe": [...], "assignments": {param: [items]}}
    {"kind": "t2ss", "universe": [...],
     "primary": [{"param": ..., "assignments": {under: [items]}}]}

Serialization is canonical (labels sorted, fixed key order, two-space
indent, trailing newline), so parse/serialize round-trips are byte-stable.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .core import (
    TypeOneSoftSet,
    TypeTwoSoftSet,
    ValidationError,
    validate_t1ss,
    validate_t2ss,
)

FIXTURE_NAMES = (
    "houses_F",
    "houses_G",
    "triangle_F",
    "triangle_G",
    "triangle_H",
    "deterministic",
    "diet_ideal",
    "diet_pantry1",
    "diet_pantry2",
)


def _no_duplicate_keys(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise ValidationError(f"duplicate JSON key {key!r}")
        seen.add(key)
    return dict(pairs)


def parse_document(text: str) -> dict:
    """Parse JSON text into a document dict, rejecting duplicate keys.

    Raises json.JSONDecodeError for malformed JSON and ValidationError for a
    structurally invalid document.
    """
    doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object")
    kind = doc.get("kind")
    if kind not in ("t1ss", "t2ss"):
        raise ValidationError(f"unknown document kind {kind!r}")
    if not isinstance(doc.get("universe"), list):
        raise ValidationError("document needs a 'universe' list")
    if kind == "t1ss":
        if not isinstance(doc.get("assignments"), dict):
            raise ValidationError("t1ss document needs an 'assignments' object")
    else:
        primary = doc.get("primary")
        if not isinstance(primary, list):
            raise ValidationError("t2ss document needs a 'primary' list")
        for entry in primary:
            if (
                not isinstance(entry, dict)
                or not isinstance(entry.get("param"), str)
                or not isinstance(entry.get("assignments"), dict)
            ):
                raise ValidationError(
                    "each primary entry needs 'param' and 'assignments'"
                )
    return doc


def document_to_softset(doc: dict) -> TypeOneSoftSet | TypeTwoSoftSet:
    if doc["kind"] == "t1ss":
        return validate_t1ss(doc["universe"], doc["assignments"])
    spec = {}
    for entry in doc["primary"]:
        if entry["param"] in spec:
            raise ValidationError(f"duplicate primary parameter {entry['param']!r}")
        spec[entry["param"]] = entry["assignments"]
    return validate_t2ss(doc["universe"], spec)


def softset_to_document(s: TypeOneSoftSet | TypeTwoSoftSet) -> dict:
    if isinstance(s, TypeOneSoftSet):
        return {
            "kind": "t1ss",
            "universe": list(s.universe.elements),
            "assignments": {p: sorted(img) for p, img in s.as_dict().items()},
        }
    return {
        "kind": "t2ss",
        "universe": list(s.universe.elements),
        "primary": [
            {
                "param": a,
                "assignments": {b: sorted(img) for b, img in inner.as_dict().items()},
            }
            for a, inner in zip(s.primary, s.inners)
        ],
    }


def serialize(s: TypeOneSoftSet | TypeTwoSoftSet) -> str:
    return json.dumps(softset_to_document(s), indent=2, ensure_ascii=False) + "\n"


def parse_softset(text: str) -> TypeOneSoftSet | TypeTwoSoftSet:
    return document_to_softset(parse_document(text))


def load_softset(path: str | Path) -> TypeOneSoftSet | TypeTwoSoftSet:
    return parse_softset(Path(path).read_text(encoding="utf-8"))


def fixture_text(name: str) -> str:
    res = resources.files("softsets.fixtures").joinpath(f"{name}.json")
    return res.read_text(encoding="utf-8")


def load_fixture(name: str) -> TypeOneSoftSet | TypeTwoSoftSet:
    """Load one of the shipped worked-example soft sets by fixture name."""
    return parse_softset(fixture_text(name))
