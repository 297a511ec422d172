"""Serialization: poset export in three formats, canonical report JSON,
and a content-addressed on-disk poset cache.

All exports are deterministic byte for byte: elements are sorted by
(height, repr) and relations lexicographically, and JSON is emitted with
sorted keys and fixed separators.  Labels round-trip through repr /
ast.literal_eval, which covers the nested-tuple keys used everywhere in
this package.
"""

from __future__ import annotations

import ast
import hashlib
import json
import os
import warnings
from typing import Callable, Dict, List, Optional, Tuple

from .posets import FinitePoset

EXPORT_FORMATS = ("text", "structured", "dot")

# DOT is for eyeballing small examples; anything bigger belongs in the
# structured format.
DOT_ELEMENT_LIMIT = 600


def _sorted_elements(P: FinitePoset) -> List:
    h = P.heights()
    return sorted(P.elements, key=lambda x: (h[x], repr(x)))


def _sorted_covers(P: FinitePoset) -> List[Tuple]:
    pairs = [(a, b) for a in P for b in P.covers(a)]
    return sorted(pairs, key=lambda e: (repr(e[0]), repr(e[1])))


def export_poset(P: FinitePoset, format: str = "text") -> str:
    if format == "text":
        return _export_text(P)
    if format == "structured":
        return _export_structured(P)
    if format == "dot":
        return _export_dot(P)
    raise ValueError(f"unknown format {format!r}; pick one of {EXPORT_FORMATS}")


def _export_text(P: FinitePoset) -> str:
    h = P.heights()
    covers = _sorted_covers(P)
    lines = [f"poset with {len(P)} elements, dim {P.dim()}"]
    for x in _sorted_elements(P):
        lines.append(f"  h={h[x]} {x!r}")
    lines.append(f"covers ({len(covers)}):")
    for a, b in covers:
        lines.append(f"  {a!r} < {b!r}")
    return "\n".join(lines) + "\n"


def _export_structured(P: FinitePoset) -> str:
    h = P.heights()
    order = _sorted_elements(P)
    payload = {
        "kind": "finite-poset",
        "elements": [repr(x) for x in order],
        "heights": [h[x] for x in order],
        "covers": [[repr(a), repr(b)] for a, b in _sorted_covers(P)],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _export_dot(P: FinitePoset) -> str:
    if len(P) > DOT_ELEMENT_LIMIT:
        raise ValueError(
            f"poset has {len(P)} elements; dot export is capped at "
            f"{DOT_ELEMENT_LIMIT} to keep graphs renderable, use the "
            "structured format instead")
    ids = {x: f"n{i}" for i, x in enumerate(_sorted_elements(P))}
    lines = ["digraph poset {", "  rankdir=BT;"]
    for x in _sorted_elements(P):
        label = repr(x).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  {ids[x]} [label="{label}"];')
    for a, b in _sorted_covers(P):
        lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_from_structured(text: str) -> FinitePoset:
    """Inverse of the structured export (labels via ast.literal_eval)."""
    payload = json.loads(text)
    assert payload.get("kind") == "finite-poset", "not a poset payload"
    elements = [ast.literal_eval(s) for s in payload["elements"]]
    heights = dict(zip(elements, payload["heights"]))
    covers = [(ast.literal_eval(a), ast.literal_eval(b))
              for a, b in payload["covers"]]
    return FinitePoset(elements, covers, heights=heights)


# ---------------------------------------------------------------------------
# canonical report JSON

def canonical_json(payload: dict) -> str:
    """Stable JSON: sorted keys, no whitespace variation, trailing newline."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def checksum(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# poset cache

CACHE_VERSION = 1


class PosetCache:
    """Content-addressed store for built posets.

    The key hashes the cache version together with a descriptor tuple
    (builder name, ring name, numeric parameters), so bumping the version
    or changing any parameter misses cleanly.  A corrupt entry is rebuilt
    and rewritten with a warning, never trusted.
    """

    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def key(self, descriptor: Tuple) -> str:
        raw = repr((CACHE_VERSION,) + tuple(descriptor))
        return hashlib.sha256(raw.encode("utf-8")).hexdigest()

    def path(self, descriptor: Tuple) -> str:
        return os.path.join(self.directory, self.key(descriptor) + ".json")

    def get(self, descriptor: Tuple, build: Callable[[], FinitePoset]) -> FinitePoset:
        path = self.path(descriptor)
        if os.path.exists(path):
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    stored = json.load(fh)
                body = stored["body"]
                if checksum(body) != stored["checksum"]:
                    raise ValueError("checksum mismatch")
                return poset_from_structured(body)
            except Exception as exc:  # corrupt entries are never fatal
                warnings.warn(
                    f"cache entry for {descriptor!r} is corrupt ({exc}); rebuilding")
        P = build()
        body = export_poset(P, "structured")
        blob = canonical_json({"descriptor": repr(tuple(descriptor)),
                               "checksum": checksum(body), "body": body})
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(blob)
        os.replace(tmp, path)
        return P
