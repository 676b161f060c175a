"""JSON family files.

A file looks like::

    {"format_version":1,"meta":{"bound_claimed":13,"method":"catalog","size":13},
     "n":13,"paths":[[1,3,4,...],...]}

Keys are sorted and separators compact, so saving a loaded file reproduces
it byte for byte.  Labels are always the standard 1..n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .circulant import PathError, PathFamily, check_order, check_path

FORMAT_VERSION = 1


class FamilyFileError(ValueError):
    """Malformed family file; ``index`` names the offending path if any."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


@dataclass
class FamilyFile:
    family: PathFamily
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_construction(cls, family: PathFamily, provenance, with_trace: bool = False):
        meta = provenance.to_json()
        if not with_trace:
            meta.pop("trace", None)
        return cls(family, meta)

    def to_obj(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "n": self.family.n,
            "paths": [list(p) for p in self.family.paths],
            "meta": self.meta,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":")) + "\n"

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def loads(cls, text: str) -> "FamilyFile":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FamilyFileError(f"not valid JSON: {exc}") from None
        return cls.from_obj(obj)

    @classmethod
    def load(cls, path: str | Path) -> "FamilyFile":
        return cls.loads(Path(path).read_text())

    @classmethod
    def from_obj(cls, obj) -> "FamilyFile":
        if not isinstance(obj, dict):
            raise FamilyFileError("top level must be a JSON object")
        version = obj.get("format_version")
        if version != FORMAT_VERSION:
            raise FamilyFileError(f"unsupported format_version {version!r}")
        n = obj.get("n")
        if isinstance(n, bool) or not isinstance(n, int):
            raise FamilyFileError(f"n must be an integer, got {n!r}")
        try:
            check_order(n)
        except ValueError as exc:
            raise FamilyFileError(str(exc)) from None
        paths = obj.get("paths")
        if not isinstance(paths, list):
            raise FamilyFileError("paths must be a list")
        checked = []
        for i, p in enumerate(paths):
            if not isinstance(p, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in p):
                raise FamilyFileError(f"path {i}: must be a list of integers", i)
            try:
                checked.append(check_path(n, p))
            except PathError as exc:
                raise FamilyFileError(f"path {i}: {exc}", i) from None
        meta = obj.get("meta", {})
        if not isinstance(meta, dict):
            raise FamilyFileError("meta must be an object")
        return cls(PathFamily(n, tuple(checked)), meta)
