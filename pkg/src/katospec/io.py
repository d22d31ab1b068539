"""JSON documents for monoids, spaces, posets and rings."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from . import bits
from .errors import InputError
from .space import BasedSpace, FinitePoset, FiniteSpace, from_open_family


def load(path: Union[str, Path]) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    return doc


def _masks(size: int, lists) -> list:
    out = []
    for pts in lists:
        for p in pts:
            if not isinstance(p, int) or not 0 <= p < size:
                raise InputError(f"point {p!r} outside 0..{size - 1}")
        out.append(bits.mask_of(pts))
    return out


def space_from_json(doc: dict) -> Union[FiniteSpace, BasedSpace]:
    """``{"size", "opens"}`` gives a plain space; ``{"size", "base"}`` a based one."""
    size = doc.get("size")
    if not isinstance(size, int) or size < 0:
        raise InputError("space needs a nonnegative integer 'size'")
    if "base" in doc:
        return BasedSpace.generated(size, _masks(size, doc["base"]))
    if "opens" in doc:
        x = from_open_family(size, _masks(size, doc["opens"]))
        if len(x.opens) != len({bits.mask_of(o) for o in doc["opens"]} | {0, x.whole}):
            raise InputError("'opens' is not closed under union and intersection")
        return x
    raise InputError("space needs 'opens' or 'base'")


def space_to_json(x: FiniteSpace) -> dict:
    return {"size": x.size, "opens": [bits.to_list(u) for u in x.opens]}


def based_to_json(b: BasedSpace) -> dict:
    doc = space_to_json(b.space)
    doc["base"] = [bits.to_list(u) for u in b.base]
    return doc


def poset_from_json(doc: dict) -> FinitePoset:
    """``{"size": n, "le": [[x, y], ...]}`` with each pair meaning ``x <= y``."""
    size = doc.get("size")
    if not isinstance(size, int) or size < 0:
        raise InputError("poset needs a nonnegative integer 'size'")
    return FinitePoset.from_pairs(size, doc.get("le", []))


def poset_to_json(p: FinitePoset) -> dict:
    return {"size": p.size, "le": [list(c) for c in p.covers()]}


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=1)
