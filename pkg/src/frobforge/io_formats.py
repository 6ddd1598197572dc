"""JSON formats for groups, C-groups, subgroups and towers.

Group definition: {"name": str?, "degree": int, "generators": [cycles]}
with 1-based cycle notation, identity "()".  A C-group adds "c"; a
subgroup file carries only "generators" relative to its parent's degree; a
tower is {"levels": [cgroup...], "maps": [[image cycle per upper
generator], ...]} with maps[i] going from level i+1 down to level i.
"""

from __future__ import annotations

import json
from typing import Sequence

from .errors import ParseError, ValidationError
from .frobenius import CGroup
from .groups import PermGroup, Subgroup
from .homs import GroupHom
from .perms import Perm, format_perm, parse_perm
from .towers import QuotientTower


def _require(data: dict, key: str, kind):
    if key not in data:
        raise ParseError(f"missing field {key!r}")
    val = data[key]
    if not isinstance(val, kind):
        raise ParseError(f"field {key!r} must be {kind.__name__}")
    return val


def load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    return data


def parse_group_data(data: dict, cap: int | None = None) -> PermGroup:
    degree = _require(data, "degree", int)
    if degree < 1:
        raise ParseError("degree must be positive")
    gens_raw = _require(data, "generators", list)
    gens = [parse_perm(s, degree) for s in gens_raw]
    name = data.get("name", "")
    return PermGroup(degree, gens, cap=cap, name=name)


def parse_cgroup_data(data: dict, cap: int | None = None) -> CGroup:
    group = parse_group_data(data, cap=cap)
    c_raw = _require(data, "c", str)
    c = parse_perm(c_raw, group.degree)
    if c not in group.eset:
        raise ValidationError("distinguished element 'c' is not in the group")
    return CGroup(group, c)


def parse_subgroup_data(data: dict, parent: PermGroup) -> Subgroup:
    gens_raw = _require(data, "generators", list)
    gens = [parse_perm(s, parent.degree) for s in gens_raw]
    for g in gens:
        if g not in parent.eset:
            raise ValidationError(
                f"subgroup generator {format_perm(g)} is not in the parent")
    return Subgroup(parent, gens)


def parse_tower_data(data: dict, cap: int | None = None) -> QuotientTower:
    levels_raw = _require(data, "levels", list)
    maps_raw = _require(data, "maps", list)
    levels = [parse_cgroup_data(d, cap=cap) for d in levels_raw]
    if len(maps_raw) != len(levels) - 1:
        raise ParseError("need exactly one map per adjacent level pair")
    maps = []
    for i, images_raw in enumerate(maps_raw):
        upper, lower = levels[i + 1], levels[i]
        if not isinstance(images_raw, list) or \
                len(images_raw) != len(upper.group.generators):
            raise ParseError(
                f"map {i} needs one image per generator of level {i + 1}")
        images = [parse_perm(s, lower.group.degree) for s in images_raw]
        maps.append(GroupHom(upper.group, lower.group, images))
    return QuotientTower.build(levels, maps)


def serialize_group(group: PermGroup, name: str = "") -> dict:
    return {
        "name": name or group.name,
        "degree": group.degree,
        "generators": [format_perm(g) for g in group.generators],
    }


def serialize_cgroup(cg: CGroup, name: str = "") -> dict:
    data = serialize_group(cg.group, name=name)
    data["c"] = format_perm(cg.c)
    return data


def serialize_subgroup(sub: Subgroup) -> dict:
    return {"generators": [format_perm(g) for g in sub.generators]}


def serialize_perms(perms: Sequence[Perm]) -> list:
    return [format_perm(p) for p in perms]
