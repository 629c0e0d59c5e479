"""Instance files: a JSON pairing of a group spec with a set system.

Schema: {"n": int, "group": GroupSpec, "sets": [[int, ...], ...]} with
1-based points throughout.
"""

from __future__ import annotations

import json
from pathlib import Path

from .groups import GroupSpec, PermGroup
from .marriage import SetSystem


def parse_instance(obj: dict) -> tuple[PermGroup, SetSystem, GroupSpec]:
    if not isinstance(obj, dict):
        raise ValueError("instance must be a JSON object")
    for field in ("n", "group", "sets"):
        if field not in obj:
            raise ValueError(f"instance missing field {field!r}")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"field 'n' must be a positive int, got {n!r}")
    spec = GroupSpec.from_json(obj["group"])
    if spec.n != n:
        raise ValueError(
            f"group degree {spec.n} does not match instance n = {n}")
    sets = obj["sets"]
    if not isinstance(sets, list) or len(sets) != n:
        raise ValueError(
            f"field 'sets' must list exactly {n} point lists")
    for i, s in enumerate(sets, start=1):
        if not isinstance(s, list) or not all(
                isinstance(p, int) for p in s):
            raise ValueError(f"sets[{i}] must be a list of ints")
    try:
        system = SetSystem.from_sets(n, sets)
    except ValueError as exc:
        raise ValueError(f"bad set system: {exc}") from exc
    group = spec.realize()
    if group.degree != system.n:
        raise ValueError("group/system degree mismatch")
    return group, system, spec


def load_instance(path: str | Path) -> tuple[PermGroup, SetSystem]:
    group, system, _ = load_instance_with_spec(path)
    return group, system


def load_instance_with_spec(
        path: str | Path) -> tuple[PermGroup, SetSystem, GroupSpec]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON at line {exc.lineno}, "
                         f"column {exc.colno}: {exc.msg}") from exc
    try:
        return parse_instance(obj)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def instance_json(spec: GroupSpec, system: SetSystem) -> dict:
    return {
        "n": system.n,
        "group": spec.to_json(),
        "sets": [list(s) for s in system.sets()],
    }


def save_instance(spec: GroupSpec, system: SetSystem,
                  path: str | Path) -> None:
    if spec.n != system.n:
        raise ValueError(
            f"group degree {spec.n} does not match system n = {system.n}")
    path = Path(path)
    path.write_text(
        json.dumps(instance_json(spec, system), indent=2, sort_keys=True)
        + "\n")
