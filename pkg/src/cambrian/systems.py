"""Named Coxeter systems and the JSON system-file format.

A system file is ``{"rank": n, "names": [...], "m": [[...]]}`` with 1 on the
diagonal and 0 standing for an infinite label.
"""

from __future__ import annotations

import json
import math
import re
from pathlib import Path

from .coxeter import CoxeterMatrixError, CoxeterSystem


def affine_c3() -> CoxeterSystem:
    return CoxeterSystem(
        [[1, 4, 2, 2], [4, 1, 3, 2], [2, 3, 1, 4], [2, 2, 4, 1]],
        ["s0", "s1", "s2", "s3"],
    )


def type_a(n: int) -> CoxeterSystem:
    """The symmetric group S_{n+1}, generators s1..sn."""
    m = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)] for i in range(n)]
    return CoxeterSystem(m, [f"s{i + 1}" for i in range(n)])


def dihedral(m: float) -> CoxeterSystem:
    """I_2(m); ``m`` may be ``math.inf`` (or 0)."""
    return CoxeterSystem([[1, m], [m, 1]], ["s1", "s2"])


def rank3(m12: float, m13: float, m23: float) -> CoxeterSystem:
    return CoxeterSystem([[1, m12, m13], [m12, 1, m23], [m13, m23, 1]], ["s1", "s2", "s3"])


def type_b3() -> CoxeterSystem:
    return rank3(4, 2, 3)


def type_h3() -> CoxeterSystem:
    return rank3(5, 2, 3)


def _label(m: float) -> str:
    return "inf" if m in (0, math.inf) else str(int(m))


def builtin(name: str) -> CoxeterSystem:
    """Look up systems such as "affine_c3", "A3", "B3", "H3", "I2(5)",
    "I2(inf)" or "rank3(4,2,3)"."""
    key = name.strip()
    if key.lower() in ("affine_c3", "c~3", "c3~", "affine-c3"):
        return affine_c3()
    if key.upper() == "B3":
        return type_b3()
    if key.upper() == "H3":
        return type_h3()
    if match := re.fullmatch(r"[Aa](\d+)", key):
        return type_a(int(match.group(1)))
    if match := re.fullmatch(r"I2\((\w+)\)", key):
        m = match.group(1)
        return dihedral(math.inf if m in ("inf", "oo", "0") else int(m))
    if match := re.fullmatch(r"rank3\((\w+),(\w+),(\w+)\)", key.replace(" ", "")):
        labels = [math.inf if x in ("inf", "oo", "0") else int(x) for x in match.groups()]
        return rank3(*labels)
    raise KeyError(f"unknown builtin system {name!r}")


def system_name(system: CoxeterSystem) -> str:
    if system.rank == 4 and system.m == affine_c3().m:
        return "affine_c3"
    if system.rank == 2:
        return f"I2({_label(system.m[0][1])})"
    if system.rank == 3:
        return "rank3({},{},{})".format(*(_label(system.m[i][j]) for i, j in ((0, 1), (0, 2), (1, 2))))
    return "coxeter(" + ",".join(
        _label(system.m[i][j]) for i in range(system.rank) for j in range(i + 1, system.rank)
    ) + ")"


def system_from_json(data: dict) -> CoxeterSystem:
    if "builtin" in data:
        return builtin(data["builtin"])
    try:
        m = data["m"]
    except KeyError:
        raise CoxeterMatrixError("system file needs an \"m\" matrix") from None
    rank = data.get("rank", len(m))
    if rank != len(m):
        raise CoxeterMatrixError(f"rank {rank} does not match a {len(m)}x{len(m)} matrix")
    return CoxeterSystem(m, data.get("names"))


def system_to_json(system: CoxeterSystem) -> dict:
    return {"rank": system.rank, "names": list(system.names), "m": system.coxeter_matrix}


def load_system(source: str | Path) -> CoxeterSystem:
    """A system from a JSON file, or a builtin name if no such file exists."""
    path = Path(source)
    if path.is_file():
        return system_from_json(json.loads(path.read_text()))
    return builtin(str(source))
