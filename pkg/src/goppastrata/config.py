"""Reading code configs and writing index-serialized exports."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .agcode import CodeConfig, GoppaCode, build_code
from .curves import Curve, Point, RATIONAL, rational_points
from .galois import FieldSpec, field_build
from .linalg import Matrix

SHIPPED = ("rs_gf7_m3", "rs_gf7_m2", "rs_gf11_m6", "hermitian_q2_m4", "hermitian_q3_m10")


def shipped_path(name: str) -> Path:
    return Path(str(resources.files("goppastrata") / "configs" / f"{name}.json"))


def load_raw(ref: str | Path) -> dict:
    """Parse a config given as a file path or the name of a shipped config."""
    path = Path(ref)
    if not path.exists() and str(ref) in SHIPPED:
        path = shipped_path(str(ref))
    with open(path) as fh:
        return json.load(fh)


def field_from_json(raw: dict) -> FieldSpec:
    return field_build(int(raw["p"]), int(raw.get("e", 1)), raw.get("modulus"))


def config_from_dict(raw: dict) -> CodeConfig:
    F = field_from_json(raw["field"])
    c = raw["curve"]
    curve = Curve(c["family"], F, c.get("q0"))
    pts_raw = raw.get("points", "all")
    if pts_raw == "all":
        points = rational_points(curve)
    else:
        points = []
        for entry in pts_raw:
            if isinstance(entry, int):
                if curve.family != RATIONAL:
                    raise ValueError("bare x indices are only accepted for the rational curve")
                entry = [entry, 0]
            points.append(Point(F(entry[0]), F(entry[1])))
    return CodeConfig(curve, tuple(points), int(raw["m"]))


def load_config(ref: str | Path) -> CodeConfig:
    return config_from_dict(load_raw(ref))


def load_code(ref: str | Path) -> GoppaCode:
    return build_code(load_config(ref))


def config_to_dict(config: CodeConfig) -> dict:
    return {
        "field": config.curve.field.describe(),
        "curve": config.curve.describe(),
        "points": [list(P.indices()) for P in config.points],
        "m": config.m,
    }


def matrix_to_json(A: Matrix) -> dict:
    return A.to_json()


def matrix_from_json(raw: dict) -> Matrix:
    F = field_from_json(raw["field"])
    return Matrix.from_rows(F, raw["entries"], int(raw["cols"]))


def code_to_dict(code: GoppaCode) -> dict:
    return {
        "config": config_to_dict(code.config),
        "params": code.params(),
        "basis": [[f.a, f.b] for f in code.basis],
        "dual_basis": [[f.a, f.b] for f in code.dual_basis],
        "generator": matrix_to_json(code.generator),
        "parity": matrix_to_json(code.parity),
        "multipliers": list(code.multipliers),
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
