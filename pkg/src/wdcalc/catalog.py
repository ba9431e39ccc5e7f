"""Cuspidal-data catalogs: a UTF-8 JSON array of entries.

    {"name": "rho", "dim": 2, "unitary": true, "self_dual": "ext2",
     "std_pole_shifts": [], "explicit": {"c": "1", "m": 0}}

``explicit`` is only allowed for dim 1; for explicit entries the other pole
fields may be omitted and are then derived from the inverse root.
Rationals are strings "p/q".
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterator, Mapping

from .cuspidal import CuspidalDatum, ExplicitChar, SelfDual
from .errors import CatalogError, DomainError
from .halfint import format_rational

ENV_VAR = "WDCALC_CATALOG"
_KEYS = {"name", "dim", "unitary", "self_dual", "std_pole_shifts", "explicit"}


class Catalog(Mapping):
    def __init__(self, entries=()):
        self._by_name: dict[str, CuspidalDatum] = {}
        for e in entries:
            if e.name in self._by_name:
                raise CatalogError(f"duplicate cuspidal name {e.name!r} (names must be unique)")
            self._by_name[e.name] = e

    def __getitem__(self, name: str) -> CuspidalDatum:
        return self._by_name[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._by_name)

    def __len__(self) -> int:
        return len(self._by_name)

    def lookup(self, name: str) -> CuspidalDatum:
        try:
            return self._by_name[name]
        except KeyError:
            raise DomainError(f"unknown cuspidal {name!r}: not in the catalog") from None

    def to_json(self) -> list[dict]:
        return [entry_to_json(e) for e in self._by_name.values()]


def _rational(x, where):
    if isinstance(x, bool):
        raise CatalogError(f"{where}: expected a rational string, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if not isinstance(x, str):
        raise CatalogError(f"{where}: rationals are written as strings 'p/q', got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise CatalogError(f"{where}: not a rational {x!r}") from None


def _self_dual(value, where) -> SelfDual:
    claims = {v for v in value if isinstance(v, str)} if isinstance(value, list) else {value}
    if {"sym2", "ext2"} <= claims or "both" in claims:
        raise CatalogError(
            f"{where}: invariant 'at most one self-duality type' violated (both sym2 and ext2 claimed)"
        )
    if isinstance(value, list):
        value = value[0] if len(value) == 1 else None
    try:
        return SelfDual(value)
    except ValueError:
        raise CatalogError(f"{where}: self_dual must be 'sym2', 'ext2' or 'none', got {value!r}") from None


def entry_from_json(obj, index: int = 0) -> CuspidalDatum:
    where = f"catalog entry {index}"
    if not isinstance(obj, dict):
        raise CatalogError(f"{where}: expected an object")
    if "name" in obj:
        where += f" ({obj['name']!r})"
    unknown = set(obj) - _KEYS
    if unknown:
        raise CatalogError(f"{where}: unknown fields {sorted(unknown)}")
    for key in ("name", "dim"):
        if key not in obj:
            raise CatalogError(f"{where}: missing required field {key!r}")
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise CatalogError(f"{where}: dim must be an integer")
    if "unitary" in obj and not isinstance(obj["unitary"], bool):
        raise CatalogError(f"{where}: unitary must be true or false")
    explicit = None
    if obj.get("explicit") is not None:
        ex = obj["explicit"]
        if not isinstance(ex, dict) or set(ex) - {"c", "m"} or "c" not in ex:
            raise CatalogError(f"{where}: explicit must be an object {{'c': 'p/q', 'm': int}}")
        m = ex.get("m", 0)
        if not isinstance(m, int) or isinstance(m, bool):
            raise CatalogError(f"{where}: explicit.m must be an integer")
        try:
            explicit = ExplicitChar(_rational(ex["c"], where + ".explicit.c"), m)
        except DomainError as exc:
            raise CatalogError(f"{where}: {exc}") from None
    shifts = obj.get("std_pole_shifts")
    if shifts is not None and not isinstance(shifts, list):
        raise CatalogError(f"{where}: std_pole_shifts must be a list")
    try:
        if explicit is not None:
            unitary = obj.get("unitary", explicit.is_unitary)
            self_dual = _self_dual(obj["self_dual"], where) if "self_dual" in obj else explicit.self_dual()
            poles = (
                frozenset(_rational(u, where) for u in shifts) if shifts is not None else explicit.std_poles()
            )
        else:
            unitary = obj.get("unitary", True)
            self_dual = _self_dual(obj.get("self_dual", "none"), where)
            poles = frozenset(_rational(u, where) for u in shifts or [])
        return CuspidalDatum(obj["name"], dim, unitary, self_dual, poles, explicit)
    except DomainError as exc:
        raise CatalogError(f"{where}: {exc}") from None


def entry_to_json(e: CuspidalDatum) -> dict:
    out = {
        "name": e.name,
        "dim": e.dim,
        "unitary": e.unitary,
        "self_dual": e.self_dual.value,
        "std_pole_shifts": [format_rational(u) for u in sorted(e.std_pole_shifts)],
    }
    if e.explicit is not None:
        out["explicit"] = {"c": format_rational(e.explicit.c), "m": e.explicit.m}
    return out


def catalog_from_json(data) -> Catalog:
    if not isinstance(data, list):
        raise CatalogError("catalog must be a JSON array of entries")
    return Catalog(entry_from_json(obj, i) for i, obj in enumerate(data))


def load_catalog(path: str | os.PathLike) -> Catalog:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {str(path)!r}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog {str(path)!r} is not valid JSON: {exc}") from None
    return catalog_from_json(data)


def default_catalog() -> Catalog:
    text = resources.files("wdcalc").joinpath("data/default_catalog.json").read_text(encoding="utf-8")
    return catalog_from_json(json.loads(text))


def resolve_catalog(path: str | None = None) -> Catalog:
    """--catalog flag, then $WDCALC_CATALOG, then the bundled default."""
    path = path or os.environ.get(ENV_VAR)
    return load_catalog(path) if path else default_catalog()
