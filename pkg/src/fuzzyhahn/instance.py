"""JSON instance files: parsing, canonical form, and construction of library objects.

Rationals travel as ``"p/q"`` strings and infinities as ``"inf"``/``"-inf"``;
floats never appear on the wire.  :func:`canonical` puts an instance dict in
a normal form (sorted tables, string values) so that parse -> dump -> parse is
the identity and digests are stable.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path

import jsonschema

from .caratheodory import CoverSystem
from .errors import FuzzyHahnError, InstanceError
from .lattice import FuzzySet, Universe
from .measures import FuzzyMeasure, SignedMeasure, _Table, coordinatewise_measure, difference_measure
from .sigma import FuzzySigmaAlgebra, full_cube, generate_algebra
from .values import fmt, to_value

FORMAT = "fuzzyhahn-instance/1"


def _schema() -> dict:
    text = resources.files("fuzzyhahn").joinpath("schemas/instance.schema.json").read_text("utf-8")
    return json.loads(text)


_VALIDATOR = None


def _validator():
    global _VALIDATOR
    if _VALIDATOR is None:
        _VALIDATOR = jsonschema.Draft202012Validator(_schema())
    return _VALIDATOR


def _path(p) -> str:
    out = "$"
    for part in p:
        out += f"[{part}]" if isinstance(part, int) else f".{part}"
    return out


def parse_text(text: str) -> dict:
    """Decode and schema-check an instance; returns the canonical dict."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(exc.msg, where=f"line {exc.lineno} column {exc.colno}") from None
    errors = sorted(_validator().iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise InstanceError(err.message, where=_path(err.absolute_path))
    _check_semantics(data)
    return canonical(data)


def _check_semantics(data: dict):
    n, q = len(data["universe"]), data["resolution"]

    def vec(v, where):
        if len(v) != n:
            raise InstanceError(f"vector has {len(v)} entries, universe has {n}", where)
        for i, k in enumerate(v):
            if not 0 <= k <= q:
                raise InstanceError(f"numerator {k} outside [0, {q}]", f"{where}[{i}]")

    def table(t, where):
        seen = set()
        for i, (v, _) in enumerate(t):
            vec(v, f"{where}[{i}][0]")
            if tuple(v) in seen:
                raise InstanceError(f"duplicate entry for {v}", f"{where}[{i}]")
            seen.add(tuple(v))

    def measure(spec, where):
        if spec["form"] == "table":
            table(spec["values"], f"{where}.values")
        elif spec["form"] == "coordinatewise":
            labels = set(data["universe"])
            for label, t in spec["tables"].items():
                if label not in labels:
                    raise InstanceError(f"unknown point {label!r}", f"{where}.tables")
                if len(t) != q + 1:
                    raise InstanceError(f"needs {q + 1} entries, got {len(t)}", f"{where}.tables.{label}")
            missing = labels - set(spec["tables"])
            if missing:
                raise InstanceError(f"no table for points {sorted(missing)}", f"{where}.tables")

    for i, g in enumerate(data["algebra"].get("generators", [])):
        vec(g, f"$.algebra.generators[{i}]")
    measures = data.get("measures", {})
    for name, spec in measures.items():
        measure(spec, f"$.measures.{name}")
    for name, spec in data.get("signed", {}).items():
        if spec["form"] == "difference":
            for side in ("plus", "minus"):
                if spec[side] not in measures:
                    raise InstanceError(f"unknown measure {spec[side]!r}", f"$.signed.{name}.{side}")
        else:
            measure(spec, f"$.signed.{name}")
    if "cover_system" in data:
        for i, v in enumerate(data["cover_system"]["family"]):
            vec(v, f"$.cover_system.family[{i}]")
        table(data["cover_system"]["tau"], "$.cover_system.tau")
    for k, v in data.get("replay", {}).get("sets", {}).items():
        vec(v, f"$.replay.sets.{k}")


def _canon_value(v) -> str:
    return fmt(to_value(v))


def _canon_table(t) -> list:
    return [[list(v), _canon_value(x)] for v, x in sorted(t, key=lambda p: tuple(p[0]))]


def _canon_measure(spec: dict) -> dict:
    if spec["form"] == "table":
        return {"form": "table", "values": _canon_table(spec["values"])}
    if spec["form"] == "coordinatewise":
        return {
            "form": "coordinatewise",
            "tables": {k: [_canon_value(x) for x in t] for k, t in spec["tables"].items()},
        }
    return {"form": "difference", "plus": spec["plus"], "minus": spec["minus"]}


def canonical(data: dict) -> dict:
    out = {
        "format": FORMAT,
        "universe": list(data["universe"]),
        "resolution": data["resolution"],
    }
    alg = data["algebra"]
    if alg["mode"] == "full-cube":
        out["algebra"] = {"mode": "full-cube"}
    else:
        gens = sorted({tuple(g) for g in alg.get("generators", [])})
        out["algebra"] = {"mode": "generated", "generators": [list(g) for g in gens]}
    if data.get("measures"):
        out["measures"] = {k: _canon_measure(v) for k, v in sorted(data["measures"].items())}
    if data.get("signed"):
        out["signed"] = {k: _canon_measure(v) for k, v in sorted(data["signed"].items())}
    if "cover_system" in data:
        cs = data["cover_system"]
        fam = sorted({tuple(v) for v in cs["family"]})
        out["cover_system"] = {"family": [list(v) for v in fam], "tau": _canon_table(cs["tau"])}
    if "replay" in data:
        out["replay"] = json.loads(json.dumps(data["replay"], sort_keys=True))
    return out


def dumps(data: dict) -> str:
    return json.dumps(canonical(data), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def digest(data: dict) -> str:
    blob = json.dumps(canonical(data), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return "sha256:" + hashlib.sha256(blob.encode("utf-8")).hexdigest()


@dataclass
class Instance:
    """A parsed instance; library objects are built on first access."""

    data: dict
    _cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_text(cls, text: str) -> "Instance":
        return cls(parse_text(text))

    @classmethod
    def load(cls, path) -> "Instance":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise InstanceError(str(exc), where=str(path)) from None
        return cls.from_text(text)

    @classmethod
    def from_dict(cls, data: dict) -> "Instance":
        return cls.from_text(json.dumps(data))

    def dumps(self) -> str:
        return dumps(self.data)

    @property
    def digest(self) -> str:
        return digest(self.data)

    @cached_property
    def universe(self) -> Universe:
        return Universe(self.data["universe"])

    @property
    def resolution(self) -> int:
        return self.data["resolution"]

    def set(self, vec) -> FuzzySet:
        return FuzzySet(self.universe, self.resolution, vec)

    @cached_property
    def algebra(self) -> FuzzySigmaAlgebra:
        alg = self.data["algebra"]
        try:
            if alg["mode"] == "full-cube":
                return full_cube(self.resolution, self.universe)
            gens = [self.set(g) for g in alg.get("generators", [])]
            return generate_algebra(gens, self.resolution, self.universe)
        except FuzzyHahnError as exc:
            raise InstanceError(str(exc), where="$.algebra") from None

    def _build(self, spec: dict, where: str, signed: bool) -> _Table:
        fam = self.algebra
        if spec["form"] == "table":
            table = {}
            for i, (vec, val) in enumerate(spec["values"]):
                s = self.set(vec)
                if s not in fam:
                    raise InstanceError(f"{vec} is not an element of the algebra", f"{where}.values[{i}]")
                table[s] = to_value(val)
            missing = [e for e in fam if e not in table]
            if missing:
                raise InstanceError(
                    f"table is not total: no value for {list(missing[0].numerators)} "
                    f"({len(missing)} missing)",
                    where,
                )
            return SignedMeasure(fam, table) if signed else FuzzyMeasure(fam, table)
        if spec["form"] == "coordinatewise":
            try:
                m = coordinatewise_measure(fam, spec["tables"])
            except FuzzyHahnError as exc:
                raise InstanceError(str(exc), where) from None
            if signed:
                return m if isinstance(m, SignedMeasure) else SignedMeasure(fam, m.values)
            return m if isinstance(m, FuzzyMeasure) else FuzzyMeasure(fam, m.values)
        try:
            return difference_measure(self.measure(spec["plus"]), self.measure(spec["minus"]))
        except FuzzyHahnError as exc:
            raise InstanceError(str(exc), where) from None

    def measure_names(self) -> list[str]:
        return sorted(self.data.get("measures", {}))

    def signed_names(self) -> list[str]:
        return sorted(self.data.get("signed", {}))

    def measure(self, name: str) -> FuzzyMeasure:
        key = ("m", name)
        if key not in self._cache:
            specs = self.data.get("measures", {})
            if name not in specs:
                raise InstanceError(f"no measure named {name!r}", "$.measures")
            self._cache[key] = self._build(specs[name], f"$.measures.{name}", signed=False)
        return self._cache[key]

    def signed(self, name: str) -> SignedMeasure:
        key = ("s", name)
        if key not in self._cache:
            specs = self.data.get("signed", {})
            if name not in specs:
                raise InstanceError(f"no signed measure named {name!r}", "$.signed")
            self._cache[key] = self._build(specs[name], f"$.signed.{name}", signed=True)
        return self._cache[key]

    def cover_system(self) -> CoverSystem:
        cs = self.data.get("cover_system")
        if cs is None:
            raise InstanceError("instance has no cover system", "$.cover_system")
        tau = {self.set(v): to_value(x) for v, x in cs["tau"]}
        try:
            return CoverSystem([self.set(v) for v in cs["family"]], tau)
        except FuzzyHahnError as exc:
            raise InstanceError(str(exc), "$.cover_system") from None


def vec(s: FuzzySet) -> list[int]:
    return list(s.numerators)


def table_spec(m: _Table) -> dict:
    """Table-form wire spec for a measure."""
    return {"form": "table", "values": [[vec(e), fmt(v)] for e, v in m.items()]}


def skeleton(points, resolution: int) -> dict:
    """A full-cube instance with a zero coordinatewise measure ``m`` to fill in."""
    return canonical(
        {
            "format": FORMAT,
            "universe": list(points),
            "resolution": resolution,
            "algebra": {"mode": "full-cube"},
            "measures": {"m": {"form": "coordinatewise", "tables": {p: ["0"] * (resolution + 1) for p in points}}},
        }
    )


def instance_dict(algebra, measures=None, signed=None, cover_system=None, replay=None) -> dict:
    """Wire dict for generated objects; generated algebras are stored by their elements."""
    data = {
        "format": FORMAT,
        "universe": list(algebra.universe.points),
        "resolution": algebra.resolution,
    }
    if algebra.is_full_cube:
        data["algebra"] = {"mode": "full-cube"}
    else:
        data["algebra"] = {"mode": "generated", "generators": [vec(e) for e in algebra]}
    if measures:
        data["measures"] = {k: table_spec(m) for k, m in measures.items()}
    if signed:
        data["signed"] = {k: table_spec(m) for k, m in signed.items()}
    if cover_system is not None:
        data["cover_system"] = {
            "family": [vec(e) for e in cover_system.family],
            "tau": [[vec(e), fmt(v)] for e, v in zip(cover_system.closure, cover_system.tau)],
        }
    if replay is not None:
        data["replay"] = replay
    return canonical(data)
