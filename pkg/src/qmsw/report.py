"""
Verification reports and sweep configurations.

A report lists every identity instance that was checked.  Passed cases keep
only SHA-256 digests of both sides; failed cases keep the full serialized
values so a counterexample can be replayed.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .combinat import DiagIndex, ShapeError, diag_indices, skew_shapes
from .connect import RegionVariant
from .sums import Reading


def digest(obj: Any) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


@dataclass
class Case:
    input: Dict[str, Any]
    lhs: Any
    rhs: Any
    equal: bool
    detail: Optional[Dict[str, Any]] = None

    @classmethod
    def make(cls, input: Dict[str, Any], lhs: Any, rhs: Any, equal: bool, detail=None) -> Case:
        """Build a case from serialized sides, hashing them when the case passed."""
        if equal:
            return cls(input, {"sha256": digest(lhs)}, {"sha256": digest(rhs)}, True)
        return cls(input, lhs, rhs, False, detail)

    def to_json(self) -> dict:
        out = {"input": self.input, "lhs": self.lhs, "rhs": self.rhs, "equal": self.equal}
        if self.detail is not None:
            out["detail"] = self.detail
        return out

    @classmethod
    def from_json(cls, obj: dict) -> Case:
        return cls(obj["input"], obj["lhs"], obj["rhs"], bool(obj["equal"]), obj.get("detail"))


@dataclass
class VerificationReport:
    theorem: str
    parameters: Dict[str, Any]
    cases: List[Case]
    resolved_variants: Dict[str, Any] = field(default_factory=lambda: {"linear_region": None, "schur_reading": None})
    wall_time_ms: int = 0

    @property
    def summary(self) -> Dict[str, int]:
        passed = sum(c.equal for c in self.cases)
        return {"total": len(self.cases), "passed": passed, "failed": len(self.cases) - passed}

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "parameters": self.parameters,
            "cases": [c.to_json() for c in self.cases],
            "resolved_variants": self.resolved_variants,
            "summary": self.summary,
            "wall_time_ms": self.wall_time_ms,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1, ensure_ascii=False)

    @classmethod
    def from_json(cls, obj: dict) -> VerificationReport:
        report = cls(
            obj["theorem"],
            obj["parameters"],
            [Case.from_json(c) for c in obj["cases"]],
            obj["resolved_variants"],
            int(obj["wall_time_ms"]),
        )
        if "summary" in obj and obj["summary"] != report.summary:
            raise ValueError("report summary does not match its cases")
        return report

    @classmethod
    def loads(cls, text: str) -> VerificationReport:
        return cls.from_json(json.loads(text))


def parse_range(text: str) -> List[int]:
    """
    ``"2..5"``, ``"3"`` or ``"1,4,6"``.

    >>> parse_range("2..5")
    [2, 3, 4, 5]
    """
    text = str(text).strip()
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"cannot parse range {text!r}") from None


@dataclass
class SweepConfig:
    max_weight: int = 4
    max_depth: Optional[int] = None
    uppers: List[int] = field(default_factory=lambda: list(range(1, 6)))
    levels: List[int] = field(default_factory=lambda: list(range(2, 9)))
    shapes: Any = "builtin"
    max_cells: int = 5
    max_span: int = 3
    shape_weights: Sequence[int] = (1, 2)
    readings: List[Reading] = field(default_factory=lambda: list(Reading))
    variants: List[RegionVariant] = field(default_factory=lambda: list(RegionVariant))
    evaluators: List[str] = field(default_factory=lambda: ["dp", "naive"])
    jobs: int = 1

    def __post_init__(self):
        if self.max_weight < 0 or (self.max_depth is not None and self.max_depth < 1):
            raise ValueError("weights and depths must be non-negative")
        if any(N < 1 for N in self.uppers) or any(N < 1 for N in self.levels):
            raise ValueError("upper bounds and levels must be positive")
        if self.max_cells < 0 or self.max_span < 1 or self.jobs < 1:
            raise ValueError("max_cells must be non-negative, max_span and jobs positive")
        if not self.evaluators or any(e not in ("dp", "naive") for e in self.evaluators):
            raise ValueError(f"unknown evaluator in {self.evaluators}")
        self.readings = [Reading(r) for r in self.readings]
        self.variants = [RegionVariant(v) for v in self.variants]
        if not self.readings or not self.variants:
            raise ValueError("at least one reading and one region variant are needed")

    def diag_indices(self) -> List[DiagIndex]:
        if self.shapes == "builtin":
            return list(diag_indices(skew_shapes(self.max_cells), self.shape_weights))
        out = []
        for obj in self.shapes:
            if isinstance(obj, DiagIndex):
                out.append(obj)
                continue
            try:
                out.append(DiagIndex.from_json(obj))
            except (KeyError, TypeError) as exc:
                raise ShapeError(f"malformed shape entry {obj!r}") from exc
        return out

    def to_json(self) -> dict:
        return {
            "max_weight": self.max_weight,
            "max_depth": self.max_depth,
            "uppers": self.uppers,
            "levels": self.levels,
            "shapes": self.shapes if self.shapes == "builtin" else [s.to_json() if isinstance(s, DiagIndex) else s for s in self.shapes],
            "max_cells": self.max_cells,
            "max_span": self.max_span,
            "shape_weights": list(self.shape_weights),
            "readings": [r.value for r in self.readings],
            "variants": [v.value for v in self.variants],
            "evaluators": self.evaluators,
        }

    @classmethod
    def from_json(cls, obj: dict) -> SweepConfig:
        known = {
            "max_weight", "max_depth", "uppers", "levels", "shapes", "max_cells", "max_span",
            "shape_weights", "readings", "variants", "evaluators", "jobs",
        }
        extra = set(obj) - known
        if extra:
            raise ValueError(f"unknown config keys {sorted(extra)}")
        obj = dict(obj)
        for key in ("uppers", "levels"):
            if key in obj and isinstance(obj[key], str):
                obj[key] = parse_range(obj[key])
        return cls(**obj)
