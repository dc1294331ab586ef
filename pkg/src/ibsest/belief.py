"""Frames of discernment and crisp/interval belief structures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

SUM_TOL = 1e-9
CRISP_TOL = 1e-12


@dataclass(frozen=True)
class Frame:
    """Ordered set of named hypotheses; order fixes every downstream index."""

    hypotheses: tuple[str, ...]

    def __post_init__(self):
        if not self.hypotheses:
            raise ValueError("frame needs at least one hypothesis")
        if any(not h for h in self.hypotheses):
            raise ValueError("hypothesis names must be non-empty")
        if len(set(self.hypotheses)) != len(self.hypotheses):
            raise ValueError("hypothesis names must be unique")

    @property
    def size(self) -> int:
        return len(self.hypotheses)

    def index(self, name: str) -> int:
        try:
            return self.hypotheses.index(name)
        except ValueError:
            raise KeyError(f"unknown hypothesis {name!r}") from None


@dataclass(frozen=True)
class FocalElement:
    """Non-empty subset of a frame, canonically ordered by frame index."""

    members: tuple[str, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("focal element must be non-empty")
        if len(set(self.members)) != len(self.members):
            raise ValueError("focal element has duplicate members")

    @staticmethod
    def of(frame: Frame, names: Iterable[str]) -> "FocalElement":
        names = list(names)
        idx = [frame.index(n) for n in names]  # raises on unknown members
        ordered = tuple(n for _, n in sorted(zip(idx, names)))
        return FocalElement(ordered)

    def indices(self, frame: Frame) -> tuple[int, ...]:
        return tuple(frame.index(n) for n in self.members)

    def __str__(self) -> str:
        return "{" + ",".join(self.members) + "}"


@dataclass(frozen=True)
class MassEntry:
    focal: FocalElement
    lower: float
    upper: float


@dataclass(frozen=True)
class IntervalBeliefStructure:
    """One observation: focal elements with interval masses [a_i, b_i].

    Structural problems (members outside the frame, duplicate focal
    elements) are constructor errors; the numeric validity conditions are
    checked by :func:`validate_ibs`, which reports rather than raises.
    """

    frame: Frame
    entries: tuple[MassEntry, ...]
    label: str = ""

    def __post_init__(self):
        if not self.entries:
            raise ValueError("belief structure needs at least one entry")
        seen = set()
        for e in self.entries:
            for h in e.focal.members:
                self.frame.index(h)
            if e.focal.members in seen:
                raise ValueError(f"duplicate focal element {e.focal}")
            seen.add(e.focal.members)

    @property
    def lowers(self) -> tuple[float, ...]:
        return tuple(e.lower for e in self.entries)

    @property
    def uppers(self) -> tuple[float, ...]:
        return tuple(e.upper for e in self.entries)


@dataclass
class ValidityReport:
    ok: bool
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def validate_ibs(structure: IntervalBeliefStructure) -> ValidityReport:
    """Check the interval-mass validity conditions.

    Per entry: 0 <= a_i <= b_i <= 1. Overall: sum(a) <= 1 <= sum(b).
    Entries with a_i = b_i = 0 are accepted but flagged as warnings.
    """
    violations: list[str] = []
    warnings: list[str] = []
    for i, e in enumerate(structure.entries):
        if not (0.0 <= e.lower <= e.upper <= 1.0):
            violations.append(
                f"entry {i} {e.focal}: mass bounds [{e.lower}, {e.upper}] "
                f"violate 0 <= a <= b <= 1"
            )
        elif e.lower == 0.0 and e.upper == 0.0:
            warnings.append(f"entry {i} {e.focal}: zero mass interval [0, 0]")
    sum_a = sum(structure.lowers)
    sum_b = sum(structure.uppers)
    if sum_a > 1.0 + SUM_TOL:
        violations.append(f"sum of lower masses {sum_a} exceeds 1")
    if sum_b < 1.0 - SUM_TOL:
        violations.append(f"sum of upper masses {sum_b} is below 1")
    return ValidityReport(ok=not violations, violations=violations, warnings=warnings)


def is_crisp(structure: IntervalBeliefStructure) -> bool:
    """True iff every mass interval is a point and the masses sum to 1."""
    if any(e.lower != e.upper for e in structure.entries):
        return False
    return abs(sum(structure.lowers) - 1.0) <= CRISP_TOL


@dataclass(frozen=True)
class ObservationSet:
    """Ordered collection of observations over a shared frame."""

    frame: Frame
    observations: tuple[IntervalBeliefStructure, ...]

    def __post_init__(self):
        if not self.observations:
            raise ValueError("observation set must be non-empty")
        for obs in self.observations:
            if obs.frame != self.frame:
                raise ValueError("all observations must share the frame")

    @property
    def size(self) -> int:
        return len(self.observations)
