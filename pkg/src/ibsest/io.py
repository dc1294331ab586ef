"""Line-oriented text format for observation files and result reports.

Observation files declare the frame first, then one block per
observation:

    frame: H1, H2, H3
    obs: 1
      {H1} 0.30, 0.40
      {H1, H2, H3} 0.10, 0.20

A single mass number means a degenerate (crisp) mass. Blank lines and
`#` comments are ignored.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass

from .belief import (
    FocalElement,
    Frame,
    IntervalBeliefStructure,
    MassEntry,
    ObservationSet,
)
from .estimator import EstimationResult
from .intervalprob import IntervalProbabilities, ignorance

TOOL_VERSION = "0.1.0"

_ENTRY_RE = re.compile(r"^\{([^}]*)\}\s+(.+)$")


class ObservationParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _parse_mass(text: str, line_no: int) -> tuple[float, float]:
    parts = [p.strip() for p in text.split(",")]
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise ObservationParseError(line_no, f"bad mass {text!r}") from None
    if len(values) == 1:
        return values[0], values[0]
    if len(values) == 2:
        return values[0], values[1]
    raise ObservationParseError(line_no, f"mass needs 1 or 2 numbers, got {text!r}")


def parse_observation_text(text: str) -> ObservationSet:
    frame: Frame | None = None
    observations: list[IntervalBeliefStructure] = []
    label: str | None = None
    entries: list[MassEntry] = []

    def flush(line_no):
        nonlocal label, entries
        if label is None:
            return
        if not entries:
            raise ObservationParseError(line_no, f"observation {label!r} has no entries")
        try:
            observations.append(
                IntervalBeliefStructure(frame, tuple(entries), label=label)
            )
        except ValueError as exc:
            raise ObservationParseError(line_no, f"observation {label!r}: {exc}")
        label, entries = None, []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("frame:"):
            if frame is not None:
                raise ObservationParseError(line_no, "frame declared twice")
            names = [n.strip() for n in line[len("frame:"):].split(",")]
            try:
                frame = Frame(tuple(n for n in names if n))
            except ValueError as exc:
                raise ObservationParseError(line_no, str(exc))
            continue
        if frame is None:
            raise ObservationParseError(line_no, "frame must be declared first")
        if line.startswith("obs:"):
            flush(line_no)
            label = line[len("obs:"):].strip()
            if not label:
                raise ObservationParseError(line_no, "observation label missing")
            continue
        match = _ENTRY_RE.match(line)
        if match is None:
            raise ObservationParseError(line_no, f"unrecognized line {raw.strip()!r}")
        if label is None:
            raise ObservationParseError(line_no, "mass entry outside an observation")
        names = [n.strip() for n in match.group(1).split(",") if n.strip()]
        if not names:
            raise ObservationParseError(line_no, "empty focal element")
        lower, upper = _parse_mass(match.group(2), line_no)
        try:
            focal = FocalElement.of(frame, names)
            entries.append(MassEntry(focal, lower, upper))
        except (KeyError, ValueError) as exc:
            raise ObservationParseError(line_no, str(exc))
    flush(line_no=len(text.splitlines()) + 1)
    if frame is None:
        raise ObservationParseError(1, "no frame declaration")
    if not observations:
        raise ObservationParseError(1, "no observations")
    return ObservationSet(frame, tuple(observations))


def parse_observation_file(path) -> ObservationSet:
    with open(path, encoding="utf-8") as fh:
        return parse_observation_text(fh.read())


def _format_mass(lower: float, upper: float) -> str:
    if lower == upper:
        return f"{lower:.10g}"
    return f"{lower:.10g}, {upper:.10g}"


def serialize_observation_set(observations: ObservationSet) -> str:
    lines = ["frame: " + ", ".join(observations.frame.hypotheses), ""]
    for obs in observations.observations:
        lines.append(f"obs: {obs.label}")
        for e in obs.entries:
            lines.append(
                f"  {{{', '.join(e.focal.members)}}} {_format_mass(e.lower, e.upper)}"
            )
        lines.append("")
    return "\n".join(lines)


def file_digest(path) -> str:
    with open(path, "rb") as fh:
        return "sha256:" + hashlib.sha256(fh.read()).hexdigest()


# ---------------------------------------------------------------------------
# Expected-result files (reference tables): same frame header, then
#   row: alpha=2
#     H1 0.8397, 0.9433
#     ...
#     I1 0.1036


@dataclass(frozen=True)
class ExpectedRow:
    alpha: float
    theta: IntervalProbabilities
    i1: float | None


def parse_expected_text(text: str) -> list[ExpectedRow]:
    frame: Frame | None = None
    rows: list[ExpectedRow] = []
    alpha: float | None = None
    bounds: dict[str, tuple[float, float]] = {}
    i1: float | None = None

    def flush(line_no):
        nonlocal alpha, bounds, i1
        if alpha is None:
            return
        missing = [h for h in frame.hypotheses if h not in bounds]
        if missing:
            raise ObservationParseError(line_no, f"row alpha={alpha} missing {missing}")
        theta = IntervalProbabilities(
            frame,
            tuple(bounds[h][0] for h in frame.hypotheses),
            tuple(bounds[h][1] for h in frame.hypotheses),
        )
        rows.append(ExpectedRow(alpha, theta, i1))
        alpha, bounds, i1 = None, {}, None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("frame:"):
            names = [n.strip() for n in line[len("frame:"):].split(",")]
            frame = Frame(tuple(n for n in names if n))
            continue
        if frame is None:
            raise ObservationParseError(line_no, "frame must be declared first")
        if line.startswith("row:"):
            flush(line_no)
            spec = line[len("row:"):].strip()
            if not spec.startswith("alpha="):
                raise ObservationParseError(line_no, f"bad row header {spec!r}")
            alpha = float(spec[len("alpha="):])
            continue
        name, _, rest = line.partition(" ")
        if alpha is None:
            raise ObservationParseError(line_no, "value outside a row")
        if name == "I1":
            i1 = float(rest)
        else:
            if name not in frame.hypotheses:
                raise ObservationParseError(line_no, f"unknown hypothesis {name!r}")
            bounds[name] = _parse_mass(rest, line_no)
    flush(line_no=len(text.splitlines()) + 1)
    return rows


def parse_expected_file(path) -> list[ExpectedRow]:
    with open(path, encoding="utf-8") as fh:
        return parse_expected_text(fh.read())


# ---------------------------------------------------------------------------
# Result reports


def render_report(
    results: list[EstimationResult], input_digest: str, seed: int
) -> str:
    """Structured key/value + row-record report; byte-stable given inputs."""
    lines = [
        f"tool_version: {TOOL_VERSION}",
        f"seed: {seed}",
        f"input_digest: {input_digest}",
        f"rows: {len(results)}",
    ]
    for res in results:
        frame = res.theta.frame
        parts = [f"row: alpha={res.alpha:.10g}"]
        for i, h in enumerate(frame.hypotheses):
            parts.append(
                f"{h}=[{res.theta.lowers[i]:.10g},{res.theta.uppers[i]:.10g}]"
            )
        parts.append(f"I1={ignorance(res.theta, 1.0):.10g}")
        parts.append(f"objective={res.objective:.10g}")
        parts.append(
            f"L=[{res.joint_likelihood.lo:.10g},{res.joint_likelihood.hi:.10g}]"
        )
        parts.append(f"sweeps={sum(r.sweeps for r in res.restarts)}")
        parts.append(f"converged={'yes' if res.converged else 'no'}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def render_table(results: list[EstimationResult]) -> str:
    """Human-readable table, values rounded half-even to 4 decimals."""
    frame = results[0].theta.frame
    headers = ["alpha"] + [f"P({h})" for h in frame.hypotheses] + ["I1", "objective"]
    rows = []
    for res in results:
        cells = [f"{res.alpha:g}"]
        for i in range(frame.size):
            cells.append(f"[{res.theta.lowers[i]:.4f}, {res.theta.uppers[i]:.4f}]")
        cells.append(f"{ignorance(res.theta, 1.0):.4f}")
        cells.append(f"{res.objective:.4f}")
        rows.append(cells)
    widths = [max(len(headers[c]), *(len(r[c]) for r in rows)) for c in range(len(headers))]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    for r in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return "\n".join(out)
