"""File formats.

Task sets are plain text: a header line "n d m", then m edge lines of d
space-separated ascending file indices.  '#' starts a comment; blank lines
are ignored.  Metadata comments of the form "# key: value" are recognized
for format_version, phi, seed, and generator.

Partitions are a single JSON document with keys format_version, n, d, N,
case, params, groups, footprints, metadata.  Sweep output is CSV with a
fixed header.
"""

from __future__ import annotations

import json

from .design import FinalPartition, ICParameters
from .errors import DuplicateEdge, IndexOutOfBounds, ParseError, SchemaError
from .harness import SweepRecord
from .tasks import TaskSet

FORMAT_VERSION = 1

SWEEP_COLUMNS = [
    "n", "d", "N", "phi", "seed", "case", "k", "s", "g",
    "pi", "pi_lb", "gap", "delta", "delta_X", "arf", "bounds_ok",
]

_TASK_META_KEYS = ("format_version", "phi", "seed", "generator")


def parse_tasks(text: str) -> TaskSet:
    """Parse the task-set text format into a canonical TaskSet."""
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    meta: dict[str, str] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        comment = None
        if "#" in raw:
            raw, _, comment = raw.partition("#")
            comment = comment.strip()
            if ":" in comment:
                key, _, value = comment.partition(":")
                if key.strip() in _TASK_META_KEYS:
                    meta[key.strip()] = value.strip()
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        try:
            values = [int(x) for x in parts]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno)
        if header is None:
            if len(values) != 3:
                raise ParseError("header must be 'n d m'", lineno)
            n, d, m = values
            if n < 1 or d < 1 or d > n or m < 0:
                raise ParseError(f"invalid header n={n} d={d} m={m}", lineno)
            header = (n, d, m)
            continue
        n, d, m = header
        if len(values) != d:
            raise ParseError(f"expected {d} elements, got {len(values)}", lineno)
        if any(a >= b for a, b in zip(values, values[1:])):
            raise ParseError(f"elements must be strictly ascending: {values}", lineno)
        if values[0] < 1 or values[-1] > n:
            raise IndexOutOfBounds(f"elements of {values} outside [1, {n}]", lineno)
        edge = tuple(values)
        if edge in seen:
            raise DuplicateEdge(f"edge {edge} listed twice", lineno)
        seen.add(edge)
        edges.append(edge)

    if header is None:
        raise ParseError("empty input: missing 'n d m' header")
    n, d, m = header
    if len(edges) != m:
        raise ParseError(f"header announced {m} edges but {len(edges)} were given")

    phi = float(meta["phi"]) if "phi" in meta else None
    seed = int(meta["seed"]) if "seed" in meta else None
    generator = meta.get("generator")
    return TaskSet(
        n, d, tuple(sorted(edges)), phi=phi, seed=seed, generator_id=generator
    )


def emit_tasks(tasks: TaskSet) -> str:
    """Serialize a TaskSet; parse_tasks(emit_tasks(x)) == x."""
    lines = [f"# format_version: {FORMAT_VERSION}"]
    if tasks.phi is not None:
        lines.append(f"# phi: {tasks.phi!r}")
    if tasks.seed is not None:
        lines.append(f"# seed: {tasks.seed}")
    if tasks.generator_id is not None:
        lines.append(f"# generator: {tasks.generator_id}")
    lines.append(f"{tasks.n} {tasks.d} {len(tasks.edges)}")
    lines.extend(" ".join(str(x) for x in e) for e in tasks.edges)
    return "\n".join(lines) + "\n"


_PARTITION_KEYS = {
    "format_version", "n", "d", "N", "case", "params",
    "groups", "footprints", "metadata",
}


def emit_partition(p: FinalPartition) -> str:
    """Serialize a partition (and its placement) as JSON."""
    doc = {
        "format_version": FORMAT_VERSION,
        "n": p.n,
        "d": p.d,
        "N": p.N,
        "case": p.params.case if p.params is not None else None,
        "params": dict(p.params.__dict__) if p.params is not None else None,
        "groups": [[list(t) for t in g] for g in p.groups],
        "footprints": [list(f) for f in p.placement],
        "metadata": p.metadata or {},
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_partition(text: str) -> FinalPartition:
    """Inverse of emit_partition; raises SchemaError on malformed input."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top-level document must be an object")
    missing = _PARTITION_KEYS - doc.keys()
    if missing:
        raise SchemaError(f"missing keys: {sorted(missing)}")
    if doc["format_version"] != FORMAT_VERSION:
        raise SchemaError(f"unsupported format_version {doc['format_version']!r}")
    params = None
    if doc["params"] is not None:
        try:
            params = ICParameters(**doc["params"])
        except TypeError as exc:
            raise SchemaError(f"bad params object: {exc}") from exc
    try:
        groups = tuple(tuple(tuple(int(x) for x in t) for t in g) for g in doc["groups"])
        placement = tuple(tuple(int(x) for x in f) for f in doc["footprints"])
        n, d, N = int(doc["n"]), int(doc["d"]), int(doc["N"])
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad value: {exc}") from exc
    if len(groups) != N or len(placement) != N:
        raise SchemaError(
            f"N={N} but {len(groups)} groups / {len(placement)} footprints"
        )
    if params is not None and (params.n, params.d, params.N) != (n, d, N):
        raise SchemaError(
            f"params ({params.n},{params.d},{params.N}) disagree with "
            f"document ({n},{d},{N})"
        )
    return FinalPartition(
        n=n, d=d, N=N, groups=groups, placement=placement,
        params=params, metadata=doc["metadata"],
    )


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def emit_sweep_csv(records: list[SweepRecord]) -> str:
    """Fixed-column CSV for sweep results; unsupported points keep their
    identifying columns and leave the metrics empty."""
    lines = [",".join(SWEEP_COLUMNS)]
    for r in records:
        row = [
            r.n, r.d, r.N, r.phi, r.seed, r.case, r.k, r.s, r.g,
            r.pi, r.pi_lb, r.gap, r.delta, r.delta_x, r.arf, r.bounds_ok,
        ]
        lines.append(",".join(_csv_cell(v) for v in row))
    return "\n".join(lines) + "\n"
