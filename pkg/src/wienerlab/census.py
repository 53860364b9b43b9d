"""Census of good vertices over all connected unicyclic graphs of given orders.

Work is split into ``(n, c)`` partitions, ``c`` the cycle length, which the
generator enumerates independently. Completed partitions are appended to a
plain-text manifest so an interrupted run can resume; results are merged in
partition order, so the output does not depend on the number of workers.
"""

from __future__ import annotations

import csv
import logging
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .canon import automorphism_check
from .enumeration import enumerate_unicyclic, unicyclic_partitions
from .good import good_vertices
from .graph import Graph
from .graph6 import encode_graph6

__all__ = [
    "CensusRow",
    "PartitionResult",
    "CensusInterrupted",
    "REPORTED_TABLE",
    "classify_partition",
    "run_census",
    "write_csv",
    "write_wide_csv",
    "read_manifest",
    "find_g12",
    "find_orbit_counterexamples",
    "estimate_cost",
    "WITNESS_MIN_GOOD",
]

log = logging.getLogger(__name__)

WITNESS_MIN_GOOD = 3
MANIFEST_HEADER = "# wienerlab census checkpoint v1"

# Published census: n -> (|U_n|, {k: g(U_n, k)}) for k >= 1; unlisted k are zero.
REPORTED_TABLE: dict[int, tuple[int, dict[int, int]]] = {
    9: (240, {1: 1}),
    10: (657, {1: 1, 2: 1}),
    11: (1806, {1: 3, 2: 3, 11: 1}),
    12: (5026, {1: 21, 2: 9, 4: 1, 6: 1}),
    13: (13999, {1: 62, 2: 16}),
    14: (39260, {1: 207, 2: 34, 4: 1}),
    15: (110381, {1: 599, 2: 90, 3: 1, 4: 2}),
    16: (311465, {1: 1747, 2: 229, 3: 5, 4: 7}),
    17: (880840, {1: 5040, 2: 483}),
    18: (2497405, {1: 13838, 2: 1303, 3: 30, 4: 22}),
}


class CensusInterrupted(RuntimeError):
    """Raised when a run stops early; completed partitions are in the manifest."""

    def __init__(self, manifest: Path | None, done: int, pending: int):
        where = f"; resume from {manifest}" if manifest else ""
        super().__init__(f"census interrupted with {pending} of {done + pending} partitions pending{where}")
        self.manifest = manifest
        self.done = done
        self.pending = pending


@dataclass
class PartitionResult:
    n: int
    c: int
    total: int
    counts: dict[int, int]
    seconds: float
    witnesses: list[tuple[int, str]] = field(default_factory=list)

    def to_line(self) -> str:
        counts = ",".join(f"{k}:{v}" for k, v in sorted(self.counts.items()))
        wit = " ".join(f"{g6}:{k}" for k, g6 in self.witnesses)
        return f"part\t{self.n}\t{self.c}\t{self.total}\t{counts}\t{self.seconds:.3f}\t{wit}"

    @classmethod
    def from_line(cls, line: str) -> PartitionResult:
        tag, n, c, total, counts, seconds, wit = line.rstrip("\n").split("\t")
        if tag != "part":
            raise ValueError(f"not a partition line: {line!r}")
        parsed = {}
        for item in counts.split(","):
            if item:
                k, v = item.split(":")
                parsed[int(k)] = int(v)
        witnesses = []
        for item in wit.split():
            g6, k = item.rsplit(":", 1)
            witnesses.append((int(k), g6))
        return cls(int(n), int(c), int(total), parsed, float(seconds), witnesses)


@dataclass
class CensusRow:
    n: int
    total: int
    counts: dict[int, int]  # k -> g(U_n, k), including k = 0
    elapsed: float  # classification seconds summed over partitions
    worker_count: int
    witnesses: list[tuple[int, str]] = field(default_factory=list)

    def count(self, k: int) -> int:
        return self.counts.get(k, 0)

    @property
    def max_good(self) -> int:
        return max((k for k, v in self.counts.items() if v), default=0)


def classify_partition(n: int, c: int) -> PartitionResult:
    """Count graphs of order ``n`` and cycle length ``c`` by number of good vertices."""
    start = time.perf_counter()
    counts: Counter[int] = Counter()
    witnesses = []
    total = 0
    for g in enumerate_unicyclic(n, c):
        k = len(good_vertices(g))
        counts[k] += 1
        total += 1
        if k >= WITNESS_MIN_GOOD:
            witnesses.append((k, encode_graph6(g)))
    return PartitionResult(n, c, total, dict(counts), time.perf_counter() - start, witnesses)


def read_manifest(path: Path) -> dict[tuple[int, int], PartitionResult]:
    done = {}
    if not path.exists():
        return done
    with open(path) as fh:
        for line in fh:
            if not line.strip() or line.startswith("#"):
                continue
            try:
                part = PartitionResult.from_line(line)
            except ValueError:
                # a line cut short by an interruption is simply redone
                log.warning("ignoring malformed manifest line %r", line[:60])
                continue
            done[(part.n, part.c)] = part
    return done


def _append(path: Path, part: PartitionResult) -> None:
    new = not path.exists() or path.stat().st_size == 0
    with open(path, "a") as fh:
        if new:
            fh.write(MANIFEST_HEADER + "\n")
        fh.write(part.to_line() + "\n")
        fh.flush()
        os.fsync(fh.fileno())


def _merge(n_values: Iterable[int], parts: dict[tuple[int, int], PartitionResult], jobs: int) -> list[CensusRow]:
    rows = []
    for n in n_values:
        counts: Counter[int] = Counter()
        total = 0
        elapsed = 0.0
        witnesses = []
        for c in unicyclic_partitions(n):
            part = parts[(n, c)]
            counts.update(part.counts)
            total += part.total
            elapsed += part.seconds
            witnesses.extend(part.witnesses)
        counts.setdefault(0, 0)
        row = CensusRow(n, total, dict(sorted(counts.items())), elapsed, jobs, witnesses)
        assert sum(row.counts.values()) == row.total
        rows.append(row)
    return rows


def run_census(
    n_min: int,
    n_max: int,
    jobs: int = 1,
    *,
    manifest: str | Path | None = None,
    witness_dir: str | Path | None = None,
) -> list[CensusRow]:
    """Classify every unicyclic graph with ``n_min <= n <= n_max`` vertices.

    Partitions listed in ``manifest`` are reused, and every newly finished
    partition is appended to it. Witness graphs (at least three good
    vertices) go to ``witness_dir/n{n}_k{k}.g6``, one graph6 string per line.
    """
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got {n_min}, {n_max}")
    manifest = Path(manifest) if manifest is not None else None
    tasks = [(n, c) for n in range(n_min, n_max + 1) for c in unicyclic_partitions(n)]
    parts = {}
    if manifest is not None:
        parts = {key: part for key, part in read_manifest(manifest).items() if key in set(tasks)}
        if parts:
            log.info("resuming: %d of %d partitions already done", len(parts), len(tasks))
    pending = [t for t in tasks if t not in parts]

    def record(part: PartitionResult) -> None:
        parts[(part.n, part.c)] = part
        if manifest is not None:
            _append(manifest, part)
        log.debug("n=%d c=%d: %d graphs in %.2fs", part.n, part.c, part.total, part.seconds)

    try:
        if jobs <= 1:
            for n, c in pending:
                record(classify_partition(n, c))
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                # largest orders first keeps the workers busy at the end
                futures = [pool.submit(classify_partition, n, c) for n, c in sorted(pending, key=lambda t: (-t[0], t[1]))]
                for fut in as_completed(futures):
                    record(fut.result())
    except (KeyboardInterrupt, MemoryError) as exc:
        remaining = len(tasks) - len(parts)
        raise CensusInterrupted(manifest, len(parts), remaining) from exc

    rows = _merge(range(n_min, n_max + 1), parts, jobs)
    if witness_dir is not None:
        _write_witnesses(Path(witness_dir), rows)
    return rows


def _write_witnesses(directory: Path, rows: list[CensusRow]) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for row in rows:
        by_k: dict[int, list[str]] = {}
        for k, g6 in row.witnesses:
            by_k.setdefault(k, []).append(g6)
        for k, lines in sorted(by_k.items()):
            (directory / f"n{row.n}_k{k}.g6").write_text("".join(line + "\n" for line in lines))


def _k_range(rows: list[CensusRow]) -> range:
    return range(0, max((r.max_good for r in rows), default=0) + 1)


def write_csv(rows: list[CensusRow], path: str | Path) -> None:
    """Long format ``n,total,k,count`` with explicit zeros up to the largest k seen."""
    ks = _k_range(rows)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n", "total", "k", "count"])
        for row in rows:
            for k in ks:
                writer.writerow([row.n, row.total, k, row.count(k)])


def write_wide_csv(rows: list[CensusRow], path: str | Path) -> None:
    """One line per order with a ``g<k>`` column per k, plus timing columns."""
    ks = [k for k in _k_range(rows) if k > 0]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n", "total"] + [f"g{k}" for k in ks] + ["elapsed_s", "workers"])
        for row in rows:
            writer.writerow([row.n, row.total] + [row.count(k) for k in ks] + [f"{row.elapsed:.2f}", row.worker_count])


def format_table(rows: list[CensusRow]) -> str:
    ks = [k for k in _k_range(rows) if k > 0]
    header = "n".rjust(4) + "total".rjust(10) + "".join(f"g{k}".rjust(8) for k in ks)
    lines = [header]
    for row in rows:
        lines.append(str(row.n).rjust(4) + str(row.total).rjust(10) + "".join(str(row.count(k)).rjust(8) for k in ks))
    return "\n".join(lines)


def compare_with_reported(row: CensusRow) -> list[str]:
    """Differences between a row and the published census (empty when equal)."""
    if row.n not in REPORTED_TABLE:
        return []
    total, counts = REPORTED_TABLE[row.n]
    problems = []
    if row.total != total:
        problems.append(f"n={row.n}: total {row.total} != {total}")
    for k in sorted(set(counts) | {k for k in row.counts if k > 0}):
        if row.count(k) != counts.get(k, 0):
            problems.append(f"n={row.n}: g(k={k}) {row.count(k)} != {counts.get(k, 0)}")
    return problems


def estimate_cost(n: int) -> tuple[int, float]:
    """Rough ``(graph count, single-worker seconds)`` for one order."""
    graphs = REPORTED_TABLE[n][0] if n in REPORTED_TABLE else int(39260 * 2.83 ** (n - 14))
    per_graph = 4.5e-4 * (n / 14) ** 2  # calibrated on n = 14, one core
    return graphs, graphs * per_graph


def find_g12() -> Graph:
    """The unique unicyclic graph of order 12 with exactly 6 good vertices."""
    found = [g for g in enumerate_unicyclic(12) if len(good_vertices(g)) == 6]
    if len(found) != 1:
        raise AssertionError(f"expected exactly one order-12 graph with 6 good vertices, found {len(found)}")
    return found[0]


def find_orbit_counterexamples(n_max: int, limit: int | None = None, n_min: int = 3):
    """Unicyclic graphs with two good vertices that no automorphism swaps.

    Yields ``(graph, u, v)`` in enumeration order, at most ``limit`` of them.
    """
    found = 0
    for n in range(n_min, n_max + 1):
        for g in enumerate_unicyclic(n):
            good = sorted(good_vertices(g))
            if len(good) < 2:
                continue
            for i, u in enumerate(good):
                pair = next((v for v in good[i + 1:] if not automorphism_check(g, u, v)), None)
                if pair is not None:
                    yield g, u, pair
                    found += 1
                    if limit is not None and found >= limit:
                        return
                    break
