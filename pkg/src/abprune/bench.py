"""Benchmark matrix runner, speedup tables and report emission."""

from __future__ import annotations

import csv
import io
import logging
import statistics
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

from abprune.config import Algo, SearchConfig
from abprune.errors import AbpruneError, InvalidInput
from abprune.game.base import format_move
from abprune.ordering import OrderingKind
from abprune.search import SearchResult, search

log = logging.getLogger(__name__)

CSV_HEADER = (
    "algo", "game", "board_size", "depth", "ordering", "beam_width", "window_mode",
    "workers", "seed", "run", "value", "best_move", "nodes", "cutoffs", "elapsed_ms",
)

# Configs expected to finish faster than this get one untimed warm-up run.
WARMUP_THRESHOLD_S = 0.100


class MatrixError(AbpruneError):
    """A config in the matrix failed; carries the offending config."""

    def __init__(self, index: int, config: SearchConfig, cause: Exception):
        super().__init__(f"config #{index} ({config.label} on {config.game.label}) failed: {cause}")
        self.index = index
        self.config = config


@dataclass(frozen=True)
class RunRow:
    config_index: int
    config: SearchConfig
    run: int
    result: SearchResult
    move_text: str


@dataclass(frozen=True)
class SpeedupRow:
    candidate: int
    baseline: int
    ratio: float


@dataclass(frozen=True)
class NodeRow:
    candidate: int
    baseline: int
    candidate_nodes: int
    baseline_nodes: int

    @property
    def ratio(self) -> float:
        return self.candidate_nodes / self.baseline_nodes


@dataclass
class BenchReport:
    configs: list[SearchConfig]
    rows: list[RunRow] = field(default_factory=list)
    speedups: list[SpeedupRow] = field(default_factory=list)
    node_counts: list[NodeRow] = field(default_factory=list)

    def runs_for(self, index: int) -> list[RunRow]:
        return [r for r in self.rows if r.config_index == index]

    def elapsed_for(self, index: int) -> list[float]:
        return [r.result.elapsed for r in self.runs_for(index)]

    def median_nodes(self, index: int) -> int:
        return int(statistics.median(r.result.nodes_visited for r in self.runs_for(index)))


def compute_speedup(baseline: Sequence[float], candidate: Sequence[float]) -> float:
    """``median(baseline) / median(candidate)``."""
    for name, xs in (("baseline", baseline), ("candidate", candidate)):
        if len(xs) == 0:
            raise InvalidInput(f"{name} durations are empty")
        if any(not x > 0 for x in xs):
            raise InvalidInput(f"{name} durations must all be > 0")
    return statistics.median(baseline) / statistics.median(candidate)


def default_pairs(configs: Sequence[SearchConfig]) -> list[tuple[int, int]]:
    """Pair every config with the first config that searches the same instance."""
    first: dict[tuple, int] = {}
    pairs = []
    for i, cfg in enumerate(configs):
        key = cfg.instance_key()
        if key in first:
            pairs.append((i, first[key]))
        else:
            first[key] = i
    return pairs


def _timed_runs(config: SearchConfig) -> list[SearchResult]:
    state = config.build_state()
    first = search(state, config)
    if first.elapsed < WARMUP_THRESHOLD_S:
        results = []
    else:
        results = [first]
    while len(results) < config.repeats:
        results.append(search(state, config))
    return results


def run_matrix(
    configs: Sequence[SearchConfig], pairs: Iterable[tuple[int, int]] | None = None
) -> BenchReport:
    """Run every config ``repeats`` times, one timed search at a time.

    ``pairs`` lists ``(candidate, baseline)`` config indices for the derived
    tables; by default each config is paired with the first config on the
    same instance.
    """
    if not configs:
        raise InvalidInput("no configs to run")
    configs = list(configs)
    report = BenchReport(configs)
    for i, cfg in enumerate(configs):
        log.info("running %s on %s (depth %d)", cfg.label, cfg.game.label, cfg.depth)
        try:
            results = _timed_runs(cfg)
            state_game = cfg.build_state().game
        except AbpruneError as exc:
            raise MatrixError(i, cfg, exc) from exc
        for run, res in enumerate(results):
            report.rows.append(RunRow(i, cfg, run, res, format_move(state_game, res.best_move)))
    for cand, base in default_pairs(configs) if pairs is None else pairs:
        report.speedups.append(SpeedupRow(cand, base, compute_speedup(report.elapsed_for(base), report.elapsed_for(cand))))
        report.node_counts.append(NodeRow(cand, base, report.median_nodes(cand), report.median_nodes(base)))
    return report


def _csv_record(row: RunRow) -> list[str]:
    cfg = row.config
    game = cfg.game
    res = row.result
    board_size = "" if game.board_size is None else str(game.board_size)
    if game.kind == "ttt":
        board_size = "3"
    beam_width = str(cfg.ordering.width) if cfg.ordering.kind is OrderingKind.BEAM else ""
    window = cfg.window_mode.value if cfg.algo is Algo.PARALLEL else ""
    return [
        cfg.algo.value, game.kind, board_size, str(cfg.depth), cfg.ordering.label, beam_width, window,
        str(cfg.workers), str(cfg.seed), str(row.run), str(res.value), row.move_text,
        str(res.nodes_visited), str(res.cutoffs), f"{res.elapsed * 1000:.3f}",
    ]


def write_csv(report: BenchReport, out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow(_csv_record(row))


def read_csv(text: str) -> list[dict[str, str]]:
    reader = csv.DictReader(io.StringIO(text, newline=""))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise InvalidInput(f"unexpected CSV header {reader.fieldnames}")
    return list(reader)


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(c.rjust(w) if c[:1].isdigit() or c[:1] == "-" else c.ljust(w) for c, w in zip(r, widths)))
    return lines


def write_human(report: BenchReport, out: IO[str]) -> None:
    def name(i: int) -> str:
        cfg = report.configs[i]
        return f"{cfg.label} [{cfg.game.label} d={cfg.depth} seed={cfg.seed}]"

    lines = ["Runs"]
    lines += _table(
        ("config", "run", "value", "best", "nodes", "cutoffs", "ms"),
        [
            (name(r.config_index), str(r.run), str(r.result.value), r.move_text or "-",
             str(r.result.nodes_visited), str(r.result.cutoffs), f"{r.result.elapsed * 1000:.3f}")
            for r in report.rows
        ],
    )
    if report.speedups:
        lines += ["", "Speedup (median baseline time / median candidate time)"]
        lines += _table(
            ("candidate", "baseline", "speedup"),
            [(name(s.candidate), name(s.baseline), f"{s.ratio:.3f}") for s in report.speedups],
        )
    if report.node_counts:
        lines += ["", "Visited nodes (median over runs)"]
        lines += _table(
            ("candidate", "nodes", "baseline", "nodes", "ratio"),
            [
                (name(n.candidate), str(n.candidate_nodes), name(n.baseline), str(n.baseline_nodes), f"{n.ratio:.3f}")
                for n in report.node_counts
            ],
        )
    out.write("\n".join(lines) + "\n")


def emit_report(report: BenchReport, fmt: str = "human", out: IO[str] | None = None) -> str:
    """Render ``report`` as ``csv`` or ``human`` text; also writes it to ``out`` if given."""
    buf = io.StringIO(newline="")
    if fmt == "csv":
        write_csv(report, buf)
    elif fmt == "human":
        write_human(report, buf)
    else:
        raise InvalidInput(f"unknown report format {fmt!r}")
    text = buf.getvalue()
    if out is not None:
        out.write(text)
        out.flush()
    return text

