"""``abprune-bench``: run a search configuration and report timings and node counts.

Exit status: 0 on success, 1 on usage error, 2 on runtime failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, replace

from abprune import _backend
from abprune.bench import emit_report, run_matrix
from abprune.config import Algo, GameSpec, SearchConfig
from abprune.errors import AbpruneError
from abprune.ordering import OrderingKind, OrderingStrategy
from abprune.parallel import WindowMode

EXIT_USAGE = 1
EXIT_RUNTIME = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class CliOptions:
    configs: list[SearchConfig]
    pairs: list[tuple[int, int]]
    format: str = "human"
    backend: str = "auto"


def _leaf_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError("expected LO:HI")
    return int(lo), int(hi)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="abprune-bench", description=__doc__.splitlines()[0])
    p.add_argument("--game", choices=("chess", "ttt", "synthetic"), default="synthetic")
    p.add_argument("--board-size", type=int, default=None, help="chess board side: 4, 5, 6 or 8 (default 8)")
    p.add_argument("--branching", type=int, default=3, help="synthetic tree branching factor")
    p.add_argument("--tree-depth", type=int, default=4, help="synthetic tree height")
    p.add_argument("--leaf-range", type=_leaf_range, default=(0, 100), metavar="LO:HI", help="synthetic leaf values, inclusive")
    p.add_argument("--position", default=None, metavar="FILE", help="chess start position (text board)")
    p.add_argument("--depth", type=int, default=None, help="search depth (default: the tree depth for synthetic games, 4 otherwise)")
    p.add_argument("--algo", choices=[a.value for a in Algo], default="alphabeta")
    p.add_argument("--ordering", choices=[k.value for k in OrderingKind], default="none")
    p.add_argument("--beam-width", type=int, default=None, help="children kept per node with --ordering beam")
    p.add_argument("--window", choices=[m.value for m in WindowMode], default="isolated", help="whether parallel workers share the root bound")
    p.add_argument("--threads", type=int, default=1, help="workers for --algo parallel")
    p.add_argument("--seed", type=int, default=0, help="synthetic tree seed")
    p.add_argument("--repeats", type=int, default=3, help="timed runs per config")
    p.add_argument("--format", choices=("csv", "human"), default="human")
    p.add_argument("--compare", action="store_true", help="also run the matching baseline and report the speedup")
    p.add_argument("--backend", choices=("auto", "c", "python"), default="auto", help="search kernel: compiled (c), pure Python, or whichever is available")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _ordering(kind: str, width: int | None) -> OrderingStrategy:
    if kind == "beam":
        if width is None:
            raise UsageError("--ordering beam needs --beam-width")
        return OrderingStrategy.beam(width)
    if width is not None:
        raise UsageError("--beam-width only applies to --ordering beam")
    return OrderingStrategy(OrderingKind(kind))


def baseline_for(cfg: SearchConfig) -> SearchConfig | None:
    """The config ``--compare`` pairs with ``cfg``.

    parallel -> sequential alphabeta with the same ordering; beam -> reorder;
    reorder -> no ordering; unordered alphabeta -> minimax.
    """
    if cfg.algo is Algo.PARALLEL:
        return replace(cfg, algo=Algo.ALPHABETA, workers=1, window_mode=WindowMode.ISOLATED)
    if cfg.algo is Algo.ALPHABETA:
        kind = cfg.ordering.kind
        if kind is OrderingKind.BEAM:
            return replace(cfg, ordering=OrderingStrategy.reorder())
        if kind is OrderingKind.REORDER:
            return replace(cfg, ordering=OrderingStrategy.none())
        return replace(cfg, algo=Algo.MINIMAX)
    return None


def parse_cli(argv: list[str]) -> CliOptions:
    """Turn argv into configs; raises ``UsageError`` on bad flags or invalid combinations."""
    ns = build_parser().parse_args(argv)
    if ns.game != "chess" and ns.board_size is not None:
        raise UsageError("--board-size only applies to chess")
    depth = ns.depth
    if depth is None:
        depth = ns.tree_depth if ns.game == "synthetic" else 4
    try:
        game = GameSpec(
            kind=ns.game,
            board_size=ns.board_size,
            branching=ns.branching,
            tree_depth=ns.tree_depth,
            leaf_range=ns.leaf_range,
            position=ns.position,
        )
        if ns.game == "synthetic":
            game.build(ns.seed)  # validates tree params
        cfg = SearchConfig(
            algo=Algo(ns.algo),
            game=game,
            depth=depth,
            ordering=_ordering(ns.ordering, ns.beam_width),
            window_mode=WindowMode(ns.window),
            workers=ns.threads,
            seed=ns.seed,
            repeats=ns.repeats,
        )
    except (AbpruneError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    configs, pairs = [cfg], []
    if ns.compare:
        base = baseline_for(cfg)
        if base is None:
            raise UsageError(f"--compare has no baseline for --algo {ns.algo}")
        configs.append(base)
        pairs.append((0, 1))
    return CliOptions(configs, pairs, ns.format, ns.backend)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if "-v" in argv or "--verbose" in argv:
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    try:
        opts = parse_cli(argv)
    except UsageError as exc:
        build_parser().print_usage(sys.stderr)
        print(f"abprune-bench: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with _backend.use_backend(opts.backend):
            report = run_matrix(opts.configs, opts.pairs)
        emit_report(report, opts.format, sys.stdout)
    except (AbpruneError, OSError, RuntimeError) as exc:
        print(f"abprune-bench: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return 0


if __name__ == "__main__":
    sys.exit(main())
