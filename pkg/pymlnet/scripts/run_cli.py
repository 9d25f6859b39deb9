"""Command-line surface: ``pymlnet [global flags] <subcommand> [flags]``.

Every subcommand builds its whole table before writing it, to standard output
or ``--out``. Module errors exit with code 1 and ``error[<category>]: <message>``
on standard error; usage errors exit with code 2.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Any

from ..io import export_actor_list, export_edge_list
from ..main import PythonRunMLNet, PythonWriters
from ..mlnet.exceptions import MLNetError
from ..utils import save_to_json

logger = logging.getLogger(__name__)

# flag attribute -> option key
OPTION_FLAGS = {
    "output_format": "output_format",
    "seed": "seed",
    "layer_cap": "layer_cap",
    "path_cap": "path_cap",
    "workers": "max_workers",
    "mode": "classic_mode",
    "options_file": "options_file",
}


def _global_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    source = parent.add_argument_group("input")
    source.add_argument("--edges", metavar="PATH", help="edge-list file (comma or tab separated)")
    source.add_argument("--actors", metavar="PATH", help="optional actors file, one label per line")
    source.add_argument("--fixture", metavar="NAME", help="bundled network instead of --edges, e.g. toy")

    output = parent.add_argument_group("output")
    output.add_argument("--format", dest="output_format", choices=("csv", "json"), help="table format (csv)")
    output.add_argument("--out", metavar="PATH", help="write to PATH instead of standard output")

    tuning = parent.add_argument_group("options")
    tuning.add_argument("--seed", type=int, help="Louvain seed (0)")
    tuning.add_argument("--layer-cap", type=int, help="maximum number of layers (16)")
    tuning.add_argument("--path-cap", type=int, help="maximum number of listed paths (1000000)")
    tuning.add_argument("--workers", type=int, metavar="N", help="thread-pool width (1)")
    tuning.add_argument("--options", dest="options_file", metavar="PATH", help="JSON options file")
    tuning.add_argument("--dump-options", metavar="PATH", help="save the effective options as JSON")
    tuning.add_argument("-v", "--verbose", action="count", help="-v for progress, -vv for debug messages")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _global_flags()
    parser = argparse.ArgumentParser(
        prog="pymlnet", description="Multi-layer social network analysis.", parents=[parent]
    )
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND", required=True)

    def _add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[parent], argument_default=argparse.SUPPRESS)

    _add("stats", "per-layer edges, components and average active degree")

    p = _add("flatten-stats", "statistics of a flattened combination (all layers by default)")
    p.add_argument("--layers", metavar="A,B", help="comma-separated layer names")
    p.add_argument("--clusters", action="store_true", help="append Louvain cluster count and modularity")

    p = _add("betweenness", "multi-layer and classic betweenness")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--compare", action="store_true", help="rank positions and deltas")
    group.add_argument("--correlation", action="store_true", help="rank correlation of the two measures")
    p.add_argument("--mode", choices=("fractional", "count"), help="classic comparator (fractional)")

    p = _add("paths", "efficient paths between two actors")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--front-only", action="store_true", help="list the Pareto front instead of the paths")

    p = _add("coverage", "best covering combinations per layer")
    p.add_argument("--target", metavar="LAYER")

    p = _add("jaccard", "most similar combination per layer")
    p.add_argument("--target", metavar="LAYER")
    p.add_argument("--disjoint", action="store_true", help="most similar pair of disjoint combinations")

    _add("clusterability", "Louvain clustering of every combination")

    p = _add("export", "write the network back as an edge list")
    p.add_argument("--actors-out", metavar="PATH", help="also write the actor list")
    return parser


def _configure_logging(verbose: int) -> None:
    level = max(logging.DEBUG, logging.WARNING - 10 * verbose)
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("pymlnet").setLevel(level)


def _dispatch(args: argparse.Namespace, options: dict[str, Any]) -> list[str]:
    runner = PythonRunMLNet(options)
    if path := getattr(args, "dump_options", None):
        save_to_json({k: v for k, v in runner.options.items() if k != "options_file"}, path)

    network = runner.load_network(
        getattr(args, "edges", None), getattr(args, "actors", None), getattr(args, "fixture", None)
    )

    command = args.command
    if command == "export":
        if actors_out := getattr(args, "actors_out", None):
            PythonWriters(options).write_to_file(export_actor_list(network), actors_out)
        return export_edge_list(network)

    if command == "stats":
        table = runner.stats_table(network)
    elif command == "flatten-stats":
        layers = getattr(args, "layers", None)
        names = [name.strip() for name in layers.split(",") if name.strip()] if layers else None
        table = runner.flatten_stats_table(network, names, getattr(args, "clusters", False))
    elif command == "betweenness":
        compare, correlation = getattr(args, "compare", False), getattr(args, "correlation", False)
        table = runner.betweenness_table(network, compare, correlation)
    elif command == "paths":
        table = runner.paths_table(network, args.source, args.target, getattr(args, "front_only", False))
    elif command == "coverage":
        table = runner.coverage_table(network, getattr(args, "target", None))
    elif command == "jaccard":
        if getattr(args, "disjoint", False):
            table = runner.disjoint_table(network)
        else:
            table = runner.jaccard_table(network, getattr(args, "target", None))
    else:
        table = runner.clusterability_table(network)

    logger.info("%s: %d rows", command, len(table))
    return PythonWriters(options).generate_str(table)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "edges", None) and not getattr(args, "fixture", None):
            parser.error("one of --edges or --fixture is required")
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0

    _configure_logging(getattr(args, "verbose", 0) or 0)

    options = {key: getattr(args, flag) for flag, key in OPTION_FLAGS.items() if hasattr(args, flag)}
    try:
        data_list = _dispatch(args, options)
        PythonWriters(options).write_to_file(data_list, getattr(args, "out", None))
    except MLNetError as e:
        sys.stderr.write(f"error[{e.category}]: {e.message}\n")
        return 1
    except OSError as e:
        sys.stderr.write(f"error[io]: {e}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
