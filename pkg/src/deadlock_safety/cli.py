"""Command-line interface.

Exit codes: 0 safe / valid, 2 bound to deadlock, 3 unknown (or oracle
limits exhausted), 1 error.  ``FILE`` may also name a bundled fixture
(``fig1``, ``fig2``, ``fig3``) when no such file exists.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .decide import Outcome, decide, is_wise, satisfies_relaxed_wise
from .followers import Kind, Strength, build_follower_digraph, find_deadlock_set, free_vertices
from .generator import GenerationInfeasible, GeneratorConfig, Topology, generate_instance
from .instance import (
    FIXTURES,
    InstanceError,
    InstanceDocument,
    fixture_text,
    format_plan,
    parse_instance,
    parse_plan,
    serialize,
)
from .model import ModelError, potential
from .oracle import Limits, OracleOutcome, oracle_decide, verify_plan
from .planner import PreconditionViolated, freeing_plan

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BOUND = 2
EXIT_UNKNOWN = 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    p = Path(path)
    if p.exists():
        return p.read_text()
    if path in FIXTURES:
        return fixture_text(path)
    raise UsageError(f"no such file: {path}")


def _load(path: str):
    return parse_instance(_read(path))


def _set(vertices) -> str:
    return "{" + ",".join(sorted(vertices)) + "}"


def _arcs(digraph) -> str:
    return " ".join(f"{u}->{v}" for u, v in digraph.sorted_arcs()) or "(none)"


def _range(text: str) -> tuple[int, int]:
    low, _, high = text.partition(":")
    try:
        return int(low), int(high or low)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LOW:HIGH, got {text!r}") from None


def cmd_validate(args, out) -> int:
    network, state = _load(args.file)
    print(f"valid: {len(network.vertices)} vertices, {len(network.edges)} edges, {state.item_count()} items", file=out)
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    network, state = _load(args.file)
    strong = find_deadlock_set(network, state, Strength.STRONG)
    weak = find_deadlock_set(network, state, Strength.WEAK)
    print(f"potential: {potential(state)}", file=out)
    print(f"free: {_set(free_vertices(network, state))}", file=out)
    print(f"follower arcs: {_arcs(build_follower_digraph(network, state, Kind.PLAIN))}", file=out)
    print(f"wise follower arcs: {_arcs(build_follower_digraph(network, state, Kind.WISE))}", file=out)
    print(f"strong deadlock set: {strong if strong else 'none'}", file=out)
    print(f"weak deadlock set: {weak if weak else 'none'}", file=out)
    print(f"wise: {is_wise(network, state)}", file=out)
    print(f"relaxed wise: {satisfies_relaxed_wise(network, state)}", file=out)
    print(f"tree: {network.is_tree()}", file=out)
    return EXIT_OK


def _limits(args) -> Limits:
    return Limits(max_states=args.max_states, max_time=args.max_time)


_ORACLE_EXIT = {
    OracleOutcome.SAFE: EXIT_OK,
    OracleOutcome.BOUND_TO_DEADLOCK: EXIT_BOUND,
    OracleOutcome.RESOURCE_LIMIT_EXCEEDED: EXIT_UNKNOWN,
}
_VERDICT_EXIT = {Outcome.SAFE: EXIT_OK, Outcome.BOUND_TO_DEADLOCK: EXIT_BOUND, Outcome.UNKNOWN: EXIT_UNKNOWN}


def cmd_decide(args, out) -> int:
    network, state = _load(args.file)
    verdict = decide(network, state)
    line = verdict.outcome.value
    if verdict.witness is not None:
        line += f", witness {verdict.witness}"
    print(line, file=out)
    print(f"justification: {verdict.justification.value}", file=out)
    if verdict.outcome is Outcome.UNKNOWN and args.escalate_oracle:
        result = oracle_decide(network, state, _limits(args))
        print(f"oracle: {result.outcome.value} ({result.explored_states} states explored)", file=out)
        return _ORACLE_EXIT[result.outcome]
    return _VERDICT_EXIT[verdict.outcome]


def cmd_plan(args, out) -> int:
    network, state = _load(args.file)
    try:
        plan = freeing_plan(network, state)
    except PreconditionViolated as exc:
        verdict = decide(network, state)
        print(f"refused: {exc}; verdict {verdict}", file=out)
        return EXIT_BOUND if verdict.outcome is Outcome.BOUND_TO_DEADLOCK else EXIT_UNKNOWN
    out.write(format_plan(plan))
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    network, state = _load(args.file)
    result = oracle_decide(network, state, _limits(args))
    print(f"{result.outcome.value} ({result.explored_states} states explored)", file=out)
    if result.witness_plan is not None and args.show_plan:
        out.write(format_plan(result.witness_plan))
    return _ORACLE_EXIT[result.outcome]


def cmd_generate(args, out) -> int:
    config = GeneratorConfig(
        seed=args.seed,
        vertex_count=args.vertices,
        topology=Topology(args.topology),
        capacity=args.capacity,
        item_count=args.items,
        force_wise=args.force_wise,
    )
    try:
        doc: InstanceDocument = generate_instance(config)
    except GenerationInfeasible as exc:
        raise UsageError(str(exc)) from exc
    out.write(serialize(doc))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    network, state = _load(args.file)
    plan = parse_plan(_read(args.planfile))
    if verify_plan(network, state, plan):
        print(f"ok: {len(plan)} moves free the network", file=out)
        return EXIT_OK
    print("plan does not free the network", file=out)
    return EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dsp", description="Deadlock safety analysis for buffered routing networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file", metavar="FILE")
        return p

    def with_limits(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-states", type=int, default=Limits.max_states)
        p.add_argument("--max-time", type=float, default=Limits.max_time)

    with_file("validate", "check an instance file").set_defaults(run=cmd_validate)
    with_file("analyze", "free vertices, follower arcs and deadlock sets").set_defaults(run=cmd_analyze)
    p = with_file("decide", "classify the state")
    p.add_argument("--escalate-oracle", action="store_true", help="settle Unknown by exhaustive search")
    with_limits(p)
    p.set_defaults(run=cmd_decide)
    with_file("plan", "print a freeing plan").set_defaults(run=cmd_plan)
    p = with_file("oracle", "exact decision by exhaustive search")
    with_limits(p)
    p.add_argument("--show-plan", action="store_true", help="print the witness plan when safe")
    p.set_defaults(run=cmd_oracle)
    p = sub.add_parser("generate", help="print a random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--vertices", type=_range, default=(2, 8), metavar="N|LOW:HIGH")
    p.add_argument("--topology", choices=[t.value for t in Topology], default=Topology.TREE.value)
    p.add_argument("--capacity", type=_range, default=(1, 3), metavar="N|LOW:HIGH")
    p.add_argument("--items", type=_range, default=(1, 6), metavar="N|LOW:HIGH")
    p.add_argument("--force-wise", action="store_true")
    p.set_defaults(run=cmd_generate)
    p = with_file("verify", "check that a plan file frees the network")
    p.add_argument("planfile", metavar="PLANFILE")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.run(args, out)
    except (UsageError, InstanceError, ModelError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
