"""Command line interface: ``sgcanon canon|iso|enum|classes|orbits|gen|bench``.

Graph files are JSON documents in either the site-graph format
(``{"agents": ..., "bonds": ...}``) or the coloured-graph format
(``{"n": ..., "edges": ...}``).  ``--format auto`` picks by the top-level
keys.  Site inputs are encoded before any algorithm runs; canonical forms
are decoded back to site graphs for printing.

Exit codes: 0 success, 1 "not isomorphic", 2 unreadable or invalid input.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import bench as bench_mod
from .colgraph import ColouredGraph, check_graph, decode, encode, is_isomorphism
from .errors import NotInImageError, OracleLimitError, SgcanonError
from .generators import KINDS, GeneratorSpec, generate
from .labelling import canonical_form
from .oracle import orbits_bruteforce
from .perm import compose, invert
from .sitegraph import SiteGraph
from .sitegraph import check as check_site

FORMATS = ("auto", "site", "coloured")
ALGORITHMS = ("pairwise", "parallel", "refined", "race")


class InputError(click.ClickException):
    exit_code = 2


def _dump(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def load(path: str, fmt: str) -> tuple[ColouredGraph, SiteGraph | None]:
    """Read ``path`` and return its coloured graph plus the site graph it came from, if any."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from None
    if fmt == "auto":
        if isinstance(doc, dict) and "agents" in doc:
            fmt = "site"
        elif isinstance(doc, dict) and "n" in doc:
            fmt = "coloured"
        else:
            raise InputError(f"{path}: cannot tell the format; expected an 'agents' or an 'n' key")
    try:
        if fmt == "site":
            site = SiteGraph.from_json(doc)
            check_site(site, connected=True)
            return encode(site), site
        graph = ColouredGraph.from_json(doc)
        check_graph(graph)
        return graph, None
    except SgcanonError as exc:
        raise InputError(f"{path}: {exc}") from None


def _format_option(f):
    return click.option(
        "--format", "fmt", type=click.Choice(FORMATS), default="auto", show_default=True,
        help="Input graph model.",
    )(f)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Canonical labelling of site graphs and rigid coloured graphs."""


@main.command()
@click.option("--alg", type=click.Choice(ALGORITHMS), default="pairwise", show_default=True)
@_format_option
@click.argument("file")
def canon(alg: str, fmt: str, file: str) -> None:
    """Print the canonical form of FILE, then its digest."""
    graph, site = load(file, fmt)
    form = canonical_form(graph, alg)
    text = form.graph.dumps()
    if site is not None:
        try:
            text = decode(form.graph).dumps()
        except NotInImageError:
            pass
    click.echo(text)
    click.echo(form.digest)


@main.command()
@_format_option
@click.argument("first")
@click.argument("second")
def iso(fmt: str, first: str, second: str) -> None:
    """Decide whether FIRST and SECOND are isomorphic; exit 1 if not."""
    g, _ = load(first, fmt)
    h, _ = load(second, fmt)
    if g.n != h.n:
        click.echo(_dump({"isomorphic": False}))
        sys.exit(1)
    cg, ch = canonical_form(g), canonical_form(h)
    if cg.digest != ch.digest:
        click.echo(_dump({"isomorphic": False}))
        sys.exit(1)
    # g -> canonical -> h
    witness = compose(invert(ch.witness), cg.witness)
    assert is_isomorphism(g, h, witness)
    click.echo(_dump({"isomorphic": True, "witness": {str(v): w for v, w in enumerate(witness, start=1)}}))


@main.command("enum")
@click.option("--from", "start", type=click.IntRange(min=1), default=1, show_default=True,
              help="Start vertex.")
@_format_option
@click.argument("file")
def enum_(start: int, fmt: str, file: str) -> None:
    """Print the BFS edge enumeration of FILE from one start vertex."""
    from .enumeration import bfs_enumerate

    graph, _ = load(file, fmt)
    if start > graph.n:
        raise InputError(f"start vertex {start} outside 1..{graph.n}")
    result = bfs_enumerate(graph, start)
    alpha = result.renaming
    click.echo(_dump({
        "start": start,
        "order": [{"from": u, "to": v, "colour": c.to_json(), "renamed": [alpha[u - 1], alpha[v - 1]]}
                  for u, v, c in result.order],
        "renaming": {str(v): a for v, a in enumerate(alpha, start=1)},
    }))


@main.command()
@_format_option
@click.argument("file")
def classes(fmt: str, file: str) -> None:
    """Print the bisimulation classes of FILE's vertices; the least class is flagged."""
    from .refine import hopcroft_extended

    graph, _ = load(file, fmt)
    partition, least = hopcroft_extended(graph)
    rows = [{"vertices": sorted(c), "least": c == least} for c in partition.real_classes]
    click.echo(_dump({"classes": rows, "sink_classes": len(partition.sink_classes)}))


@main.command()
@click.option("--limit", type=click.IntRange(min=1), default=None,
              help="Size cap for the search (default: SGCANON_ORACLE_LIMIT or 8 for naive, 256 for pruned).")
@click.option("--method", type=click.Choice(("pruned", "naive")), default="pruned", show_default=True)
@_format_option
@click.argument("file")
def orbits(limit: int | None, method: str, fmt: str, file: str) -> None:
    """Print the automorphism orbits of FILE and the group size, by exhaustive search."""
    graph, _ = load(file, fmt)
    try:
        result = orbits_bruteforce(graph, method, limit)
    except OracleLimitError as exc:
        raise InputError(str(exc)) from None
    click.echo(_dump({"orbits": [sorted(o) for o in result.orbits], "group_size": result.group_size}))


@main.command()
@click.option("--kind", type=click.Choice(KINDS), required=True)
@click.option("--n", type=click.IntRange(min=1), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--colours", type=click.IntRange(min=1), default=None)
@click.option("--proteins", type=click.IntRange(min=1), default=None)
@click.option("--sites", type=click.IntRange(min=1), default=None)
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), default=None)
def gen(kind: str, n, seed, colours, proteins, sites, output) -> None:
    """Write a generated graph as JSON (to stdout unless -o is given)."""
    params = {k: v for k, v in
              dict(n=n, seed=seed, colours=colours, proteins=proteins, sites=sites).items() if v is not None}
    try:
        graph = generate(GeneratorSpec(kind, params))
    except (ValueError, SgcanonError) as exc:
        raise InputError(str(exc)) from None
    text = graph.dumps()
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        click.echo(text)


@main.command()
@click.option("--suite", type=click.Choice(tuple(bench_mod.SUITES)), required=True)
@click.option("--max-n", type=click.IntRange(min=4), default=256, show_default=True)
@click.option("--repeats", type=click.IntRange(min=bench_mod.MIN_REPEATS), default=bench_mod.MIN_REPEATS,
              show_default=True)
@click.option("--alg", "algorithms", type=click.Choice(tuple(bench_mod.ALGORITHMS)), multiple=True,
              help="Restrict to these labellers (repeatable).")
def bench(suite: str, max_n: int, repeats: int, algorithms: tuple[str, ...]) -> None:
    """Time the labellers on one graph family and print a JSON report."""
    report = bench_mod.run_suite(suite, max_n, repeats, algorithms or tuple(bench_mod.ALGORITHMS))
    click.echo(json.dumps(report.to_json(), indent=2))


if __name__ == "__main__":
    main()
