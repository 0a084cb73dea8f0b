"""Command-line entry point: ``distrank <command> ...``.

Exit codes: 0 ok, 1 domain or parse error, 2 usage error.
"""

from __future__ import annotations

import sys
from fractions import Fraction

import click

from . import census as census_mod
from .bounds import rank_order_bound
from .graph import (
    ParseError,
    diameter,
    distance_exact_matrix,
    max_degree,
    parse_graph6,
    read_graph,
    to_graph6,
)
from .iso import dedupe
from .linalg import format_matrix, format_rational, nullity, rank
from .threshold import (
    alpha_sequence,
    continuants,
    oracle_nullity,
    parse_power_sequence,
    search_singular_power_sequences,
    threshold_nullity,
    threshold_quotient,
)
from .tp import (
    expected_family_nullity,
    m1_reduction,
    nullity_family,
    parse_clique_tree,
    root_size_partitions,
    singular_gadget_triples,
    tp_nullity,
    tp_quotient,
)
from .twins import quotient_matrix, twin_partition


class Out:
    """Collects key/value records and prints them as a table or as TSV."""

    def __init__(self, fmt: str):
        self.fmt = fmt

    def kv(self, pairs):
        if self.fmt == "tsv":
            for k, v in pairs:
                click.echo(f"{k}\t{v}")
        else:
            width = max(len(k) for k, _ in pairs)
            for k, v in pairs:
                click.echo(f"{k.ljust(width)}  {v}")

    def rows(self, header, rows):
        if self.fmt == "tsv":
            for r in rows:
                click.echo("\t".join(map(str, r)))
            return
        cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
        widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
        for c in cells:
            click.echo("  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip())

    def matrix(self, title, m):
        if self.fmt != "tsv":
            click.echo(f"{title}:")
        click.echo(format_matrix(m), nl=False)


def _seq(xs) -> str:
    return ",".join(format_rational(Fraction(x)) for x in xs)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


class Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except BrokenPipeError:
            ctx.exit(0)
        except (ValueError, OSError, AssertionError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(1)


@click.group(cls=Group)
@click.option("--format", "fmt", type=click.Choice(["table", "tsv"]), default="table",
              help="Output style for every command.")
@click.pass_context
def main(ctx, fmt):
    """Exact rank and nullity of graph distance matrices."""
    ctx.obj = Out(fmt)


input_format = click.option(
    "--input-format", type=click.Choice(["auto", "edgelist", "graph6"]), default="auto",
    show_default=True,
)


@main.command("rank")
@click.argument("path")
@input_format
@click.pass_obj
def cmd_rank(out: Out, path, input_format):
    """Distance rank, nullity and the diameter bound of a graph file."""
    g = read_graph(_read_input(path), input_format)
    d = distance_exact_matrix(g)
    diam = diameter(g)
    rk = rank(d)
    out.kv([
        ("n", g.n),
        ("m", g.m),
        ("diameter", diam),
        ("max_degree", max_degree(g)),
        ("distance_rank", rk),
        ("nullity", g.n - rk),
        ("diameter_bound", diam + 1),
    ])


@main.command("quotient")
@click.argument("path")
@input_format
@click.pass_obj
def cmd_quotient(out: Out, path, input_format):
    """Twin partition, quotient matrix D/W and both nullities."""
    g = read_graph(_read_input(path), input_format)
    p = twin_partition(g)
    q = quotient_matrix(g, p)
    if out.fmt != "tsv":
        click.echo("partition:")
    click.echo(p.to_text(), nl=False)
    out.matrix("quotient", q)
    out.kv([("nullity_full", nullity(distance_exact_matrix(g))), ("nullity_quotient", nullity(q))])


def _shard(ctx, param, value):
    if value is None:
        return None
    try:
        return census_mod.Shard.parse(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


@main.command("census")
@click.option("--rank", "k", type=click.IntRange(min=2), required=True)
@click.option("--max-n", type=click.IntRange(min=1), default=census_mod.DEFAULT_CAP, show_default=True)
@click.option("--shard", callback=_shard, help="Scan only part i of N of the mask space, as i/N.")
@click.option("--dedupe/--no-dedupe", default=False, help="Keep one graph per isomorphism class.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--max-n-override", is_flag=True, help="Allow --max-n above the enumeration cap.")
@click.pass_obj
def cmd_census(out: Out, k, max_n, shard, dedupe, jobs, max_n_override):
    """Connected graphs with a given distance rank, up to --max-n vertices."""
    w = census_mod.census_by_distance_rank(
        k, max_n, shard=shard, jobs=jobs, override=max_n_override, dedupe_result=dedupe
    )
    _print_census(out, w)


def _print_census(out: Out, w):
    out.rows(["graph6", "n", "m"], [(to_graph6(g), g.n, g.m) for g in w.representatives])
    if out.fmt == "tsv":
        click.echo(f"#labeled_count\t{w.labeled_count}")
    else:
        click.echo(f"rank {w.rank}: {len(w.representatives)} witnesses, {w.labeled_count} labelled graphs")


@main.command("merge")
@click.argument("paths", nargs=-1, required=True)
@click.option("--rank", "k", type=click.IntRange(min=2), required=True)
@click.option("--dedupe/--no-dedupe", "dedupe_flag", default=False)
@click.pass_obj
def cmd_merge(out: Out, paths, k, dedupe_flag):
    """Merge TSV census shard outputs given in shard order."""
    graphs = []
    total = 0
    for path in paths:
        for lineno, line in enumerate(_read_input(path).splitlines(), 1):
            if not line.strip():
                continue
            if line.startswith("#labeled_count"):
                total += int(line.split("\t")[1])
                continue
            fields = line.split("\t")
            try:
                graphs.append(parse_graph6(fields[0]))
            except ParseError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    reps = dedupe(graphs) if dedupe_flag else graphs
    _print_census(out, census_mod.CensusWitness(k, reps, total))


@main.command("threshold")
@click.argument("sequence", required=False)
@click.option("--search", "budget", type=click.IntRange(min=2), help="Vertex budget for the singular search.")
@click.option("--matrix", is_flag=True, help="Also print the quotient matrix.")
@click.pass_obj
def cmd_threshold(out: Out, sequence, budget, matrix):
    """Continuant test for a power sequence, or a search for singular ones."""
    if budget is not None:
        hits = search_singular_power_sequences(budget)
        if out.fmt == "tsv":
            for h in hits:
                click.echo(h.to_tsv())
        else:
            out.rows(["sequence", "n", "d_last", "nullity_oracle"],
                     [(h.sequence, h.sequence.order, format_rational(h.d_last), h.oracle_nullity) for h in hits])
        return
    if sequence is None:
        raise click.UsageError("give a power sequence or --search BUDGET")
    ps = parse_power_sequence(sequence)
    a = alpha_sequence(ps)
    d = continuants(a)
    out.kv([
        ("sequence", ps),
        ("n", ps.order),
        ("alpha", _seq(a)),
        ("d", _seq(d)),
        ("nullity", threshold_nullity(ps)),
        ("nullity_oracle", oracle_nullity(ps)),
    ])
    if matrix:
        out.matrix("quotient", threshold_quotient(ps))


def _sizes(ctx, param, value):
    if value is None:
        return None
    try:
        return tuple(int(t) for t in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from None


@main.command("tp")
@click.argument("tree", required=False)
@click.option("--family", nargs=3, type=int, help="K R N: build the nullity family.")
@click.option("--root-sizes", callback=_sizes, help="|R1|,...,|Rr| for --family; all partitions if omitted.")
@click.option("--gadgets", "bound", type=click.IntRange(min=1), help="List singular gadget triples up to BOUND.")
@click.pass_obj
def cmd_tp(out: Out, tree, family, root_sizes, bound):
    """Trivially perfect graphs from clique trees, families and gadgets."""
    if bound is not None:
        out.rows(["w", "a", "b"], singular_gadget_triples(bound))
        return
    if family:
        k, r, n = family
        partitions = [root_sizes] if root_sizes else root_size_partitions(k, r, n)
        if not partitions:
            raise ValueError(f"no admissible root sizes for k={k} r={r} n={n}")
        rows = []
        for rs in partitions:
            t = nullity_family(k, r, n, rs)
            ell = tp_nullity(t)
            if ell != expected_family_nullity(k, rs):
                raise AssertionError(f"family {k} {r} {n} {rs}: nullity {ell} contradicts the predicted value")
            rows.append((k, r, n, ",".join(map(str, rs)), ell, t))
        if out.fmt == "tsv":
            for k_, r_, n_, rs, ell, _ in rows:
                click.echo(f"{k_}\t{r_}\t{n_}\t{rs}\t{ell}")
        else:
            out.rows(["k", "r", "n", "root_sizes", "nullity", "tree"], rows)
        return
    if tree is None:
        raise click.UsageError("give a clique tree, --family or --gadgets")
    t = parse_clique_tree(tree)
    out.matrix("quotient", tp_quotient(t))
    if t.k > 1:
        out.matrix("M1", m1_reduction(t))
    out.kv([("nodes", t.k), ("n", sum(t.sizes)), ("nullity", tp_nullity(t))])


@main.command("bound")
@click.option("--k", "k", type=click.IntRange(min=2), required=True)
@click.pass_obj
def cmd_bound(out: Out, k):
    """R(k) and the order bound f(k, R(k)) for distance rank k."""
    b = rank_order_bound(k)
    pairs = [
        ("k", k),
        ("R", b.ramsey.value),
        ("R_exact", "yes" if b.ramsey.exact else "no (upper bound)"),
        ("f", format_rational(b.bound) if b.bound is not None else "undefined"),
        ("floor", b.floor if b.floor is not None else "undefined"),
    ]
    if b.note:
        pairs.append(("note", b.note))
    out.kv(pairs)


if __name__ == "__main__":
    main()
