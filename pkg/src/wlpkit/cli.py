"""Command-line entry point: ``wlpkit <command> ...``.

Exit codes: 0 success, 1 mismatch or negative finding, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import io as wio
from .algebra import build_algebra, mult_matrix, socle
from .complexes import independence_complex, is_pseudomanifold
from .graphs import whisker
from .lefschetz import analyze_wlp, broom_conjecture_check
from .linalg import PrimeError, PrimeField, rank_mod_p, rank_rational
from .reproduce import merged_expected, reproduce as run_reproduce
from .search import search as run_search


class Ctx:
    def __init__(self, char: int, exact: bool, seed: int, fmt: str, out: str | None):
        self.char = char
        self.method = "bareiss" if exact else "auto"
        self.seed = seed
        self.fmt = fmt
        self.out = out

    def emit(self, text_out: str, json_obj) -> None:
        payload = wio.dump_json(json_obj) + "\n" if self.fmt == "json" else text_out
        if self.out:
            Path(self.out).write_text(payload)
        else:
            click.echo(payload, nl=False)


def _char(ctx, param, value: int) -> int:
    if value:
        try:
            PrimeField(value)
        except PrimeError as exc:
            raise click.BadParameter(str(exc))
    return value


@click.group()
@click.option("--char", "char", type=int, default=0, callback=_char, show_default=True,
              help="0 for the rationals, or a prime p.")
@click.option("--exact", is_flag=True, help="Force Bareiss for ranks over Q.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for prime selection.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def main(ctx, char, exact, seed, fmt, out):
    """Artinian algebras of (whiskered) graphs and their Lefschetz behaviour."""
    ctx.obj = Ctx(char, exact, seed, fmt, out)


def _graph(spec: str, do_whisker: bool):
    try:
        G = wio.load_graph(spec)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="GRAPH")
    return whisker(G) if do_whisker else G


graph_arg = click.argument("graph")
whisker_opt = click.option("--whisker", "do_whisker", is_flag=True, help="Whisker the input graph first.")


@main.command()
@graph_arg
@click.pass_obj
def gen(obj: Ctx, graph):
    """Print a generated graph (e.g. broom:5) as an edge list."""
    G = _graph(graph, False)
    obj.emit(wio.render_edge_list(G), wio.graph_to_json(G))


@main.command("whisker")
@graph_arg
@click.pass_obj
def whisker_cmd(obj: Ctx, graph):
    """Print the whiskered graph w(H)."""
    G = _graph(graph, True)
    obj.emit(wio.render_edge_list(G), wio.graph_to_json(G))


@main.command("complex")
@graph_arg
@whisker_opt
@click.pass_obj
def complex_cmd(obj: Ctx, graph, do_whisker):
    """Facets of the independence complex."""
    D = independence_complex(_graph(graph, do_whisker))
    obj.emit(wio.render_facets(D), wio.complex_to_json(D))


@main.command()
@graph_arg
@whisker_opt
@click.pass_obj
def hilbert(obj: Ctx, graph, do_whisker):
    """Hilbert function of A(G) and its socle."""
    A = build_algebra(independence_complex(_graph(graph, do_whisker)))
    soc = socle(A)
    text = (" ".join(map(str, A.hilbert)) + "\n"
            + f"level={soc.is_level} socle_degree={soc.socle_degree}\n")
    obj.emit(text, {"hilbert": list(A.hilbert), "socle": soc.to_dict()})


@main.command("pm-check")
@graph_arg
@whisker_opt
@click.pass_obj
def pm_check(obj: Ctx, graph, do_whisker):
    """Pseudo-manifold report for the independence complex."""
    D = independence_complex(_graph(graph, do_whisker))
    rep = is_pseudomanifold(D)
    d = rep.to_dict()
    text = "\n".join(f"{k}: {d[k]}" for k in
                     ("is_pseudomanifold", "is_pure", "dimension", "is_ridge_connected",
                      "has_boundary", "dual_bipartite"))
    text += f"\nridge_violations: {len(rep.ridge_violations)}\nboundary_ridges: {len(rep.boundary_ridges)}\n"
    obj.emit(text, d)
    sys.exit(0 if rep.is_pseudomanifold else 1)


@main.command()
@graph_arg
@whisker_opt
@click.option("--degree", "-i", type=int, required=True, help="Source degree i of A_i -> A_{i+1}.")
@click.option("--labels/--no-labels", default=True, help="Label rows/columns with monomials.")
@click.option("--market", is_flag=True, help="Matrix Market export instead of the plain dump.")
@click.pass_obj
def maps(obj: Ctx, graph, do_whisker, degree, labels, market):
    """Matrix of multiplication by the sum of the variables."""
    A = build_algebra(independence_complex(_graph(graph, do_whisker)))
    if not 0 <= degree < A.top_degree:
        raise click.BadParameter(f"degree must lie in [0, {A.top_degree - 1}]", param_hint="--degree")
    M = mult_matrix(A, degree)
    rows = [A.complex.face_label(F) for F in A.basis(degree + 1)]
    cols = [A.complex.face_label(F) for F in A.basis(degree)]
    if obj.char:
        rank, field = rank_mod_p(M, obj.char), f"mod {obj.char}"
    else:
        rr = rank_rational(M, obj.method, seed=obj.seed)
        rank, field = rr.rank, f"over Q ({rr.method})"
    if market:
        body = wio.render_matrix_market(M)
    else:
        body = wio.render_matrix(M, rows, cols) if labels else wio.render_matrix(M)
    text = body + f"rank {field} = {rank}\n"
    obj.emit(text, {"degree": degree, "rows": rows, "cols": cols,
                    "matrix": M.tolist(), "char": obj.char, "rank": rank})


@main.command()
@graph_arg
@whisker_opt
@click.option("--hausel", is_flag=True, help="Also check the injectivity range for level algebras.")
@click.pass_obj
def wlp(obj: Ctx, graph, do_whisker, hausel):
    """Per-degree maximal-rank table and WLP verdict."""
    rep = analyze_wlp(independence_complex(_graph(graph, do_whisker)), obj.char,
                      method=obj.method, seed=obj.seed, graph=graph, hausel=hausel)
    lines = [f"char {rep.characteristic}", "hilbert " + " ".join(map(str, rep.hilbert))]
    for m in rep.maps:
        lines.append(f"{m.degree}->{m.degree + 1}\t{m.dim_source}x{m.dim_target}\t"
                     f"rank {m.rank}\t{'yes' if m.full_rank else 'no'}")
    lines.append(f"wlp {rep.has_wlp}  failing {rep.failing_degrees}")
    for name, pred in rep.predicates.items():
        lines.append(f"predicate {name}: applicable={pred.applicable} "
                     f"predicted={pred.predicted} computed={pred.computed}")
    obj.emit("\n".join(lines) + "\n", rep.to_dict())
    sys.exit(0 if rep.has_wlp else 1)


@main.command()
@click.option("--m", "ms", type=int, multiple=True, help="Broom parameters (default 1..8).")
@click.pass_obj
def conjecture(obj: Ctx, ms):
    """Check that y1*y3*...*y_{m+3} is outside the image of A_{m+1} -> A_{m+2} for w(B_m)."""
    ms = ms or tuple(range(1, 9))
    results = [broom_conjecture_check(m, seed=obj.seed) for m in ms]
    text = "".join(f"m={r.m}\tnot_in_image={r.not_in_image}\n" for r in results)
    text += "(finite evidence only)\n"
    obj.emit(text, {"results": [r.to_dict() for r in results]})
    sys.exit(0 if all(results) else 1)


@main.command()
@click.option("--items", default="abcdef", show_default=True, help="Subset of items a-f.")
@click.option("--expect", "overrides", multiple=True, metavar="KEY=JSON",
              help="Override a stored value, e.g. b5.rank.4=827.")
@click.pass_obj
def reproduce(obj: Ctx, items, overrides):
    """Recompute the reference tables and diff against the stored values."""
    parsed = {}
    for ov in overrides:
        key, sep, val = ov.partition("=")
        if not sep:
            raise click.BadParameter(f"expected KEY=JSON, got {ov!r}", param_hint="--expect")
        parsed[key] = json.loads(val)
    bad = set(items) - set("abcdef")
    if bad:
        raise click.BadParameter(f"unknown items {sorted(bad)}", param_hint="--items")
    results = run_reproduce(merged_expected(parsed), items=items, char=obj.char or 2,
                            seed=obj.seed, method=obj.method)
    lines = []
    for r in results:
        lines.append(r.line())
        lines += [f"    {d}" for d in r.diffs]
        lines += [f"    note: {n}" for n in r.notes]
    obj.emit("\n".join(lines) + "\n", {"items": [r.to_dict() for r in results],
                                       "passed": all(r.passed for r in results)})
    sys.exit(0 if all(r.passed for r in results) else 1)


@main.command()
@click.option("--max-n", type=int, default=0, show_default=True, help="Largest base graph size.")
@click.option("--min-n", type=int, default=1, show_default=True)
@click.option("--samples", type=int, default=0, help="Random graphs per n beyond 6.")
@click.option("--failures-only", is_flag=True, help="Only print graphs without the WLP.")
@click.option("--include", multiple=True, metavar="GRAPH", help="Extra base graphs to check first.")
@click.pass_obj
def search(obj: Ctx, max_n, min_n, samples, failures_only, include):
    """Stream WLP verdicts of w(H) over small base graphs H."""
    if max_n > 6 and samples <= 0:
        raise click.BadParameter("max-n above 6 needs --samples", param_hint="--max-n")
    findings = []
    total = with_wlp = 0
    out_lines = []
    extra = [_graph(g, False) for g in include]
    for f in run_search(max_n, obj.char, samples=samples, seed=obj.seed,
                        method=obj.method, min_n=min_n, include=extra):
        total += 1
        with_wlp += f.has_wlp
        if failures_only and f.has_wlp:
            continue
        if obj.fmt == "json":
            findings.append(f.to_dict())
        elif obj.out:
            out_lines.append(f.line())
        else:
            click.echo(f.line())
    summary = f"# graphs {total}  wlp {with_wlp}  no-wlp {total - with_wlp}"
    if obj.fmt == "json" or obj.out:
        obj.emit("\n".join(out_lines + [summary]) + "\n",
                 {"findings": findings, "total": total, "wlp": with_wlp})
    else:
        click.echo(summary)
    sys.exit(0 if with_wlp == total else 1)


if __name__ == "__main__":
    main()
