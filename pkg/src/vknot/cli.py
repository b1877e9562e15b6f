"""Command-line front end.

Commands: ``invariants`` (compute selected invariants of one diagram, text
or canonical JSON, optional Betti heatmaps), ``scramble`` (deterministic
random Reidemeister walk), ``check-invariance`` (scramble harness asserting
invariant stability), ``corpus`` (bundled example diagrams).

Exit codes: 0 success; 1 invariance mismatch; 2 parse error / unknown
corpus entry; 3 size-cap exceeded; 4 flavor mismatch (invariant not
defined for the diagram's shape/flavor).
"""

from __future__ import annotations

import functools
import sys

import click

from . import corpus as corpus_mod
from . import report as report_mod
from .arrow import flat_arrow, w_poly
from .bracket import DEFAULT_MAX_CROSSINGS, f_poly
from .errors import (
    AlreadyClosed,
    DoubleLongSegment,
    FlatCodeError,
    MalformedToken,
    NotFlat,
    NotLong,
    ParseError,
    SizeCapExceeded,
)
from .gauss import CLOSED, GaussCode, parse, parse_file
from .homology import (
    DEFAULT_MAX_HOMOLOGY_CROSSINGS,
    arrow_complex,
    betti,
    betti_equal_up_to_shift,
    khovanov_complex,
)
from .moves import scramble_walk
from .parity import normalized_parity_bracket

EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_SIZE = 3
EXIT_FLAVOR = 4

_FLAVOR_ERRORS = (FlatCodeError, NotFlat, NotLong, AlreadyClosed, DoubleLongSegment)


def _exits(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ParseError as exc:
            click.echo(f"parse error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except SizeCapExceeded as exc:
            click.echo(f"size cap exceeded: {exc}", err=True)
            sys.exit(EXIT_SIZE)
        except _FLAVOR_ERRORS as exc:
            click.echo(f"flavor mismatch: {exc}", err=True)
            sys.exit(EXIT_FLAVOR)

    return wrapper


def _load(source: str | None, inline: str | None) -> GaussCode:
    if (source is None) == (inline is None):
        raise click.UsageError("provide exactly one of SOURCE file or --inline")
    if inline is not None:
        return parse(inline)
    with open(source, encoding="utf-8") as fh:
        codes = parse_file(fh.read())
    if len(codes) != 1:
        raise MalformedToken(f"{source} holds {len(codes)} diagrams, expected 1")
    return codes[0]


@click.group()
def main() -> None:
    """Virtual knot invariants from Gauss codes."""


@main.command()
@click.argument("source", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--inline", help="Gauss code given directly on the command line.")
@click.option("--odd-writhe", "flags", flag_value=report_mod.ODD_WRITHE, multiple=True)
@click.option("--f", "flags", flag_value=report_mod.F, multiple=True)
@click.option("--jones", "flags", flag_value=report_mod.JONES, multiple=True)
@click.option("--arrow", "flags", flag_value=report_mod.ARROW, multiple=True)
@click.option("--flat-arrow", "flags", flag_value=report_mod.FLAT_ARROW, multiple=True)
@click.option(
    "--parity-bracket", "flags", flag_value=report_mod.PARITY_BRACKET, multiple=True
)
@click.option("--khovanov", "flags", flag_value=report_mod.KHOVANOV, multiple=True)
@click.option(
    "--arrow-homology", "flags", flag_value=report_mod.ARROW_HOMOLOGY, multiple=True
)
@click.option("--z-mode", is_flag=True, help="Free-mode parity bracket reduction.")
@click.option("--json", "as_json", is_flag=True, help="Canonical JSON output.")
@click.option(
    "--figures",
    type=click.Path(file_okay=False),
    help="Directory for Betti-table heatmap images.",
)
@click.option("--timing", is_flag=True, help="Include (nondeterministic) timing.")
@click.option("--max-crossings", default=DEFAULT_MAX_CROSSINGS, show_default=True)
@click.option(
    "--max-homology-crossings",
    default=DEFAULT_MAX_HOMOLOGY_CROSSINGS,
    show_default=True,
)
@_exits
def invariants(
    source,
    inline,
    flags,
    z_mode,
    as_json,
    figures,
    timing,
    max_crossings,
    max_homology_crossings,
):
    """Compute invariants of one diagram (file SOURCE or --inline)."""
    code = _load(source, inline)
    selection = tuple(dict.fromkeys(flags)) or report_mod.default_selection(code)
    report = report_mod.build_report(
        code,
        selection,
        z_mode=z_mode,
        max_crossings=max_crossings,
        max_homology_crossings=max_homology_crossings,
        timing=timing,
    )
    if figures:
        report_mod.render_figures(report, figures)
    if as_json:
        click.echo(report_mod.dumps(report), nl=False)
    else:
        click.echo(report_mod.render_text(report), nl=False)


@main.command()
@click.argument("source", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--inline", help="Gauss code given directly on the command line.")
@click.option("--moves", "steps", default=50, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--max-crossings", default=DEFAULT_MAX_CROSSINGS, show_default=True)
@_exits
def scramble(source, inline, steps, seed, max_crossings):
    """Print the endpoint of a deterministic random Reidemeister walk."""
    code = _load(source, inline)
    for _, code in scramble_walk(code, steps, seed, max_crossings):
        pass
    click.echo(code.serialize())


_CHECKS = (
    report_mod.ODD_WRITHE,
    report_mod.F,
    report_mod.ARROW,
    report_mod.FLAT_ARROW,
    report_mod.PARITY_BRACKET,
    report_mod.KHOVANOV,
    report_mod.ARROW_HOMOLOGY,
)


def _checker(name: str, max_crossings: int, max_h: int):
    if name == report_mod.ODD_WRITHE:
        return (
            lambda c: (c.lift() if c.is_flat else c).odd_writhe(),
            lambda a, b: a == b,
        )
    if name == report_mod.F:
        return lambda c: f_poly(c, max_crossings), lambda a, b: a == b
    if name == report_mod.ARROW:
        return lambda c: w_poly(c, max_crossings), lambda a, b: a == b
    if name == report_mod.FLAT_ARROW:
        return lambda c: flat_arrow(c, max_crossings), lambda a, b: a == b
    if name == report_mod.PARITY_BRACKET:
        return (
            lambda c: normalized_parity_bracket(c, max_crossings=max_crossings),
            lambda a, b: a == b,
        )
    if name == report_mod.KHOVANOV:
        return (
            lambda c: betti(khovanov_complex(c, max_h)),
            lambda a, b: betti_equal_up_to_shift(a, b)[0],
        )
    if name == report_mod.ARROW_HOMOLOGY:
        return (
            lambda c: betti(arrow_complex(c, max_h)),
            lambda a, b: betti_equal_up_to_shift(a, b)[0],
        )
    raise click.UsageError(f"unknown invariant {name!r}")


def _applicable_checks(code: GaussCode) -> tuple[str, ...]:
    if code.is_flat:
        return (report_mod.ODD_WRITHE, report_mod.FLAT_ARROW)
    out = [report_mod.ODD_WRITHE, report_mod.F, report_mod.ARROW]
    if code.shape == CLOSED:
        out.append(report_mod.PARITY_BRACKET)
    return tuple(out)


@main.command("check-invariance")
@click.argument("source", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--inline", help="Gauss code given directly on the command line.")
@click.option("--trials", default=100, show_default=True)
@click.option("--moves", "steps", default=20, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option(
    "--invariants",
    "names",
    type=click.Choice(_CHECKS),
    multiple=True,
    help="Invariants to verify (default: all applicable to the input flavor).",
)
@click.option("--max-crossings", default=DEFAULT_MAX_CROSSINGS, show_default=True)
@click.option(
    "--max-homology-crossings",
    default=DEFAULT_MAX_HOMOLOGY_CROSSINGS,
    show_default=True,
)
@_exits
def check_invariance(
    source, inline, trials, steps, seed, names, max_crossings, max_homology_crossings
):
    """Scramble the diagram and assert the selected invariants are stable."""
    code = _load(source, inline)
    names = tuple(dict.fromkeys(names)) or _applicable_checks(code)
    homology = {report_mod.KHOVANOV, report_mod.ARROW_HOMOLOGY} & set(names)
    cap = min(max_crossings, max_homology_crossings) if homology else max_crossings
    checks = {n: _checker(n, max_crossings, max_homology_crossings) for n in names}
    base = {n: fn(code) for n, (fn, _) in checks.items()}
    for trial in range(trials):
        trace = []
        current = code
        for move, current in scramble_walk(code, steps, seed + trial, cap):
            trace.append(move)
        for n, (fn, same) in checks.items():
            if not same(base[n], fn(current)):
                click.echo(f"mismatch: {n} changed on trial {trial}", err=True)
                click.echo(f"  start: {code.serialize()}", err=True)
                click.echo(f"  end:   {current.serialize()}", err=True)
                for mv in trace:
                    click.echo(f"  move:  {mv.kind} site={mv.site} params={mv.params}",
                               err=True)
                sys.exit(EXIT_MISMATCH)
    click.echo(f"ok: {trials} trials x {steps} moves preserve {', '.join(names)}")


@main.command()
@click.argument("action", type=click.Choice(["list", "show"]))
@click.argument("name", required=False)
def corpus(action, name):
    """List bundled diagrams or show one entry with its provenance."""
    if action == "list":
        for n in corpus_mod.names():
            e = corpus_mod.get(n)
            click.echo(f"{n}\t{e.code.crossings}\t{e.provenance}")
        return
    if name is None:
        raise click.UsageError("corpus show needs an entry name")
    try:
        e = corpus_mod.get(name)
    except KeyError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_PARSE)
    click.echo(e.code.serialize())
    click.echo(f"provenance: {e.provenance}")
    click.echo(f"note: {e.note}")


if __name__ == "__main__":  # pragma: no cover
    main()
