"""Command-line front end: ``vertexlab <command> [--flags]``.

Exit status is 0 on success, 1 when a verification finds a mismatch (the
witness is printed), and 2 on usage errors.
"""

from __future__ import annotations

import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import click

from . import checks, hilb, pipeline, taut, toric, vertex
from .output import FORMATS, emit_report, emit_series
from .parallel import JOBS_ENV
from .report import Report


@dataclass(frozen=True)
class RunConfig:
    command: str
    orders: dict = field(default_factory=dict)
    regime: str | None = None
    fmt: str = "json"
    out: Path | None = None
    jobs: int = 1

    def __post_init__(self):
        bad = {k: v for k, v in self.orders.items() if v is not None and v < 0}
        if bad:
            raise click.UsageError(f"orders must be non-negative: {bad}")
        if self.regime is not None and self.regime not in toric.REGIMES:
            raise click.UsageError(f"unknown regime {self.regime!r}; choose from {sorted(toric.REGIMES)}")
        if self.fmt not in FORMATS:
            raise click.UsageError(f"unknown format {self.fmt!r}")

    def meta(self) -> dict:
        d = asdict(self)
        d["out"] = str(self.out) if self.out else None
        return d


def _write(cfg: RunConfig, text: str) -> None:
    if cfg.out is not None:
        cfg.out.write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _finish_report(cfg: RunConfig, rep: Report) -> int:
    _write(cfg, emit_report(rep, cfg.fmt, cfg.orders))
    if not rep.passed and cfg.out is not None:
        click.echo(str(rep), err=True)
    return 0 if rep.passed else 1


def output_options(fn):
    fn = click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True,
                      help="Output format.")(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
                      help="Write output to this file instead of stdout.")(fn)
    fn = click.option("--jobs", type=click.IntRange(min=1), envvar=JOBS_ENV, default=1, show_default=True,
                      help=f"Worker processes (falls back to ${JOBS_ENV}).")(fn)
    return fn


def order_option(name: str, default: int, help: str):
    return click.option(f"--{name}", type=click.IntRange(min=0), default=default, show_default=True, help=help)


@click.group(context_settings={"help_option_names": ["--help"]})
def cli():
    """Exact localization series, vertex limits and their verification."""


# -- series ------------------------------------------------------------------------

@cli.command("f-series")
@order_option("zorder", 2, "Truncation order in z.")
@order_option("yorder", 2, "Truncation order in y.")
@click.option("--y-zero", is_flag=True, help="Set y = 0.")
@output_options
def f_series(zorder, yorder, y_zero, fmt, out, jobs):
    """The localization series F(z, m1, m2, m3, y)."""
    cfg = RunConfig("f-series", {"zorder": zorder, "yorder": yorder}, fmt=fmt, out=out, jobs=jobs)
    s = hilb.compute_F(nz=zorder, ny=yorder, y_zero=y_zero)
    _write(cfg, emit_series(s, fmt, cfg.meta()))
    return 0


@cli.command("dt-limit")
@click.option("--geometry", type=click.Choice(sorted(toric.GEOMETRIES)), required=True)
@click.option("--regime", type=click.Choice(sorted(toric.REGIMES)), required=True)
@order_option("kahler-degree", 2, "Total Kahler degree.")
@click.option("--qt-order", type=click.IntRange(min=0), default=None,
              help="Expand coefficients in t, q up to this total degree.")
@click.option("--route", type=click.Choice(["vertex", "closed"]), default="vertex", show_default=True,
              help="Sum over edge assignments, or the product formula.")
@output_options
def dt_limit(geometry, regime, kahler_degree, qt_order, route, fmt, out, jobs):
    """Preferred-slope limit of the reduced DT partition function."""
    cfg = RunConfig("dt-limit", {"kahler_degree": kahler_degree, "qt_order": qt_order},
                    regime=regime, fmt=fmt, out=out, jobs=jobs)
    if route == "vertex":
        s = toric.reduced_limit_vertex_sum(toric.GEOMETRIES[geometry](), toric.REGIMES[regime], kahler_degree)
    else:
        s = toric.closed_form_limit(geometry, regime, kahler_degree)
    if qt_order is not None:
        s = toric.truncate_mode_expanded(s, qt_order)
    _write(cfg, emit_series(s, fmt, cfg.meta()))
    return 0


@cli.group("taut")
def taut_group():
    """Tautological bundles on Hilbert schemes of toric surfaces."""


def _surface(surface: str, degree: str) -> taut.ToricSurfaceData:
    try:
        parts = [int(x) for x in degree.split(",")]
    except ValueError:
        raise click.UsageError(f"bad degree {degree!r}")
    if surface == "P2":
        if len(parts) != 1:
            raise click.UsageError("P2 takes a single degree, e.g. --degree 2")
        return taut.p2(parts[0])
    if len(parts) != 2:
        raise click.UsageError("P1xP1 takes a bidegree, e.g. --degree 1,0")
    return taut.p1p1(tuple(parts))


@taut_group.command("chi")
@click.option("--surface", type=click.Choice(["P2", "P1xP1"]), required=True)
@click.option("--degree", default="0", show_default=True, help="Line bundle degree: d for P2, a,b for P1xP1.")
@click.option("--functor", type=click.Choice(["lambda", "sym"]), default="lambda", show_default=True)
@order_option("zorder", 4, "Number of points n.")
@order_option("korder", 3, "Exterior or symmetric power k.")
@output_options
def taut_chi(surface, degree, functor, zorder, korder, fmt, out, jobs):
    """Generating series of chi(S^[n], Lambda^k L^[n]) (with sign (-m)^k) or of Sym^k."""
    cfg = RunConfig("taut chi", {"zorder": zorder, "korder": korder}, fmt=fmt, out=out, jobs=jobs)
    S = _surface(surface, degree)
    s = taut.nonequivariant_series(S, functor, (zorder, korder))
    _write(cfg, emit_series(s, fmt, {**cfg.meta(), "surface": S.label, "functor": functor}))
    return 0


# -- verifications ---------------------------------------------------------------------

@cli.group("verify")
def verify():
    """Run one verification and print its report."""


@verify.command("symmetry")
@order_option("zorder", 2, "Truncation order in z.")
@order_option("yorder", 2, "Truncation order in y.")
@output_options
def v_symmetry(zorder, yorder, fmt, out, jobs):
    cfg = RunConfig("verify symmetry", {"zorder": zorder, "yorder": yorder}, fmt=fmt, out=out, jobs=jobs)
    return _finish_report(cfg, hilb.verify_symmetry(zorder, yorder))


@verify.command("denominator")
@order_option("zorder", 5, "Truncation order in z.")
@click.option("--corrupt", is_flag=True, help="Negative control: perturb the closed form.")
@output_options
def v_denominator(zorder, corrupt, fmt, out, jobs):
    cfg = RunConfig("verify denominator", {"zorder": zorder}, fmt=fmt, out=out, jobs=jobs)
    return _finish_report(cfg, hilb.verify_denominator(zorder, corrupt=corrupt))


@verify.command("nekrasov")
@order_option("order", 4, "Order in Q.")
@output_options
def v_nekrasov(order, fmt, out, jobs):
    cfg = RunConfig("verify nekrasov", {"order": order}, fmt=fmt, out=out, jobs=jobs)
    return _finish_report(cfg, vertex.nekrasov_check(order))


@verify.command("rigidity")
@order_option("max-size", 4, "Largest plane partition.")
@click.option("--slopes", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@output_options
def v_rigidity(max_size, slopes, seed, fmt, out, jobs):
    cfg = RunConfig("verify rigidity", {"max_size": max_size}, fmt=fmt, out=out, jobs=jobs)
    return _finish_report(cfg, checks.verify_rigidity(max_size, slopes, seed))


@verify.command("edge-tables")
@order_option("max-size", 5, "Largest partition size.")
@output_options
def v_edge_tables(max_size, fmt, out, jobs):
    cfg = RunConfig("verify edge-tables", {"max_size": max_size}, fmt=fmt, out=out, jobs=jobs)
    return _finish_report(cfg, checks.verify_edge_tables(max_size))


@verify.command("vertex")
@order_option("max-leg", 2, "Largest leg size.")
@order_option("order", 4, "Relative order in Q.")
@output_options
def v_vertex(max_leg, order, fmt, out, jobs):
    cfg = RunConfig("verify vertex", {"max_leg": max_leg, "order": order}, fmt=fmt, out=out, jobs=jobs)
    return _finish_report(cfg, checks.verify_vertex(max_leg, order, jobs=jobs))


@verify.command("slope-independence")
@click.option("--geometry", type=click.Choice(sorted(toric.GEOMETRIES)), required=True)
@order_option("kahler-degree", 2, "Total Kahler degree.")
@click.option("--qt-order", type=click.IntRange(min=0), default=6, show_default=True)
@click.option("--corrupt-row", type=click.Choice(["none", "minus-one", "zero-minus-two"]), default="none",
              show_default=True, help="Negative control: swap the exponents of one edge table.")
@output_options
def v_slope(geometry, kahler_degree, qt_order, corrupt_row, fmt, out, jobs):
    cfg = RunConfig("verify slope-independence", {"kahler_degree": kahler_degree, "qt_order": qt_order},
                    fmt=fmt, out=out, jobs=jobs)
    tables = vertex.EDGE_TABLES
    if corrupt_row != "none":
        kind = vertex.MINUS_ONE if corrupt_row == "minus-one" else vertex.ZERO_MINUS_TWO
        tables = vertex.EdgeTables(corrupt={(kind, s) for s in vertex.EdgeTables.regimes(kind)})
    return _finish_report(cfg, toric.verify_slope_independence(geometry, kahler_degree, qt_order, tables))


@verify.command("pipeline")
@order_option("order", 2, "Order in each of u', v', m'.")
@output_options
def v_pipeline(order, fmt, out, jobs):
    cfg = RunConfig("verify pipeline", {"order": order}, fmt=fmt, out=out, jobs=jobs)
    return _finish_report(cfg, pipeline.run_pipeline((order, order, order)))


@verify.command("taut")
@order_option("n", 5, "Number of points for line-bundle corollaries.")
@order_option("rank2-n", 4, "Number of points for rank-2 corollaries.")
@order_option("cobordism-order", 4, "z- and m-order of the cobordism reconstruction.")
@output_options
def v_taut(n, rank2_n, cobordism_order, fmt, out, jobs):
    cfg = RunConfig("verify taut", {"n": n, "rank2_n": rank2_n, "cobordism_order": cobordism_order},
                    fmt=fmt, out=out, jobs=jobs)
    return _finish_report(cfg, taut.verify_corollaries(n, rank2_n, cobordism_order))


@verify.command("identities")
@order_option("order", 6, "Order of the partition-count identities.")
@output_options
def v_identities(order, fmt, out, jobs):
    """Skew Schur Cauchy identities and plethystic partition counts."""
    cfg = RunConfig("verify identities", {"order": order}, fmt=fmt, out=out, jobs=jobs)
    rep = Report("identities", True, {"order": order})
    rep.merge(checks.verify_schur_identities())
    rep.merge(checks.verify_partition_counts(order))
    return _finish_report(cfg, rep)


def main(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit status."""
    try:
        rv = cli.main(args=argv, prog_name="vertexlab", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return 2
    except click.exceptions.Abort:
        return 2
    except click.ClickException as e:
        e.show()
        return e.exit_code
    if isinstance(rv, int):
        return rv
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
