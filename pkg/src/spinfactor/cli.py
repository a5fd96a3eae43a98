"""Command-line surface.

Usage:
    spinfactor decompose '{"re": [1, 0, 0], "im": [0, 0, 0.5]}'
    spinfactor classify '{"re": [1, 0], "im": [0, 0]}'
    spinfactor verify tcar basis.json
    spinfactor lorentz spin1 K1 0.5 --spacetime
    spinfactor section d1 25
    spinfactor flow --a '{...}' --z '{...}' --tau 1.0
    spinfactor check main-identity --trials 1000

Vectors read and write the JSON schema {"re": [...], "im": [...]}.  All
floating-point output uses 17 significant digits so doubles round-trip; a
fixed seed therefore yields byte-identical output.  Exit codes: 0 success,
1 domain/validation failure, 2 parse failure.
"""
from __future__ import annotations

import json
import os
import sys

import click

from . import checks, config
from .basis import SpinGrid4, verify_spin_grid, verify_tcar
from .core import DimensionMismatch, DomainError, SpinVector, StructuralError
from .geometry import FlowConfig, flow, sample_section_d1, sample_section_dual
from .lorentz import GENERATORS, REPS, exp_generator, induced_spacetime_transform
from .tripotent import classify as classify_vector
from .tripotent import singular_decomposition

EXIT_DOMAIN = 1
EXIT_PARSE = 2


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _json_text(obj) -> str:
    """Deterministic JSON with 17-significant-digit floats."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int,)):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_text(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = (f"{json.dumps(str(k))}: {_json_text(v)}" for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _parse_vector(text: str) -> SpinVector:
    try:
        payload = json.loads(text)
        return SpinVector.from_json(payload)
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        click.echo(f"error: cannot parse vector: {exc}", err=True)
        sys.exit(EXIT_PARSE)


def _read_arg(value: str) -> str:
    return sys.stdin.read() if value.strip() == "-" else value


def _domain_guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (DomainError, DimensionMismatch, StructuralError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)


@click.group()
@click.option("--tol", type=float, default=config.DEFAULT_TOL, show_default=True,
              help="Absolute comparison tolerance.")
@click.option("--seed", type=int, default=None,
              help="Random seed (default: $SPINFACTOR_SEED or 0).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default=None,
              help="Output format where both are supported "
                   "(default: json; csv for section).")
@click.option("--c", "light_speed", type=float, default=1.0, show_default=True,
              help="Light-speed constant for the Lorentz commands.")
@click.pass_context
def main(ctx, tol, seed, fmt, light_speed):
    """Verified calculus on the complex spin factor."""
    if tol <= 0.0:
        click.echo("error: tolerance must be positive", err=True)
        sys.exit(EXIT_PARSE)
    if seed is None:
        seed = int(os.environ.get("SPINFACTOR_SEED", "0"))
    ctx.obj = {"tol": tol, "seed": seed, "format": fmt, "c": light_speed}


@main.command()
@click.argument("vector")
@click.pass_context
def decompose(ctx, vector):
    """Singular decomposition of a vector ('-' reads stdin)."""
    a = _parse_vector(_read_arg(vector))
    dec = _domain_guard(singular_decomposition, a, ctx.obj["tol"])
    click.echo(_json_text(dec.to_json()))


@main.command()
@click.argument("vector")
@click.pass_context
def classify(ctx, vector):
    """Tripotent class of a vector: Minimal, Maximal or NotTripotent."""
    a = _parse_vector(_read_arg(vector))
    cls = _domain_guard(classify_vector, a, ctx.obj["tol"])
    click.echo(cls.value)


@main.command()
@click.argument("kind", type=click.Choice(["tcar", "grid"]))
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def verify(ctx, kind, path):
    """Verify a TCAR basis or a spin grid stored as a JSON array of vectors."""
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
        vectors = [SpinVector.from_json(p) for p in payload]
    except (json.JSONDecodeError, ValueError, TypeError) as exc:
        click.echo(f"error: cannot parse {path}: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    if kind == "tcar":
        report = _domain_guard(verify_tcar, vectors, ctx.obj["tol"])
    else:
        if len(vectors) != 4:
            click.echo("error: a spin grid needs exactly four vectors", err=True)
            sys.exit(EXIT_PARSE)
        grid = _domain_guard(SpinGrid4, *vectors)
        report = _domain_guard(verify_spin_grid, grid, ctx.obj["tol"])
    click.echo(_json_text(report.to_json()))
    if not report.passed:
        sys.exit(EXIT_DOMAIN)


@main.command()
@click.argument("rep", type=click.Choice(list(REPS)))
@click.argument("gen", type=click.Choice(list(GENERATORS)))
@click.argument("phi", type=float)
@click.option("--spacetime", is_flag=True,
              help="Emit the induced real space-time matrix instead.")
@click.pass_context
def lorentz(ctx, rep, gen, phi, spacetime):
    """Exponentiated Lorentz generator as a matrix."""
    op = _domain_guard(exp_generator, rep, gen, phi)
    if spacetime:
        lam = _domain_guard(induced_spacetime_transform, op,
                            ctx.obj["c"], ctx.obj["tol"])
        click.echo(_json_text([[float(v) for v in row] for row in lam]))
    else:
        click.echo(_json_text(op.to_json()))


@main.command()
@click.argument("kind", type=click.Choice(["d1", "dual"]))
@click.argument("resolution", type=int)
@click.pass_context
def section(ctx, kind, resolution):
    """Sample a three-dimensional section of the unit ball or its dual."""
    sampler = sample_section_d1 if kind == "d1" else sample_section_dual
    pts = _domain_guard(sampler, resolution)
    if (ctx.obj["format"] or "csv") == "json":
        click.echo(_json_text([[float(v) for v in row] for row in pts]))
        return
    click.echo("x,y,z,norm")
    for row in pts:
        click.echo(",".join(_fmt(v) for v in row))


@main.command(name="flow")
@click.option("--a", "a_text", required=True, help="Field coefficient vector (JSON).")
@click.option("--z", "z_text", required=True, help="Starting point (JSON).")
@click.option("--tau", type=float, required=True, help="Flow time.")
@click.option("--step", type=float, default=1e-3, show_default=True)
@click.pass_context
def flow_cmd(ctx, a_text, z_text, tau, step):
    """Integrate the translation field from z for time tau."""
    a = _parse_vector(_read_arg(a_text))
    z = _parse_vector(_read_arg(z_text))
    cfg = _domain_guard(FlowConfig, step=step, tolerance=ctx.obj["tol"])
    end = _domain_guard(flow, a, z, tau, cfg)
    click.echo(_json_text(end.to_json()))


@main.command()
@click.argument("suite", required=False)
@click.option("--trials", type=int, default=None,
              help="Override the per-suite trial count.")
@click.pass_context
def check(ctx, suite, trials):
    """Run the seeded property suites (all of them when SUITE is omitted)."""
    seed, tol = ctx.obj["seed"], ctx.obj["tol"]
    if suite is not None and suite not in checks.SUITES:
        click.echo(f"error: unknown suite {suite!r}; available: "
                   + ", ".join(sorted(checks.SUITES)), err=True)
        sys.exit(EXIT_PARSE)
    names = [suite] if suite else list(checks.SUITES)
    failed = 0
    for name in names:
        result = checks.run_suite(name, seed=seed, trials=trials, tol=tol)
        status = "PASS" if result.passed else "FAIL"
        failed += 0 if result.passed else 1
        click.echo(f"{status} {result.name} trials={result.trials} "
                   f"failures={result.failures} worst={result.worst:.3e}")
    click.echo(f"{len(names) - failed}/{len(names)} suites passed")
    if failed:
        sys.exit(EXIT_DOMAIN)


if __name__ == "__main__":
    main()
