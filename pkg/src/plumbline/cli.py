"""Command-line interface.

Every command reads an arrangement JSON file ({"lines": N, "points": [...]}),
computes exactly, and writes JSON (default) or a plain-text table to stdout.
Exit codes: 0 on success, 1 when the mathematics rejects the input (an
incidence axiom fails, or a verification reports a mismatch), 2 for I/O,
parse, and usage errors.
"""

from __future__ import annotations

import json
import random
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import arrangement as arrmod
from .arrangement import Arrangement, ArrangementError, FormatError, beta, classify, incidence_graph, nbc_set
from .boundary_ring import intersection_ring, verify_double_isomorphism
from .os_algebra import double, os_algebra
from .plumbing import h1_boundary, plumbing_graph, plumbing_matrix
from .resonance import (
    AomotoPoint,
    betti_numbers,
    generic_betti,
    r11_prediction,
)

EXIT_MATH = 1
EXIT_IO = 2


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_arrangement(path: str) -> Arrangement:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        _fail(EXIT_IO, f"cannot read {path}: {exc}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        _fail(EXIT_IO, f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    try:
        return arrmod.from_json(doc)
    except FormatError as exc:
        _fail(EXIT_IO, f"{path}: {exc}")
    except ArrangementError as exc:
        _fail(EXIT_MATH, f"{path}: {exc}")


def _emit(ctx: click.Context, doc: dict, table: str | None = None) -> None:
    if ctx.obj["format"] == "table" and table is not None:
        click.echo(table)
    else:
        click.echo(json.dumps(doc, indent=2, sort_keys=True))


def _kv_table(doc: dict, prefix: str = "") -> str:
    lines = []
    for key in sorted(doc):
        val = doc[key]
        if isinstance(val, dict):
            lines.append(f"{prefix}{key}:")
            lines.append(_kv_table(val, prefix + "  "))
        else:
            lines.append(f"{prefix}{key}: {val}")
    return "\n".join(lines)


@click.group()
@click.option("--seed", default=0, show_default=True, help="Seed for all randomized sampling.")
@click.option("--trials", default=5, show_default=True, help="Sample count for generic values.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "table"]),
    default="json",
    show_default=True,
    help="Output format.",
)
@click.pass_context
def main(ctx: click.Context, seed: int, trials: int, fmt: str) -> None:
    """Exact invariants of combinatorial line arrangements: Orlik-Solomon
    algebras and their doubles, plumbed boundary 3-manifolds, and resonance."""
    ctx.obj = {"seed": seed, "trials": trials, "format": fmt}


@main.command()
@click.argument("path")
@click.pass_context
def validate(ctx: click.Context, path: str) -> None:
    """Check the incidence axioms and echo the normalized arrangement."""
    arr = _load_arrangement(path)
    doc = arrmod.to_json(arr)
    table = "\n".join(
        [f"lines: {arr.n_lines}", f"points: {len(arr.points)}"]
        + ["  " + ",".join(str(x) for x in pt) for pt in arr.points]
    )
    _emit(ctx, doc, table)


@main.command()
@click.argument("path")
@click.pass_context
def nbc(ctx: click.Context, path: str) -> None:
    """List the nbc pairs and the incidence-graph Betti number."""
    arr = _load_arrangement(path)
    pairs = nbc_set(arr)
    graph = incidence_graph(arr)
    doc = {"nbc": [[p.j, p.k] for p in pairs], "b1": graph.b1}
    table = "\n".join([f"b1: {graph.b1}"] + [f"({p.j},{p.k})" for p in pairs])
    _emit(ctx, doc, table)


@main.command("os")
@click.argument("path")
@click.pass_context
def os_cmd(ctx: click.Context, path: str) -> None:
    """Structure constants of the Orlik-Solomon algebra."""
    arr = _load_arrangement(path)
    doc = os_algebra(arr).to_json()
    _emit(ctx, doc, _kv_table({"degree1": ", ".join(doc["degree1"]), "degree2": ", ".join(doc["degree2"])})
          + "\n" + "\n".join(f"{p['x']} * {p['y']} = {p['value']}" for p in doc["products"]))


@main.command("double")
@click.argument("path")
@click.pass_context
def double_cmd(ctx: click.Context, path: str) -> None:
    """Structure constants of the doubled Orlik-Solomon algebra."""
    arr = _load_arrangement(path)
    doc = double(os_algebra(arr)).to_json()
    _emit(ctx, doc, "\n".join(f"{p['x']} * {p['y']} = {p['value']}" for p in doc["products"]))


@main.command()
@click.argument("path")
@click.pass_context
def homology(ctx: click.Context, path: str) -> None:
    """First homology of the boundary manifold, with the plumbing matrix."""
    arr = _load_arrangement(path)
    res = h1_boundary(arr)
    doc = res.to_json()
    doc["matrix"] = plumbing_matrix(plumbing_graph(arr)).to_json()
    table = _kv_table(res.to_json())
    _emit(ctx, doc, table)


@main.command()
@click.argument("path")
@click.pass_context
def ring(ctx: click.Context, path: str) -> None:
    """Intersection ring of the boundary manifold."""
    arr = _load_arrangement(path)
    rng_ = intersection_ring(arr)
    doc = rng_.to_json()
    lines = ["intersection products (H2 x H2 -> H1):"]
    for item in doc["products"]:
        value = " + ".join(
            (f"{c}*{lab}" if c not in (1, -1) else (lab if c == 1 else f"-{lab}"))
            for lab, c in item["value"].items()
        )
        lines.append(f"  {item['x']} . {item['y']} = {value or '0'}")
    lines.append("all other products of basis surfaces vanish; the product is antisymmetric")
    _emit(ctx, doc, "\n".join(lines))


@main.command()
@click.argument("path")
@click.pass_context
def verify(ctx: click.Context, path: str) -> None:
    """Verify that boundary cohomology is the double of the OS algebra."""
    arr = _load_arrangement(path)
    report = verify_double_isomorphism(arr)
    doc = report.to_json()
    _emit(ctx, doc, f"ok: {report.ok}" + ("" if report.ok else f"\nmismatches: {len(report.mismatches)}"))
    if not report.ok:
        sys.exit(EXIT_MATH)


@main.command()
@click.argument("path")
@click.pass_context
def report(ctx: click.Context, path: str) -> None:
    """Everything at once: combinatorics, algebras, homology, verification."""
    arr = _load_arrangement(path)
    doc = build_report(arr, seed=ctx.obj["seed"], trials=ctx.obj["trials"])
    _emit(ctx, doc, _kv_table({
        "class": doc["class"],
        "beta": doc["beta"],
        "b1": doc["incidence"]["b1"],
        "free_rank": doc["homology"]["free_rank"],
        "isomorphism_ok": doc["isomorphism"]["ok"],
        "betti_generic": str(doc["resonance"]["betti_generic"]),
    }))
    if not doc["isomorphism"]["ok"]:
        sys.exit(EXIT_MATH)


def build_report(arr: Arrangement, seed: int, trials: int) -> dict:
    alg = os_algebra(arr)
    dbl = double(alg)
    graph = incidence_graph(arr)
    pairs = nbc_set(arr)
    cls, dim = r11_prediction(arr)
    return {
        "arrangement": arrmod.to_json(arr),
        "class": classify(arr).value,
        "beta": beta(arr),
        "nbc": [[p.j, p.k] for p in pairs],
        "incidence": {"vertices": graph.n_vertices, "edges": len(graph.edges), "b1": graph.b1},
        "os_algebra": alg.to_json(),
        "double": dbl.to_json(),
        "homology": h1_boundary(arr).to_json(),
        "intersection_ring": intersection_ring(arr).to_json(),
        "isomorphism": verify_double_isomorphism(arr).to_json(),
        "resonance": {
            "betti_generic": [generic_betti(dbl, k, trials=trials, seed=seed) for k in range(4)],
            "beta": beta(arr),
            "class": cls.value,
            "predicted_r11_dim": dim,
            "seed": seed,
            "trials": trials,
        },
    }


@main.group()
def resonance() -> None:
    """Resonance varieties of the doubled algebra."""


def _parse_coords(values, what: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(v) for v in values)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        _fail(EXIT_IO, f"bad {what} coordinate: {exc}")


@resonance.command("eval")
@click.argument("path")
@click.option("--point", "point_json", required=True, help='Point as JSON: {"a": [...], "b": [...]}.')
@click.pass_context
def resonance_eval(ctx: click.Context, path: str, point_json: str) -> None:
    """Betti numbers of the complex at one explicit rational point."""
    arr = _load_arrangement(path)
    dbl = double(os_algebra(arr))
    try:
        doc = json.loads(point_json)
    except json.JSONDecodeError as exc:
        _fail(EXIT_IO, f"--point: invalid JSON: {exc.msg}")
    if not isinstance(doc, dict) or "a" not in doc or "b" not in doc:
        _fail(EXIT_IO, '--point must be an object with "a" and "b" arrays')
    pt = AomotoPoint(_parse_coords(doc["a"], "a"), _parse_coords(doc["b"], "b"))
    try:
        numbers = betti_numbers(dbl, pt)
    except ValueError as exc:
        _fail(EXIT_MATH, str(exc))
    out = {"betti": list(numbers)}
    _emit(ctx, out, _kv_table({"betti": str(list(numbers))}))


@resonance.command("generic")
@click.argument("path")
@click.pass_context
def resonance_generic(ctx: click.Context, path: str) -> None:
    """Generic Betti numbers, the beta invariant, and the predicted dimension."""
    arr = _load_arrangement(path)
    dbl = double(os_algebra(arr))
    seed = ctx.obj["seed"]
    trials = ctx.obj["trials"]
    cls, dim = r11_prediction(arr)
    doc = {
        "betti": [generic_betti(dbl, k, trials=trials, seed=seed) for k in range(4)],
        "beta": beta(arr),
        "class": cls.value,
        "predicted_r11_dim": dim,
        "seed": seed,
        "trials": trials,
    }
    _emit(ctx, doc, _kv_table({k: str(v) for k, v in doc.items()}))


@resonance.command("classify")
@click.argument("path")
@click.pass_context
def resonance_classify(ctx: click.Context, path: str) -> None:
    """Arrangement class and the predicted resonance dimension."""
    arr = _load_arrangement(path)
    cls, dim = r11_prediction(arr)
    doc = {"class": cls.value, "beta": beta(arr), "predicted_r11_dim": dim, "n": arr.n}
    _emit(ctx, doc, _kv_table(doc))


def random_arrangement(rng: random.Random, lines: int, density: float) -> Arrangement:
    """A random valid arrangement on the given number of lines.

    Draws multi-point candidates greedily: each attempt picks a size and a
    subset of lines, and keeps the point only when none of its pairs is
    already covered. Density 0 yields the generic arrangement (all double
    points); density 1 attempts roughly one multi-point per pair of lines.
    Every result passes ``validate``, which completes the double points.
    """
    if lines < 3:
        raise ValueError("need at least 3 lines for interesting randomness")
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    attempts = round(density * lines * (lines - 1) / 2)
    covered: set[tuple[int, int]] = set()
    points: list[list[int]] = []
    for _ in range(attempts):
        size = rng.randint(3, min(lines, 5))
        cand = sorted(rng.sample(range(lines), size))
        pairs = [(cand[i], cand[j]) for i in range(size) for j in range(i + 1, size)]
        if any(p in covered for p in pairs):
            continue
        covered.update(pairs)
        points.append(cand)
    return arrmod.validate(points, lines)


@main.command("random")
@click.option("--lines", default=5, show_default=True, help="Total number of lines (at least 3).")
@click.option(
    "--density",
    default=0.5,
    show_default=True,
    type=click.FloatRange(0.0, 1.0),
    help="How aggressively to create multiple points.",
)
@click.option("--count", default=1, show_default=True, help="How many arrangements to emit.")
@click.pass_context
def random_cmd(ctx: click.Context, lines: int, density: float, count: int) -> None:
    """Emit random valid arrangements, one JSON document per line."""
    if lines < 3:
        _fail(EXIT_IO, "--lines must be at least 3")
    rng = random.Random(ctx.obj["seed"])
    for _ in range(count):
        arr = random_arrangement(rng, lines, density)
        click.echo(json.dumps(arrmod.to_json(arr), sort_keys=True, separators=(",", ":")))


if __name__ == "__main__":
    main()
