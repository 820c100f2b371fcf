"""Command-line frontend.

Exit codes: 0 success, 2 schema/usage error, 3 mathematical failure.
Failures print a machine-readable error document on stderr; results are
written with the canonical serializer so they match the HTTP service byte
for byte.
"""

from __future__ import annotations

import json
import sys

import click

from .documents import (canonical_json, error_document, factorize_document,
                        fit_tolerance, interpolate_document, sample_document)
from .errors import MotionForgeError, SchemaError


def _fail(exc):
    sys.stderr.write(canonical_json(error_document(exc)) + "\n")
    sys.exit(2 if isinstance(exc, SchemaError) else 3)


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


@click.group()
def main():
    """Rational motion interpolation and linkage synthesis."""


@main.command()
@click.argument("input_path", metavar="TASK")
@click.argument("output_path", metavar="MOTION")
def interpolate(input_path, output_path):
    """Interpolate the task in TASK and write the motion to MOTION."""
    try:
        motion_doc, report = interpolate_document(_load_json(input_path))
    except MotionForgeError as exc:
        _fail(exc)
    _write(output_path, canonical_json(motion_doc))
    max_res = report["max_residual"]
    shown = "inf" if max_res is None else f"{max_res:.3e}"
    click.echo(f"scheme {motion_doc['provenance']['scheme']}: "
               f"max residual {shown}, study residue "
               f"{report['study_residue']:.3e} "
               f"({'ok' if report['ok'] else 'NOT ok'} at {report['tolerance']:.1e})")


@main.command()
@click.argument("input_path", metavar="MOTION")
@click.argument("output_path", metavar="RESULT")
def factorize(input_path, output_path):
    """Factorize the motion in MOTION into revolute factors."""
    try:
        result = factorize_document(_load_json(input_path), with_mechanisms=False)
    except MotionForgeError as exc:
        _fail(exc)
    _write(output_path, canonical_json(result))
    click.echo(f"{len(result['factorizations'])} factorization(s) of a "
               f"degree-{result['degree']} motion")


@main.command()
@click.argument("input_path", metavar="MOTION")
@click.argument("output_path", metavar="RESULT")
def mechanism(input_path, output_path):
    """Synthesize closed-loop linkages from two factorizations of MOTION."""
    try:
        result = factorize_document(_load_json(input_path), with_mechanisms=True)
    except MotionForgeError as exc:
        _fail(exc)
    _write(output_path, canonical_json(result))
    loops = result["mechanisms"]
    joints = len(loops[0]["joints"]) if loops else 0
    click.echo(f"{len(loops)} mechanism(s) with {joints} joints each")


@main.command()
@click.argument("input_path", metavar="MOTION")
@click.argument("output_path", metavar="SAMPLES")
@click.option("--count", type=int, default=None,
              help="Uniform sweep with this many samples (>= 2).")
@click.option("--at", "at_values", type=float, multiple=True,
              help="Explicit parameter value; repeatable.")
@click.option("--range", "t_range", nargs=2, type=float, default=(0.0, 1.0),
              show_default=True, help="Sweep range for --count.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default=None, help="Output format (default: by file suffix).")
def sample(input_path, output_path, count, at_values, t_range, fmt):
    """Sample poses of MOTION and write them to SAMPLES."""
    try:
        if at_values and count is not None:
            raise SchemaError("--count and --at are mutually exclusive",
                              code="BAD_OPTION")
        if not at_values and count is None:
            raise SchemaError("one of --count or --at is required",
                              code="BAD_OPTION")
        if count is not None and count < 2:
            raise SchemaError("--count must be at least 2", code="BAD_OPTION")
        doc = _load_json(input_path)
        if at_values:
            result = sample_document(doc, at=list(at_values))
        else:
            result = sample_document(doc, count=count, t_range=t_range)
    except MotionForgeError as exc:
        _fail(exc)

    if fmt is None:
        fmt = "csv" if output_path.endswith(".csv") else "json"
    if fmt == "json":
        _write(output_path, canonical_json(result))
    else:
        lines = ["t,x,y,z,r00,r01,r02,r10,r11,r12,r20,r21,r22"]
        for row in result["samples"]:
            if row.get("singular"):
                continue
            flat = [row["t"], *row["translation"],
                    *(v for r in row["rotation"] for v in r)]
            lines.append(",".join(repr(v) for v in flat))
        _write(output_path, "\n".join(lines) + "\n")
    click.echo(f"wrote {len(result['samples'])} samples to {output_path}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8720, show_default=True)
def serve(host, port):
    """Run the local HTTP/JSON service."""
    import uvicorn

    from .service import create_app

    click.echo(f"motionforge service on http://{host}:{port} "
               f"(tolerance {fit_tolerance():.1e})")
    uvicorn.run(create_app(), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
