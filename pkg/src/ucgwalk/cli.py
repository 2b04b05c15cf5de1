"""Command-line front end: a thin client of the HTTP service.

Every command builds a request, sends it to the service, and prints the
response bytes unchanged, so CLI output inherits the service's canonical
(byte-deterministic) encoding. By default the service runs in-process over
an ASGI transport; --server (or UCGWALK_SERVER) targets a remote instance.

Exit codes: 0 on success (for detect, a certified hit; for verify, all
clauses passing), 1 for a clean "no" (detect class none, verify failures),
2 for parse or validation errors.
"""

from __future__ import annotations

import asyncio
import json
import os
import sys

import click
import httpx

from .jsonio import write_text_atomic


def _post(server: str | None, path: str, payload: dict) -> httpx.Response:
    async def go() -> httpx.Response:
        if server:
            async with httpx.AsyncClient(base_url=server, timeout=600.0) as client:
                return await client.post(path, json=payload)
        from .service.app import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://ucgwalk.internal", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _format_detail(detail) -> str:
    if isinstance(detail, list):  # pydantic validation errors
        return "; ".join(
            f"{'.'.join(str(part) for part in err.get('loc', []))}: {err.get('msg', err)}"
            for err in detail
        )
    return str(detail)


def _request(server: str | None, path: str, payload: dict) -> httpx.Response:
    response = _post(server, path, payload)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        click.echo(f"error: {_format_detail(detail)}", err=True)
        sys.exit(2)
    return response


def _emit(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text, nl=False)
        return
    try:
        write_text_atomic(output, text)
    except OSError as exc:
        click.echo(f"error: cannot write {output}: {exc}", err=True)
        sys.exit(2)


def _parse_n_single(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise click.UsageError(f"--n expects an integer, got {text!r}")


def _parse_n_range(text: str) -> list[int]:
    if ".." in text:
        first_text, _, last_text = text.partition("..")
        try:
            first, last = int(first_text), int(last_text)
        except ValueError:
            raise click.UsageError(f"--n expects <int> or <int>..<int>, got {text!r}")
        if first > last:
            raise click.UsageError(f"malformed range {text!r}: start exceeds end")
        return list(range(first, last + 1))
    return [_parse_n_single(text)]


@click.group()
@click.option(
    "--server",
    default=None,
    envvar="UCGWALK_SERVER",
    help="Service URL; by default the service runs in-process.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Quantum walks on unitary Cayley graphs."""
    ctx.obj = {"server": server}


@main.command()
@click.option("--n", "n_text", required=True, help="Vertex count (>= 2).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--output", default=None, help="Write to this path instead of stdout.")
@click.pass_context
def spectrum(ctx, n_text: str, fmt: str, output: str | None) -> None:
    """Integer eigenvalues and eigenvalue classes."""
    n = _parse_n_single(n_text)
    response = _request(ctx.obj["server"], "/spectrum", {"n": n, "format": fmt})
    _emit(response.text, output)


@main.command()
@click.option("--n", "n_text", required=True)
@click.option("--t", "t_text", default=None, help="Time, e.g. 2*pi/3 or 0.7853.")
@click.option("--method", type=click.Choice(["spectral", "oracle"]), default="spectral")
@click.option("--grid", default=4096, show_default=True, help="Grid for --emit-profile.")
@click.option("--emit-profile", is_flag=True, help="CSV of per-vertex probabilities over a time grid.")
@click.option("--output", default=None)
@click.pass_context
def evolve(ctx, n_text, t_text, method, grid, emit_profile, output) -> None:
    """Evolution operator U(t), or its probability profile over time."""
    n = _parse_n_single(n_text)
    if emit_profile:
        response = _request(ctx.obj["server"], "/evolve/profile", {"n": n, "grid": grid})
    elif t_text is not None:
        response = _request(
            ctx.obj["server"], "/evolve", {"n": n, "t": t_text, "method": method}
        )
    else:
        raise click.UsageError("provide --t for a snapshot or --emit-profile for a profile")
    _emit(response.text, output)


@main.command()
@click.option("--n", "n_text", required=True)
@click.option("--u", type=int, required=True)
@click.option("--v", type=int, required=True)
@click.option("--t", "t_text", required=True)
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("--method", type=click.Choice(["spectral", "oracle"]), default="spectral")
@click.option("--output", default=None)
@click.pass_context
def detect(ctx, n_text, u, v, t_text, tol, method, output) -> None:
    """Certify revival between u and v at time t; exit 1 if there is none."""
    n = _parse_n_single(n_text)
    response = _request(
        ctx.obj["server"],
        "/detect",
        {"n": n, "u": u, "v": v, "t": t_text, "tol": tol, "method": method},
    )
    _emit(response.text, output)
    certificate = json.loads(response.text)
    if certificate["class"] == "none":
        sys.exit(1)


@main.command()
@click.option("--n", "n_text", required=True, help="Single n or range a..b.")
@click.option("--u", type=int, default=None)
@click.option("--v", type=int, default=None)
@click.option("--grid", default=4096, show_default=True)
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("--output", default=None, help="Directory receiving one report per n.")
@click.option("--emit-profile", is_flag=True, help="Also emit (t, |alpha|^2, |beta|^2, residual) CSV.")
@click.pass_context
def scan(ctx, n_text, u, v, grid, tol, output, emit_profile) -> None:
    """Scan [0, 2*pi) for revival hits; one report per n."""
    ns = _parse_n_range(n_text)
    if (u is None) != (v is None):
        raise click.UsageError("provide both --u and --v, or neither")
    if emit_profile and output is None and len(ns) > 1:
        raise click.UsageError("--emit-profile without --output needs a single n")
    if output is not None:
        try:
            os.makedirs(output, exist_ok=True)
        except OSError as exc:
            click.echo(f"error: cannot create {output}: {exc}", err=True)
            sys.exit(2)
    server = ctx.obj["server"]
    for n in ns:
        payload = {"n": n, "grid": grid, "tol": tol}
        if u is not None:
            payload.update({"u": u, "v": v})
        report = _request(server, "/scan", payload)
        if output is not None:
            _emit(report.text, os.path.join(output, f"scan_n{n}.json"))
        elif not emit_profile:
            _emit(report.text, None)
        if emit_profile:
            profile_payload = {"n": n, "grid": grid}
            if u is not None:
                profile_payload.update({"u": u, "v": v})
            profile = _request(server, "/scan/profile", profile_payload)
            if output is not None:
                _emit(profile.text, os.path.join(output, f"profile_n{n}.csv"))
            else:
                _emit(profile.text, None)


@main.command()
@click.option("--n", "n_text", required=True, help="Range a..b (or single n).")
@click.option("--grid", default=4096, show_default=True)
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("--output", default=None)
@click.pass_context
def verify(ctx, n_text, grid, tol, output) -> None:
    """Check the revival structure laws over a range; exit 1 on violations."""
    ns = _parse_n_range(n_text)
    response = _request(
        ctx.obj["server"],
        "/verify",
        {"n_first": ns[0], "n_last": ns[-1], "grid": grid, "tol": tol},
    )
    _emit(response.text, output)
    report = json.loads(response.text)
    if not report["all_passed"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
