"""Command-line client; all work happens in the service (in-process by default)."""

from __future__ import annotations

import base64
import warnings
from pathlib import Path

import click
import httpx

from .service import create_app
from .storage import VARIANTS

EXIT_OK, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_CORRUPT = 0, 1, 2, 3


def _b64(data: bytes) -> str:
    return base64.b64encode(data).decode("ascii")


class ApiClient:
    """POSTs to a remote server when given one, else to an in-process app."""

    def __init__(self, server: str | None) -> None:
        if server:
            self._http = httpx.Client(base_url=server, timeout=600.0)
        else:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient
            self._http = TestClient(create_app())

    def post(self, path: str, payload: dict) -> dict:
        r = self._http.post(path, json=payload)
        if r.status_code in (400, 422):
            detail = r.json().get("detail", "")
            if isinstance(detail, dict):
                code, message = detail.get("code", "usage"), detail.get("message", "")
            else:
                code, message = "usage", str(detail)
            click.echo(f"error: {message}", err=True)
            raise SystemExit(EXIT_CORRUPT if code == "corrupt" else EXIT_USAGE)
        r.raise_for_status()
        return r.json()


@click.group()
@click.option("--server", default=None, envvar="HEAPINDEX_SERVER",
              help="Remote service URL; default is an in-process service.")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Build, query, edit, verify, and benchmark position-heap indexes."""
    ctx.obj = ApiClient(server)


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--variant", type=click.Choice(VARIANTS), default="heap",
              show_default=True)
@click.option("--max-pattern", "-m", type=int, default=None,
              help="Pattern length cap M (dynamic variant only).")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
              help="Index file path; defaults to INPUT_PATH + '.phx'.")
@click.pass_obj
def build(api: ApiClient, input_path: str, variant: str,
          max_pattern: int | None, output: str | None) -> None:
    """Index the bytes of INPUT_PATH (a 0x00 terminator is appended)."""
    data = Path(input_path).read_bytes()
    res = api.post("/build", {"text_b64": _b64(data), "variant": variant,
                              "max_pattern": max_pattern})
    blob = base64.b64decode(res["index_b64"])
    out = output or input_path + ".phx"
    Path(out).write_bytes(blob)
    for key, val in res["stats"].items():
        if key == "sections":
            for name, size in val.items():
                click.echo(f"section {name}: {size} bytes")
        else:
            click.echo(f"{key}: {val}")
    click.echo(f"wrote {out} ({len(blob)} bytes)")


@main.command()
@click.argument("index_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("pattern")
@click.option("--count/--list", "count_only", default=False,
              help="Print the occurrence count instead of positions.")
@click.pass_obj
def query(api: ApiClient, index_path: str, pattern: str, count_only: bool) -> None:
    """Report 1-based occurrences of PATTERN; exit 1 when there are none."""
    res = api.post("/query", {"index_b64": _b64(Path(index_path).read_bytes()),
                              "pattern": pattern})
    if count_only:
        click.echo(str(res["count"]))
    elif res["positions"]:
        click.echo(" ".join(map(str, res["positions"])))
    raise SystemExit(EXIT_OK if res["found"] else EXIT_NOT_FOUND)


@main.command()
@click.argument("index_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--script", "script_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="File of `I <pos> <string>` / `D <pos> <len>` / `Q <pattern>` lines.")
@click.pass_obj
def edit(api: ApiClient, index_path: str, script_path: str) -> None:
    """Apply an edit script to a dynamic index and rewrite it in place."""
    res = api.post("/edit", {"index_b64": _b64(Path(index_path).read_bytes()),
                             "script": Path(script_path).read_text("latin-1")})
    Path(index_path).write_bytes(base64.b64decode(res["index_b64"]))
    for line in res["outputs"]:
        click.echo(line)


@main.command()
@click.argument("index_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("text_path", type=click.Path(exists=True, dir_okay=False),
                required=False)
@click.pass_obj
def verify(api: ApiClient, index_path: str, text_path: str | None) -> None:
    """Run the variant's invariant suite; exit 3 on any failure."""
    payload: dict = {"index_b64": _b64(Path(index_path).read_bytes())}
    if text_path:
        payload["text_b64"] = _b64(Path(text_path).read_bytes())
    res = api.post("/verify", payload)
    for check in res["checks"]:
        click.echo(f"checked: {check}")
    if not res["ok"]:
        click.echo("verification FAILED", err=True)
        raise SystemExit(EXIT_CORRUPT)
    click.echo("ok")


@main.command()
@click.argument("corpus_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--sizes", default=None,
              help="Comma-separated prefix lengths; default is whole files.")
@click.option("--variants", default=None,
              help="Comma-separated subset of variants; default is all.")
@click.option("--max-pattern", type=int, default=8, show_default=True)
@click.option("--tsv", "tsv_path", type=click.Path(dir_okay=False), default=None,
              help="Write the table here instead of stdout.")
@click.pass_obj
def bench(api: ApiClient, corpus_dir: str, sizes: str | None,
          variants: str | None, max_pattern: int, tsv_path: str | None) -> None:
    """Time builds and queries for every file in CORPUS_DIR."""
    try:
        size_list = [int(x) for x in sizes.split(",")] if sizes else [None]
    except ValueError as exc:
        click.echo(f"error: bad --sizes: {exc}", err=True)
        raise SystemExit(EXIT_USAGE) from exc
    names, texts = [], []
    for p in sorted(x for x in Path(corpus_dir).iterdir() if x.is_file()):
        data = p.read_bytes()
        for sz in size_list:
            take = data if sz is None else data[:sz]
            names.append(f"{p.name}:{len(take)}")
            texts.append(_b64(take))
    payload = {"names": names, "texts_b64": texts, "max_pattern": max_pattern,
               "variants": variants.split(",") if variants else None}
    res = api.post("/bench", payload)
    if tsv_path:
        Path(tsv_path).write_text(res["tsv"])
        click.echo(f"wrote {tsv_path}")
    else:
        click.echo(res["tsv"], nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP service (endpoints /build /query /edit /verify /bench)."""
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port)
