"""Command-line interface.

Three subcommands: ``compare`` renders a comparison of local files with no
network involved, ``generate`` fetches fresh solutions from a provider and
renders those, ``serve`` starts the HTTP service. Exit codes: 0 success,
1 input/output failure, 2 usage error, 3 provider failure. Diagnostics go
to stderr; only the rendered output goes to stdout.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from typing import Callable

from .errors import NwayError, ProviderError, SolutionInputError
from .provider import ProviderConfig, generate
from .rendering import ComparisonDocument, build_comparison, render_ansi, render_html
from .scoring import ColorScale, Hue
from .solutions import SolutionSet, load_solutions
from .units import UnitMode

__all__ = ["main"]

DEFAULT_PORT = 8787

_CONFIG_KEYS: dict[str, Callable[[str], object]] = {
    "base_url": str,
    "api_key": str,
    "model": str,
    "temperature": float,
    "max_tokens": int,
    "samples": int,
    "timeout": float,
    "retries": int,
    "max_parallel": int,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except SolutionInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ProviderError as exc:
        print(f"provider error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NwayError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nway",
        description=(
            "Compare N candidate solutions to one prompt; text every "
            "solution shares stays plain, unique text is highlighted, "
            "brighter meaning more unique."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compare = commands.add_parser(
        "compare", help="compare local solution files (offline)"
    )
    compare.add_argument("files", nargs="+", help="solution files, two or more")
    _add_render_options(compare)
    compare.set_defaults(handler=_run_compare)

    gen = commands.add_parser(
        "generate", help="fetch N completions for a prompt and compare them"
    )
    gen.add_argument("prompt", help="the prompt to request solutions for")
    gen.add_argument(
        "--samples", type=int, default=None, help="solutions to request (default 5)"
    )
    gen.add_argument(
        "--save-dir",
        default=None,
        help="also write the raw solutions here as numbered files",
    )
    _add_provider_options(gen)
    _add_render_options(gen)
    gen.set_defaults(handler=_run_generate)

    serve = commands.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=DEFAULT_PORT)
    serve.add_argument(
        "--ui-dir",
        default=None,
        help="directory with the built web UI (default: ./frontend/dist if present)",
    )
    serve.add_argument(
        "--dev",
        action="store_true",
        help="allow cross-origin requests (UI served from another port)",
    )
    serve.add_argument(
        "--samples", type=int, default=None, help="default solutions per prompt"
    )
    _add_provider_options(serve)
    serve.set_defaults(handler=_run_serve)

    return parser


def _add_render_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--unit",
        choices=[m.value for m in UnitMode],
        default=UnitMode.CHAR.value,
        help="comparison granularity (default: char)",
    )
    sub.add_argument(
        "--hue",
        choices=[h.value for h in Hue],
        default=Hue.BLUE.value,
        help="highlight hue (default: blue)",
    )
    sub.add_argument(
        "--format",
        choices=["ansi", "html", "json"],
        default="ansi",
        help="output format (default: ansi)",
    )
    sub.add_argument(
        "-o",
        "--output",
        default=None,
        help="write output to this file instead of stdout",
    )
    sub.add_argument(
        "--no-color",
        action="store_true",
        help="ansi format only: omit color escape sequences",
    )


def _add_provider_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--base-url",
        default=None,
        help="provider API root (or set NWAY_BASE_URL)",
    )
    sub.add_argument("--model", default=None, help="model name to request")
    sub.add_argument(
        "--api-key",
        default=None,
        help="bearer token (or set NWAY_API_KEY)",
    )
    sub.add_argument("--temperature", type=float, default=None)
    sub.add_argument("--max-tokens", type=int, default=None)
    sub.add_argument("--timeout", type=float, default=None)
    sub.add_argument(
        "--retries", type=int, default=None, help="extra attempts per sample"
    )
    sub.add_argument(
        "--max-parallel", type=int, default=None, help="concurrent requests cap"
    )
    sub.add_argument(
        "--config",
        default=None,
        help="key=value file supplying provider settings",
    )


def _run_compare(args, parser: argparse.ArgumentParser) -> int:
    if len(args.files) < 2:
        parser.error("compare needs at least two solution files")
    solution_set = load_solutions(args.files)
    return _emit(args, solution_set)


def _run_generate(args, parser: argparse.ArgumentParser) -> int:
    config = _provider_config(args, parser, require=True)
    solution_set = generate(args.prompt, config)
    if args.save_dir:
        _save_solutions(solution_set, args.save_dir)
    return _emit(args, solution_set)


def _run_serve(args, parser: argparse.ArgumentParser) -> int:
    import uvicorn

    from .service import create_app

    config = _provider_config(args, parser, require=False)
    if config is None:
        print(
            "note: no provider configured (--base-url/--model); "
            "prompt generation is disabled, raw-solution compare still works",
            file=sys.stderr,
        )
    ui_dir = args.ui_dir
    if ui_dir is None and os.path.isdir(os.path.join("frontend", "dist")):
        ui_dir = os.path.join("frontend", "dist")
    app = create_app(provider=config, static_dir=ui_dir, dev_cors=args.dev)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def _emit(args, solution_set: SolutionSet) -> int:
    mode = UnitMode(args.unit)
    scale = ColorScale(hue=Hue(args.hue))
    document = build_comparison(solution_set, mode=mode, scale=scale)
    rendered = _render(document, args.format, colored=not args.no_color)
    if args.output:
        _write_atomic(args.output, rendered)
    else:
        sys.stdout.write(rendered)
    return 0


def _render(document: ComparisonDocument, fmt: str, colored: bool) -> str:
    if fmt == "html":
        return render_html(document)
    if fmt == "json":
        return document.to_json(indent=2) + "\n"
    text = render_ansi(document, colored=colored)
    return text if text.endswith("\n") else text + "\n"


def _write_atomic(path: str, content: str) -> None:
    """Write via a sibling temp file and rename, so failures leave no
    truncated output behind."""
    directory = os.path.dirname(os.path.abspath(path))
    descriptor, temp_path = tempfile.mkstemp(
        dir=directory, prefix=".nway-", suffix=".tmp"
    )
    try:
        with os.fdopen(descriptor, "w", encoding="utf-8") as handle:
            handle.write(content)
        os.replace(temp_path, path)
    except BaseException:
        try:
            os.unlink(temp_path)
        except OSError:
            pass
        raise


def _save_solutions(solution_set: SolutionSet, directory: str) -> None:
    os.makedirs(directory, exist_ok=True)
    for solution in solution_set.solutions:
        name = os.path.join(directory, f"solution_{solution.index + 1}.txt")
        _write_atomic(name, solution.text)


def _provider_config(
    args, parser: argparse.ArgumentParser, require: bool
) -> ProviderConfig | None:
    settings = _read_config_file(args.config, parser) if args.config else {}

    base_url = _first(args.base_url, os.environ.get("NWAY_BASE_URL"),
                      settings.get("base_url"))
    model = _first(args.model, settings.get("model"))
    api_key = _first(args.api_key, os.environ.get("NWAY_API_KEY"),
                     settings.get("api_key"), "")

    if not base_url or not model:
        if require:
            missing = "--base-url (or NWAY_BASE_URL)" if not base_url else "--model"
            parser.error(f"generate needs {missing}")
        return None

    values: dict[str, object] = {
        "base_url": base_url,
        "model": model,
        "api_key": api_key,
    }
    for key in ("temperature", "max_tokens", "samples", "timeout",
                "retries", "max_parallel"):
        flag = getattr(args, key, None)
        value = _first(flag, settings.get(key))
        if value is not None:
            values[key] = value
    try:
        return ProviderConfig(**values)  # type: ignore[arg-type]
    except ValueError as exc:
        parser.error(str(exc))
        raise AssertionError("unreachable")


def _read_config_file(
    path: str, parser: argparse.ArgumentParser
) -> dict[str, object]:
    try:
        with open(path, encoding="utf-8") as handle:
            raw_lines = handle.readlines()
    except OSError as exc:
        parser.error(f"cannot read config file {path}: {exc.strerror or exc}")
    settings: dict[str, object] = {}
    for number, line in enumerate(raw_lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, separator, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if not separator or not key:
            parser.error(f"{path}:{number}: expected key=value")
        if key not in _CONFIG_KEYS:
            allowed = ", ".join(sorted(_CONFIG_KEYS))
            parser.error(f"{path}:{number}: unknown key {key!r} (allowed: {allowed})")
        try:
            settings[key] = _CONFIG_KEYS[key](value)
        except ValueError:
            parser.error(f"{path}:{number}: invalid value for {key!r}: {value!r}")
    return settings


def _first(*candidates):
    for candidate in candidates:
        if candidate is not None:
            return candidate
    return None
