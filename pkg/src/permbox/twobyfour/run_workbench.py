"""
CLI стенда классов Av(4123, ·).

Пример запуска из корня репозитория:
  python -m permbox.twobyfour.run_workbench count --basis 4123,1324 --max-n 6
  python -m permbox.twobyfour.run_workbench series --gf P3 --terms 10 --format bfile
  python -m permbox.twobyfour.run_workbench verify --gf P1 --max-n 9 --threads 4
  python -m permbox.twobyfour.run_workbench sample --class flag --length 60 --count 1 --seed 7

Коды выхода: 0 — успех, 1 — проверка не прошла, 2 — ошибка ввода.
Сообщения об ошибках идут в stderr с префиксом "ERROR:", stdout остаётся побайтно чистым.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Any, Callable

import mpmath
import pandas as pd

from permbox.base.ioapi.csv import df_to_text
from permbox.base.ioapi.json import dumps
from permbox.base.ioapi.txt import write_text
from permbox.common.series import format_coefficient
from permbox.twobyfour.asymptotics import (
    GROWTH_METHODS,
    asymptotic_report,
    growth_rate,
    ratio_limit,
)
from permbox.twobyfour.class_sampler import available_classes, sample_many
from permbox.twobyfour.enumeration_oracle import (
    DEFAULT_ENUMERATE_CAP,
    CountQuery,
    OracleOptions,
    count_table,
    enumerate_class,
)
from permbox.twobyfour.gf_catalog import (
    check_identities,
    entry_metadata,
    evaluate,
    export_bfile,
    resolve_entries,
    verify_against_oracle,
)
from permbox.twobyfour.perm_core import (
    format_permutation,
    grid_decompose,
    is_fan,
    left_to_right_minima,
    parse_basis,
    parse_pattern_list,
    parse_permutation,
    source_graph_decomposition,
    source_graph_patterns,
)

DEFAULT_TERMS = 60
FORMATS = ("text", "json", "csv", "bfile")
FLOAT_DIGITS = 15


@dataclass(frozen=True, slots=True)
class RunConfig:
    command: str
    fmt: str = "text"
    output: str | None = None
    threads: int = 1
    show_progress: bool = False
    basis: str | None = None
    contains: str | None = None
    gf: str | None = None
    class_id: str | None = None
    num: str | None = None
    den: str | None = None
    perm: str | None = None
    n: int | None = None
    max_n: int | None = None
    terms: int = DEFAULT_TERMS
    count: int = 1
    seed: int | None = None
    order: int = 1
    method: str = "richardson"
    cap: int = DEFAULT_ENUMERATE_CAP

    def __post_init__(self) -> None:
        if self.fmt not in FORMATS:
            raise ValueError(f"Unknown format: {self.fmt!r}. Available: {list(FORMATS)}")

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        values = {k: v for k, v in vars(args).items() if k in cls.__dataclass_fields__ and v is not None}
        return cls(**values)

    @property
    def oracle_options(self) -> OracleOptions:
        return OracleOptions(threads=self.threads, enumerate_cap=self.cap, show_progress=self.show_progress)


@dataclass(frozen=True, slots=True)
class CommandResult:
    text: str
    exit_code: int = 0


# --- Рендеринг ---


def _render_table(rows: list[tuple[int, str]], fmt: str) -> str:
    """Таблица (n, value): text и bfile — "n value", csv — "n,value", json — массив объектов."""
    if fmt in ("text", "bfile"):
        return "".join(f"{n} {v}\n" for n, v in rows)
    if fmt == "csv":
        return df_to_text(pd.DataFrame({"n": [n for n, _ in rows], "value": [v for _, v in rows]}, dtype=object))
    return dumps([{"n": n, "value": v} for n, v in rows])


def _render_record(record: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return dumps(record)
    if fmt == "csv":
        return df_to_text(pd.DataFrame([record], dtype=object))
    if fmt == "bfile":
        raise ValueError("format bfile applies only to n/value tables")
    return "".join(f"{k} {v}\n" for k, v in record.items())


def _render_perms(perms: list, fmt: str) -> str:
    if fmt == "json":
        return dumps([list(p) for p in perms])
    if fmt == "csv":
        return df_to_text(pd.DataFrame({"permutation": [format_permutation(p) for p in perms]}))
    if fmt == "bfile":
        raise ValueError("format bfile applies only to n/value tables")
    return "".join(f"{format_permutation(p, compact=True)}\n" for p in perms)


def _float(value: mpmath.mpf) -> str:
    return mpmath.nstr(value, FLOAT_DIGITS)


def _require(value: Any, flag: str) -> Any:
    if value is None:
        raise ValueError(f"{flag} is required")
    return value


# --- Команды ---


def cmd_count(config: RunConfig) -> CommandResult:
    query = CountQuery(
        basis=parse_basis(_require(config.basis, "--basis")),
        must_contain=parse_pattern_list(config.contains or ""),
        n=_require(config.max_n, "--max-n"),
    )
    table = count_table(query, options=config.oracle_options)
    return CommandResult(_render_table([(n, str(c)) for n, c in enumerate(table)], config.fmt))


def cmd_enumerate(config: RunConfig) -> CommandResult:
    query = CountQuery(
        basis=parse_basis(_require(config.basis, "--basis")),
        must_contain=parse_pattern_list(config.contains or ""),
        n=_require(config.n, "--n"),
    )
    return CommandResult(_render_perms(enumerate_class(query, options=config.oracle_options), config.fmt))


def cmd_series(config: RunConfig) -> CommandResult:
    entry_id = _require(config.gf, "--gf")
    if config.fmt == "bfile":
        return CommandResult(export_bfile(entry_id, config.terms))
    series = evaluate(entry_id, config.terms)
    rows = [(n, format_coefficient(c)) for n, c in enumerate(series)]
    return CommandResult(_render_table(rows, config.fmt))


def cmd_verify(config: RunConfig) -> CommandResult:
    report = verify_against_oracle(
        _require(config.gf, "--gf"),
        _require(config.max_n, "--max-n"),
        options=config.oracle_options,
    )
    code = 0 if report.ok else 1
    if config.fmt == "json":
        return CommandResult(dumps(report.to_dict()), code)
    if config.fmt == "csv":
        frame = pd.DataFrame(
            [
                {"n": r.n, "catalog": str(r.catalog), "oracle": str(r.oracle), "status": "PASS" if r.ok else "FAIL"}
                for r in report.rows
            ],
            dtype=object,
        )
        return CommandResult(df_to_text(frame), code)
    if config.fmt == "bfile":
        raise ValueError("format bfile applies only to n/value tables")
    lines = [f"{r.n} {r.catalog} {r.oracle} {'PASS' if r.ok else 'FAIL'}" for r in report.rows]
    return CommandResult("".join(f"{line}\n" for line in lines), code)


def cmd_identities(config: RunConfig) -> CommandResult:
    report = check_identities(config.terms)
    code = 0 if report.ok else 1
    if config.fmt == "json":
        return CommandResult(dumps(report.to_dict()), code)
    if config.fmt != "text":
        raise ValueError(f"format {config.fmt} is not supported by identities")
    lines = []
    for check in report.checks:
        if check.ok:
            lines.append(f"PASS {check.name}")
        else:
            lines.append(f"FAIL {check.name} (first nonzero residual at n={check.first_failing_index})")
    return CommandResult("".join(f"{line}\n" for line in lines), code)


def cmd_catalog(config: RunConfig) -> CommandResult:
    records = [entry_metadata(entry_id) for entry_id in resolve_entries(config.gf)]
    if config.fmt == "json":
        return CommandResult(dumps(records))
    if config.fmt == "csv":
        return CommandResult(df_to_text(pd.DataFrame(records, dtype=object)))
    if config.fmt == "bfile":
        raise ValueError("format bfile applies only to n/value tables")
    lines = [f"{r['id']} {r['basis'] or '-'} {r['title']}" for r in records]
    return CommandResult("".join(f"{line}\n" for line in lines))


def cmd_decompose(config: RunConfig) -> CommandResult:
    perm = parse_permutation(_require(config.perm, "--perm"))
    graphs = source_graph_decomposition(perm)
    patterns = source_graph_patterns(perm)
    grid = grid_decompose(perm)
    record: dict[str, Any] = {
        "permutation": format_permutation(perm),
        "left_to_right_minima": ",".join(str(v) for v in left_to_right_minima(perm)),
        "minima_positions": ",".join(str(p) for p in graphs.minima_positions),
        "source_graph_patterns": ";".join(format_permutation(p) for p in patterns),
        "source_graph_fans": ",".join("yes" if is_fan(p) else "no" for p in patterns),
        "grid_split_value": grid.split_value,
        "grid_ok": grid.ok,
    }
    return CommandResult(_render_record(record, config.fmt))


def cmd_sample(config: RunConfig) -> CommandResult:
    perms = sample_many(
        _require(config.class_id, "--class"),
        _require(config.n, "--length"),
        config.count,
        seed=config.seed,
        show_progress=config.show_progress,
    )
    return CommandResult(_render_perms(perms, config.fmt))


def cmd_growth(config: RunConfig) -> CommandResult:
    entry_id = _require(config.gf, "--gf")
    coeffs = evaluate(entry_id, config.terms).to_integers()
    value = growth_rate(coeffs, method=config.method)
    if config.fmt == "text":
        return CommandResult(f"{_float(value)}\n")
    record = {"entry": entry_id.upper(), "terms": config.terms, "method": config.method, "growth_rate": _float(value)}
    return CommandResult(_render_record(record, config.fmt))


def cmd_asym(config: RunConfig) -> CommandResult:
    report = asymptotic_report(_require(config.gf, "--gf"), _require(config.n, "--n"), config.order)
    return CommandResult(_render_record(report.to_dict(), config.fmt))


def cmd_ratio(config: RunConfig) -> CommandResult:
    num = _require(config.num, "--num")
    den = _require(config.den, "--den")
    n = _require(config.n, "--n")
    value = ratio_limit(num, den, n)
    if config.fmt == "text":
        return CommandResult(f"{_float(value)}\n")
    record = {"num": num.upper(), "den": den.upper(), "n": n, "ratio": _float(value)}
    return CommandResult(_render_record(record, config.fmt))


COMMANDS: dict[str, Callable[[RunConfig], CommandResult]] = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "series": cmd_series,
    "verify": cmd_verify,
    "identities": cmd_identities,
    "catalog": cmd_catalog,
    "decompose": cmd_decompose,
    "sample": cmd_sample,
    "growth": cmd_growth,
    "asym": cmd_asym,
    "ratio": cmd_ratio,
}


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", default="text", choices=FORMATS, help="Output format")
    common.add_argument("--output", dest="output", default=None, help="Write output to this path instead of stdout")
    common.add_argument("--threads", dest="threads", default=1, type=int, help="Oracle worker processes")
    common.add_argument("--progress", dest="show_progress", action="store_true", help="Show progress bars on stderr")

    parser = argparse.ArgumentParser(prog="permbox", description="Workbench for Av(4123,1324), Av(4123,1243), Av(4123,1342)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="Oracle count table for n = 0..max-n")
    p.add_argument("--basis", required=True, help="Basis patterns, e.g. 4123,1324")
    p.add_argument("--contains", default=None, help="Patterns every counted permutation must contain")
    p.add_argument("--max-n", dest="max_n", required=True, type=int)

    p = sub.add_parser("enumerate", parents=[common], help="List class members of length n")
    p.add_argument("--basis", required=True)
    p.add_argument("--contains", default=None)
    p.add_argument("--n", dest="n", required=True, type=int)
    p.add_argument("--cap", dest="cap", default=DEFAULT_ENUMERATE_CAP, type=int, help="Maximum number of permutations")

    p = sub.add_parser("series", parents=[common], help="Coefficients of a catalog entry")
    p.add_argument("--gf", required=True, help="Catalog id")
    p.add_argument("--terms", default=DEFAULT_TERMS, type=int)

    p = sub.add_parser("verify", parents=[common], help="Catalog vs oracle for n = 0..max-n")
    p.add_argument("--gf", required=True)
    p.add_argument("--max-n", dest="max_n", required=True, type=int)

    p = sub.add_parser("identities", parents=[common], help="Check all catalog identities")
    p.add_argument("--terms", default=DEFAULT_TERMS, type=int)

    p = sub.add_parser("catalog", parents=[common], help="Catalog metadata")
    p.add_argument("--gf", default="all", help="all or comma-separated ids")

    p = sub.add_parser("decompose", parents=[common], help="Source graphs and grid split of a permutation")
    p.add_argument("--perm", required=True, help="Permutation, e.g. 31524 or 3,1,5,2,4")

    p = sub.add_parser("sample", parents=[common], help="Uniform random class members")
    p.add_argument("--class", dest="class_id", required=True, help=f"One of: {', '.join(available_classes())}")
    p.add_argument("--length", dest="n", required=True, type=int)
    p.add_argument("--count", default=1, type=int)
    p.add_argument("--seed", default=None, type=int)

    p = sub.add_parser("growth", parents=[common], help="Growth rate from exact coefficients")
    p.add_argument("--gf", required=True)
    p.add_argument("--terms", default=400, type=int)
    p.add_argument("--method", default="richardson", choices=GROWTH_METHODS)

    p = sub.add_parser("asym", parents=[common], help="Transfer prediction vs exact coefficient")
    p.add_argument("--gf", required=True)
    p.add_argument("--n", dest="n", required=True, type=int)
    p.add_argument("--order", default=1, type=int)

    p = sub.add_parser("ratio", parents=[common], help="Ratio of exact coefficients at n")
    p.add_argument("--num", required=True)
    p.add_argument("--den", required=True)
    p.add_argument("--n", dest="n", required=True, type=int)

    return parser.parse_args(argv)


def _emit(text: str, output: str | None) -> None:
    if output:
        write_text(output, text)
        print(f"INFO: wrote {output}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    """
    Функция разбирает аргументы, выполняет подкоманду и возвращает код выхода.
    """
    try:
        args = _parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = RunConfig.from_namespace(args)
        result = COMMANDS[config.command](config)
        _emit(result.text, config.output)
    except ValueError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 1
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
