"""Command-line front end: censuses, point builders, verifiers and probes.

Partitions are comma-separated parts ("2,1"); the empty partition is the
empty string or "()".  Multipartitions are semicolon-separated parenthesized
partitions, e.g. "(1);(2);(1)".  Exit codes: 0 success or pass, 1
verification/certification failure, 2 usage error, 3 solver error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .census import (
    ChiCycleError,
    ChiSolveError,
    ChiSolver,
    ChiTable,
    PsiOracle,
    census_An,
    census_Tn_strata,
    small_loop_census,
    top_stratum_components,
)
from .partitions import Multipartition, Partition
from .probe import commutator_type_histogram, histogram_to_json, probe_component_dim
from .reps import (
    QuiverRep,
    build_An_point,
    build_Tn_point,
    direct_loop_pair,
    loop_pair_search,
    verify_point,
)

CACHE_ENV_VAR = "NILCONE_CACHE"


@dataclass
class Config:
    cache_path: Path | None
    output_format: str = "table"
    seed: int = 0
    trials: int = 1000
    out: Path | None = None


def default_cache_path() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "nilcone" / "chi_cache.json"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text:
        return Partition()
    try:
        return Partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from exc


def parse_multipartition(text: str) -> Multipartition:
    return Multipartition(parse_partition(piece) for piece in text.split(";"))


def parse_dimension_vector(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad dimension vector {text!r}") from exc
    if not dims or any(x < 0 for x in dims):
        raise ValueError(f"bad dimension vector {text!r}")
    return dims


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--cache", metavar="PATH", default=None,
                        help="chi cache file (default: user cache dir, or $NILCONE_CACHE)")
    parser.add_argument("--no-cache", action="store_true", help="do not read or write a cache")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--out", metavar="FILE", default=None, help="write JSON artifact here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilcone",
        description="Component censuses and exact point probes for nilpotent cones"
        " of line and tadpole quivers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_chi = sub.add_parser("chi", help="number of components of an edge stratum")
    p_chi.add_argument("lam", help="first partition, e.g. 2,1 (empty string for ())")
    p_chi.add_argument("mu", help="second partition")
    _add_common(p_chi)

    p_census = sub.add_parser("census", help="component census of a nilpotent cone")
    p_census.add_argument("kind", choices=("an", "tn", "tn-top", "tn-small"))
    p_census.add_argument("v", help="dimension vector, e.g. 1,2,1")
    _add_common(p_census)

    p_build = sub.add_parser("build", help="construct a point of a prescribed stratum")
    p_build.add_argument("kind", choices=("an", "tn"))
    p_build.add_argument("v", help="dimension vector")
    p_build.add_argument("--strata", required=True, help='multipartition, e.g. "(1);(2);(1)"')
    _add_common(p_build)

    p_verify = sub.add_parser("verify", help="verify a stored point against a stratum")
    p_verify.add_argument("rep", help="QuiverRep JSON file")
    p_verify.add_argument("--strata", required=True)
    _add_common(p_verify)

    p_probe = sub.add_parser("probe", help="exact Jacobian-rank dimension probe")
    p_probe.add_argument("rep", help="QuiverRep JSON file")
    p_probe.add_argument("--predict", type=int, default=None, help="predicted component dimension")
    _add_common(p_probe)

    p_hist = sub.add_parser("hist", help="histogram of loop commutator Jordan types")
    p_hist.add_argument("d", type=int)
    _add_common(p_hist)

    return parser


def _config(args: argparse.Namespace) -> Config:
    if args.no_cache:
        cache = None
    elif args.cache is not None:
        cache = Path(args.cache)
    else:
        cache = default_cache_path()
    return Config(
        cache_path=cache,
        output_format=args.format,
        seed=args.seed,
        trials=args.trials,
        out=Path(args.out) if args.out else None,
    )


def _emit(payload: dict, cfg: Config, table_lines: list[str]) -> None:
    if cfg.output_format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in table_lines:
            print(line)
    if cfg.out is not None:
        cfg.out.parent.mkdir(parents=True, exist_ok=True)
        cfg.out.write_text(json.dumps(payload, indent=2))


def _open_table(cfg: Config) -> ChiTable:
    return ChiTable(cfg.cache_path)


def _fmt_partition(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def _fmt_multipartition(m) -> str:
    return ";".join(_fmt_partition(p) for p in m)


def cmd_chi(args: argparse.Namespace, cfg: Config) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    table = _open_table(cfg)
    value = ChiSolver(table).chi(lam, mu)
    table.save()
    _emit({"lam": list(lam), "mu": list(mu), "chi": value}, cfg, [str(value)])
    return 0


def cmd_census(args: argparse.Namespace, cfg: Config) -> int:
    v = parse_dimension_vector(args.v)
    table = _open_table(cfg)
    if args.kind == "an":
        res = census_An(v, table)
        payload = {"kind": "an", "v": list(v), **res.to_json()}
        lines = [f"components: {res.count}", f"dimension:  {res.dim}", "strata:"]
        lines += [f"  {_fmt_multipartition(m)}  chi={c}" for m, c in res.strata]
    elif args.kind == "tn-small":
        res = small_loop_census(v, table)
        payload = {"kind": "tn-small", "v": list(v), "count": res.count, "dim": res.dim}
        lines = [f"components: {res.count}", f"dimension:  {res.dim}"]
    elif args.kind == "tn-top":
        res = top_stratum_components(v, table)
        payload = {
            "kind": "tn-top",
            "v": list(v),
            "loop_type": list(res.loop_type),
            "count": res.count,
            "dim": res.dim,
            "codim": res.codim,
        }
        lines = [
            f"loop type:  {_fmt_partition(res.loop_type)}",
            f"components: {res.count}",
            f"dimension:  {res.dim}",
            f"codim:      {res.codim}",
        ]
    else:
        records = census_Tn_strata(v, PsiOracle(), table)
        payload = {"kind": "tn", "v": list(v), "records": [r.to_json() for r in records]}
        lines = []
        for r in records:
            if r.count is not None:
                lines.append(
                    f"{_fmt_multipartition(r.stratum)}  count={r.count}  dim={r.dim}"
                )
            else:
                lines.append(
                    f"{_fmt_multipartition(r.stratum)}  count=chi({r.chi})*psi"
                    f"  dim={r.base_dim}+dim_X({_fmt_partition(r.loop_type)})"
                )
        resolved = [r for r in records if r.count is not None]
        if len(resolved) == len(records):
            total = sum(r.count for r in resolved)
            lines.append(f"total (upper bound): {total} components")
            payload["total"] = total
    table.save()
    _emit(payload, cfg, lines)
    return 0


def cmd_build(args: argparse.Namespace, cfg: Config) -> int:
    v = parse_dimension_vector(args.v)
    strata = parse_multipartition(args.strata)
    if strata.dims != v:
        raise ValueError(f"strata sizes {strata.dims} do not match v={v}")
    if args.kind == "an":
        rep = build_An_point(strata)
    else:
        loop = direct_loop_pair(strata[-1])
        if loop is None:
            loop = loop_pair_search(v[-1], strata[-1], trials=cfg.trials, seed=cfg.seed)
        if loop is None:
            raise ValueError(
                f"no loop pair with commutator type {tuple(strata[-1])} found"
                f" in {cfg.trials} trials"
            )
        rep = build_Tn_point(strata, loop=loop)
    payload = rep.to_json()
    _emit(payload, cfg, [f"built {args.kind} point over v={list(v)}; maps for"
                         f" {len(rep.maps)} edge(s)"])
    return 0


def cmd_verify(args: argparse.Namespace, cfg: Config) -> int:
    rep = QuiverRep.from_json(json.loads(Path(args.rep).read_text()))
    strata = parse_multipartition(args.strata)
    report = verify_point(rep, strata)
    verdict = "pass" if report.passed else "FAIL"
    lines = [
        f"moment map zero:  {report.moment_zero}",
        f"nilpotent (path): {report.nilpotent_path}",
        f"nilpotent (local): {report.nilpotent_local}",
        f"vertex types ok:  {list(report.vertex_ok)}",
        f"verdict: {verdict}",
    ]
    _emit(report.to_json(), cfg, lines)
    return 0 if report.passed else 1


def cmd_probe(args: argparse.Namespace, cfg: Config) -> int:
    rep = QuiverRep.from_json(json.loads(Path(args.rep).read_text()))
    report = probe_component_dim(rep, args.predict, label=args.rep)
    lines = [
        f"ambient dim:     {report.ambient_dim}",
        f"jacobian rank:   {report.jac_rank}",
        f"local dim bound: {report.local_dim_bound}",
    ]
    if report.predicted_dim is not None:
        lines.append(f"predicted dim:   {report.predicted_dim}")
        lines.append("certified" if report.certified else "not certified")
    _emit(report.to_json(), cfg, lines)
    if report.predicted_dim is not None and not report.certified:
        return 1
    return 0


def cmd_hist(args: argparse.Namespace, cfg: Config) -> int:
    counts = commutator_type_histogram(args.d, cfg.trials, cfg.seed)
    payload = histogram_to_json(args.d, cfg.trials, cfg.seed, counts)
    lines = [f"{_fmt_partition(k)}  {v}" for k, v in counts.items()]
    _emit(payload, cfg, lines)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config(args)
    handlers = {
        "chi": cmd_chi,
        "census": cmd_census,
        "build": cmd_build,
        "verify": cmd_verify,
        "probe": cmd_probe,
        "hist": cmd_hist,
    }
    try:
        return handlers[args.command](args, cfg)
    except (ChiSolveError, ChiCycleError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, FileNotFoundError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
