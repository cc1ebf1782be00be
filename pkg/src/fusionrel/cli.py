"""Command line interface: ``fusionrel fusion-char | verify | schur``.

Reports are JSON with sorted keys (or a plain table) and always embed the
configuration, the caps and the library version.  Exit codes: 0 pass,
1 verification failure, 2 usage error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from .cvpres.relations import CapExceeded, Caps
from .fusion import FusionProduct, InternalError
from .lie_core import Partition, RankError, decompose_character, partitions

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
WORKERS_ENV = "FUSIONREL_WORKERS"


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    n: int
    m: int
    ell: list[int] | None = field(default_factory=list)
    r: list[int] | None = None
    params: list[str] | None = None
    cap_degree: int | None = None
    cap_relations: int | None = None
    cap_word: int | None = None
    sweep: dict | None = None
    diagnostic: bool = False
    fmt: str = "json"
    out: str | None = None

    def validate(self):
        if self.n < 1:
            raise UsageError(f"rank n must be >= 1, got {self.n}")
        if not 1 <= self.m <= self.n:
            raise UsageError(f"index m must lie in 1..{self.n}, got {self.m}")
        for name in ("cap_degree", "cap_relations", "cap_word"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
        if self.params is not None:
            vals = [Fraction(x) for x in self.params]
            if len(set(vals)) != len(vals):
                raise UsageError("parameters must be pairwise distinct")
            if len(vals) != Partition(self.ell or []).stripped().p:
                raise UsageError("need one parameter per nonzero part")

    @property
    def caps(self) -> Caps:
        return Caps(self.cap_degree, self.cap_relations, self.cap_word)

    def to_jsonable(self) -> dict:
        d = asdict(self)
        d.pop("out")
        return d


def _partition(text: str) -> list[int]:
    try:
        return list(Partition.parse(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _params(text: str) -> list[str]:
    try:
        vals = [x.strip() for x in text.split(",") if x.strip()]
        for x in vals:
            Fraction(x)
        return vals
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad parameter list {text!r}: {exc}") from None


def _sweep(text: str) -> dict:
    out = {}
    for item in text.split(","):
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in ("total", "maxp") or not val.strip().isdigit():
            raise argparse.ArgumentTypeError(f"bad sweep spec {text!r}; expected total=T,maxp=P")
        out[key] = int(val)
    if "total" not in out:
        raise argparse.ArgumentTypeError("sweep needs total=T")
    out.setdefault("maxp", out["total"])
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fusionrel", description="Fusion products and their presentations.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("-n", type=int, required=True, help="rank of sl(n+1)")
        p.add_argument("-m", type=int, required=True, help="index of the fundamental weight")
        p.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")
        p.add_argument("--out", help="write the report here instead of stdout")

    def caps(p):
        p.add_argument("--cap-degree", type=int, help="largest t-degree (default p-1)")
        p.add_argument("--cap-relations", type=int, help="bound R on r+s (default 2(L1+p)+2)")
        p.add_argument("--cap-word", type=int, help="largest word length in the closure")

    p = sub.add_parser("fusion-char", help="graded character of a fusion product")
    common(p)
    p.add_argument("-l", "--ell", type=_partition, default=[], help="partition, e.g. 2,1")
    p.add_argument("--params", type=_params, help="evaluation parameters, e.g. 0,1/2")

    p = sub.add_parser("verify", help="compare the fusion product with the presented module")
    common(p)
    caps(p)
    p.add_argument("-l", "--ell", type=_partition, default=[])
    p.add_argument("--params", type=_params)
    p.add_argument("--sweep", type=_sweep, help="all partitions of a total: total=T,maxp=P")

    p = sub.add_parser("schur", help="Schur positivity and surjection witness for a pair")
    common(p)
    caps(p)
    p.add_argument("-l", "--ell", type=_partition, default=None)
    p.add_argument("--r", type=_partition, default=None)
    p.add_argument("--sweep", type=_sweep, help="all pairs of partitions: total=T,maxp=P")
    p.add_argument("--diagnostic", action="store_true",
                   help="also evaluate pairs that are not dominant (evidence only)")
    return ap


def config_from_args(args) -> RunConfig:
    return RunConfig(
        command=args.command, n=args.n, m=args.m,
        ell=None if args.ell is None else list(args.ell), r=getattr(args, "r", None),
        params=getattr(args, "params", None),
        cap_degree=getattr(args, "cap_degree", None),
        cap_relations=getattr(args, "cap_relations", None),
        cap_word=getattr(args, "cap_word", None),
        sweep=getattr(args, "sweep", None),
        diagnostic=getattr(args, "diagnostic", False),
        fmt=args.fmt, out=args.out)


def _envelope(cfg: RunConfig, body: dict) -> dict:
    out = {"version": __version__, "config": cfg.to_jsonable(), "caps": cfg.caps.to_jsonable()}
    out.update(body)
    return out


def workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: Sequence) -> list:
    k = workers()
    if k == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))


# -- commands -----------------------------------------------------------------

def cmd_fusion_char(cfg: RunConfig) -> tuple[int, dict]:
    ell = Partition(cfg.ell).stripped()
    F = FusionProduct(cfg.n, cfg.m, ell, cfg.params)
    ch = F.graded_char
    by_degree = []
    for k in ch.degrees():
        by_degree.append([k, [[list(mu), c] for mu, c in decompose_character(ch.component(k))]])
    body = {
        "graded_character": ch.to_jsonable(),
        "graded_dims": list(ch.degree_dims()),
        "dimension": ch.dimension(),
        "decomposition_by_degree": by_degree,
        "params": [str(c) for c in F.params],
    }
    return EXIT_PASS, _envelope(cfg, body)


def _verify_one(job) -> dict:
    from .cvpres.verify import verify_theorem_instance
    n, m, ell, caps, params = job
    try:
        v = verify_theorem_instance(n, m, ell, caps, params)
        return {"status": "pass" if v.passed else "fail", "verdict": v.to_jsonable()}
    except CapExceeded as exc:
        return {"status": "cap_exceeded", "instance": {"n": n, "m": m, "ell": list(ell)},
                "error": str(exc), "diagnostics": _jsonable(exc.diagnostics)}


def cmd_verify(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.sweep:
        ells = [list(q) for q in partitions(cfg.sweep["total"], cfg.sweep["maxp"])]
        jobs = [(cfg.n, cfg.m, Partition(e), cfg.caps, None) for e in ells]
    else:
        jobs = [(cfg.n, cfg.m, Partition(cfg.ell), cfg.caps, cfg.params)]
    results = _map(_verify_one, jobs)
    statuses = {r["status"] for r in results}
    code = EXIT_PASS if statuses == {"pass"} else EXIT_CAP if "cap_exceeded" in statuses else EXIT_FAIL
    body = {"results": results, "pass": code == EXIT_PASS}
    return code, _envelope(cfg, body)


def _schur_one(job) -> dict:
    from .schur import DominancePair, schur_positivity_check
    n, m, ell, r, caps, diagnostic = job
    pair = DominancePair(m, ell, r)
    v = schur_positivity_check(n, m, pair, diagnostic=diagnostic, witness=pair.dominant or diagnostic,
                               caps=caps)
    return v.to_jsonable()


def cmd_schur(cfg: RunConfig) -> tuple[int, dict]:
    from .schur import pairs_of_total
    if cfg.sweep:
        jobs = [(cfg.n, cfg.m, list(a), list(b), cfg.caps, cfg.diagnostic)
                for a, b in pairs_of_total(cfg.sweep["total"], cfg.sweep["maxp"])]
    else:
        if cfg.ell is None or cfg.r is None:
            raise UsageError("schur needs --ell and --r, or --sweep")
        jobs = [(cfg.n, cfg.m, cfg.ell, cfg.r, cfg.caps, cfg.diagnostic)]
    results = _map(_schur_one, jobs)
    failed = [v for v in results if v["dominates"] and not (v["schur_positive"] and v["witness"])]
    body = {"results": results, "pass": not failed}
    return (EXIT_FAIL if failed else EXIT_PASS), _envelope(cfg, body)


COMMANDS = {"fusion-char": cmd_fusion_char, "verify": cmd_verify, "schur": cmd_schur}


# -- output -------------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"
    return _table(report)


def _table(report: dict) -> str:
    cfg = report["config"]
    lines = [f"fusionrel {report['version']}  {cfg['command']}  n={cfg['n']} m={cfg['m']}"]
    if "graded_dims" in report:
        lines.append(f"ell = {cfg['ell']}  dimension = {report['dimension']}")
        lines.append(f"graded dims = {tuple(report['graded_dims'])}")
        for k, dec in report["decomposition_by_degree"]:
            terms = " + ".join(f"{c}*V{tuple(mu)}" if c != 1 else f"V{tuple(mu)}" for mu, c in dec)
            lines.append(f"  q^{k}: {terms}")
    for res in report.get("results", []):
        if "verdict" in res:
            v = res["verdict"]
            lines.append(f"{res['status']:5s} ell={v['instance']['ell']} dim={v['dim_presented']}/{v['dim_fusion']} "
                         f"graded={v['graded_char_equal']} witness={v['surjection_witness']} "
                         f"dims={tuple(v['graded_dims'])}")
        elif "status" in res:
            lines.append(f"{res['status']} ell={res['instance']['ell']}: {res['error']}")
        else:
            if not res["dominates"] and res["schur_positive"] is None:
                verdict = "not applicable"
            elif res["dominates"]:
                verdict = "pass" if res["schur_positive"] and res["witness"] else "FAIL"
            else:
                verdict = f"not applicable (positive={res['schur_positive']}, witness={res['witness']})"
            lines.append(f"ell={res['ell']} r={res['r']} dominates={res['dominates']}: {verdict}")
    if "pass" in report:
        lines.append("overall: " + ("pass" if report["pass"] else "fail"))
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    try:
        cfg.validate()
        code, report = COMMANDS[cfg.command](cfg)
    except (UsageError, RankError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        print(json.dumps(_jsonable(exc.diagnostics), sort_keys=True), file=sys.stderr)
        return EXIT_CAP
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = render(report, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
