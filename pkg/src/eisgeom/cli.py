"""Command line entry point: ``eisgeom verify|dump|cache``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from . import cache as cachemod
from .report import REPORT_SCHEMA, Report

log = logging.getLogger("eisgeom")

SUITE_ORDER = ("field", "lattice", "model", "batches", "geometry", "identities", "coxeter")
DEPENDS = {
    "field": (),
    "lattice": ("field",),
    "model": ("lattice",),
    "batches": ("model",),
    "geometry": ("batches",),
    "identities": ("model",),
    "coxeter": ("identities",),
}


@dataclass
class Config:
    suites: list[str] = field(default_factory=lambda: list(SUITE_ORDER))
    cache_dir: Optional[Path] = None
    threads: int = 1
    batch_max: int = 3
    sigma_t: Fraction = Fraction(1, 2)
    report: str = "text"
    fail_fast: bool = False
    seed: int = 0
    use_cache: bool = True

    def __post_init__(self):
        if not 0 <= self.batch_max <= 3:
            raise ValueError("batch-max must be in 0..3")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")
        unknown = set(self.suites) - set(SUITE_ORDER)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")


class Context:
    """Objects shared between suites, computed on first use."""

    def __init__(self, cfg: Config):
        self.cfg = cfg
        self._memo: dict = {}

    def memo(self, key: str, make: Callable):
        if key not in self._memo:
            self._memo[key] = make()
        return self._memo[key]

    def table(self):
        from .geometry import enumerate_table1

        return self.memo("table", lambda: {n: enumerate_table1(n) for n in range(self.cfg.batch_max + 1)})

    def generic(self, name: str):
        def make():
            res, hit = cachemod.batches(name, self.cfg.batch_max, self.cfg.cache_dir, self.cfg.threads,
                                        self.cfg.use_cache)
            log.info("batches around %s %s", name, "read from cache" if hit else "enumerated")
            return res

        return self.memo(f"generic:{name}", make)

    def c_mirrors(self):
        from .geometry import union_classes

        return self.memo("cm", lambda: union_classes(*(r.roots for r in self.table().values())))

    def pinf_mirrors(self):
        from .geometry import union_classes

        return self.memo("pm", lambda: union_classes(*(r.roots for r in self.generic("pinf").values())))


def _suite_field(ctx: Context) -> list[Report]:
    from .suites import verify_field

    return [verify_field(ctx.cfg.seed)]


def _suite_lattice(ctx: Context) -> list[Report]:
    from .suites import verify_lattice

    return [verify_lattice()]


def _suite_model(ctx: Context) -> list[Report]:
    from .suites import verify_model

    return [verify_model()]


def _suite_batches(ctx: Context) -> list[Report]:
    from .geometry import verify_oracle_agreement, verify_table1

    counts = verify_table1(ctx.table())
    # a mismatch with printed counts says nothing about the soundness of the
    # enumeration itself, which the oracle agreement below gates
    counts.gating = False
    out = [counts]
    out.append(verify_oracle_agreement(ctx.table(), ctx.generic("c")))
    rep = Report("batches", "root classes around pinf by batch")
    pb = ctx.generic("pinf")
    rep.check("pinf_batch0_is_26_point_line_mirrors_up_to_scalars", pb[0].count == 13, {"count": pb[0].count})
    rep.check("pinf_counts", True, {n: r.count for n, r in pb.items()})
    out.append(rep.finish())
    return out


def _suite_geometry(ctx: Context) -> list[Report]:
    from . import geometry as g

    out = [g.verify_polygon_cover()]
    if ctx.cfg.batch_max < 3:
        rep = Report("geometry", "checks needing batches through 3")
        rep.skip("batch_dependent", f"batch-max {ctx.cfg.batch_max} < 3")
        out.append(rep.finish())
    else:
        cm = ctx.c_mirrors()
        out.append(g.verify_polygon_classification(cm, ctx.pinf_mirrors()))
        out.append(g.verify_nearest_to_rho(cm))
        out.append(g.verify_nearest_tau(ctx.generic("pinf")))
        out.append(g.verify_subball_mirrors(cm, seed=ctx.cfg.seed))
    out.append(g.verify_sigma_criteria(start=ctx.cfg.sigma_t))
    return out


def _suite_identities(ctx: Context) -> list[Report]:
    from . import isometries as iso

    return [iso.verify_triflections(), iso.verify_artin_pairs(), iso.verify_special_words(),
            iso.verify_sigma_stabilizer(), iso.verify_basepoint_conjugations()]


def _suite_coxeter(ctx: Context) -> list[Report]:
    from . import coxbraid

    return [coxbraid.deflation_check()] + coxbraid.verify_relator_suites()


RUNNERS: dict[str, Callable[[Context], list[Report]]] = {
    "field": _suite_field,
    "lattice": _suite_lattice,
    "model": _suite_model,
    "batches": _suite_batches,
    "geometry": _suite_geometry,
    "identities": _suite_identities,
    "coxeter": _suite_coxeter,
}


def run(cfg: Config) -> tuple[list[Report], bool]:
    """Run the requested suites in dependency order; dependents of a failed suite are skipped."""
    ctx = Context(cfg)
    wanted = [s for s in SUITE_ORDER if s in cfg.suites]
    status: dict[str, bool] = {}
    reports: list[Report] = []
    stop = False
    for s in wanted:
        blocked = [d for d in DEPENDS[s] if status.get(d) is False]
        if stop or blocked:
            rep = Report(s, "skipped")
            rep.skip(s, "fail-fast" if stop else f"prerequisite failed: {', '.join(blocked)}")
            reports.append(rep.finish())
            status[s] = False
            continue
        log.info("running suite %s", s)
        try:
            got = RUNNERS[s](ctx)
        except Exception as exc:  # a crash is a failure of that suite, not of the run
            log.exception("suite %s raised", s)
            rep = Report(s, "crashed")
            rep.check(f"{s}_completed", False, {"error": f"{type(exc).__name__}: {exc}"})
            got = [rep.finish()]
        reports.extend(got)
        status[s] = all(r.passed for r in got if r.gating)
        if cfg.fail_fast and not all(r.passed for r in got):
            stop = True
    ok = all(r.passed for r in reports)
    return reports, ok


def render_text(reports: list[Report], ok: bool) -> str:
    lines = []
    for r in reports:
        lines.extend(r.text_lines())
    total = sum(len(r.checks) for r in reports)
    failed = sum(len(r.failures()) for r in reports)
    lines.append(f"{'PASS' if ok else 'FAIL'}: {total - failed}/{total} checks passed")
    return "\n".join(lines)


def render_json(reports: list[Report], ok: bool, cfg: Config) -> str:
    return json.dumps({
        "passed": ok,
        "config": {"suites": cfg.suites, "batch_max": cfg.batch_max, "seed": cfg.seed,
                   "sigma_t": str(cfg.sigma_t), "threads": cfg.threads},
        "reports": [r.as_dict() for r in reports],
    }, indent=2)


# --------------------------------------------------------------------------
# dump


def _dump(what: str, args: argparse.Namespace) -> str:
    from . import model
    from .exactnum import render

    if what == "roots":
        return "\n".join(f"{k}: " + ", ".join(render(x) for x in v) for k, v in model.build_roots().items())
    if what == "points":
        return "\n".join(f"{k}: " + ", ".join(render(x) for x in v) for k, v in model.special_points().items())
    if what == "cbasis-gram":
        return "\n".join(" ".join(render(x) for x in row) for row in model.cbasis().gram)
    if what == "relators":
        from .coxbraid import dump_suite, relator_suite

        return dump_suite(relator_suite(args.name or "thm65")).rstrip("\n")
    if what == "table1":
        from .geometry import TABLE1

        return "\n".join(f"batch {r.batch}  {r.label}  listed={r.listed}" for r in TABLE1)
    if what == "batch":
        name = args.name or "c"
        res, _ = cachemod.batches(name, args.batch_max, args.cache_dir, args.threads)
        rows = res[args.batch_max].roots
        return "\n".join(" ".join(map(str, r)) for r in rows.tolist())
    if what == "schema":
        return json.dumps(REPORT_SCHEMA, indent=2)
    raise SystemExit(f"unknown object {what!r}")


DUMPABLE = ("roots", "points", "cbasis-gram", "relators", "table1", "batch", "schema")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eisgeom", description="Exact checks on an Eisenstein lattice of signature (13,1).")
    p.add_argument("--cache-dir", type=Path, default=None,
                   help=f"cache directory (default: ${cachemod.ENV_VAR} or ~/.cache/eisgeom)")
    p.add_argument("--threads", type=int, default=1, help="worker processes for enumeration")
    p.add_argument("--batch-max", type=int, default=3, choices=range(4), help="deepest batch to enumerate")
    p.add_argument("--sigma-t", type=Fraction, default=Fraction(1, 2), help="starting t for the sigma search")
    p.add_argument("--report", choices=("text", "json"), default="text")
    p.add_argument("--fail-fast", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="verb", required=True)
    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suites", nargs="*", default=["all"], help=f"any of {', '.join(SUITE_ORDER)} or all")
    v.add_argument("--no-cache", action="store_true", help="enumerate without reading or writing the cache")
    d = sub.add_parser("dump", help="print a named object")
    d.add_argument("object", choices=DUMPABLE)
    d.add_argument("name", nargs="?", help="relator suite or center name")
    c = sub.add_parser("cache", help="inspect or clear the enumeration cache")
    c.add_argument("action", choices=("status", "clear"))
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(message)s")
    if args.verb == "cache":
        if args.action == "clear":
            print(f"removed {cachemod.clear(args.cache_dir)} files")
        else:
            for e in cachemod.status(args.cache_dir):
                print(json.dumps(e))
        return 0
    if args.verb == "dump":
        print(_dump(args.object, args))
        return 0
    suites = list(SUITE_ORDER) if "all" in args.suites else args.suites
    try:
        cfg = Config(suites, args.cache_dir, args.threads, args.batch_max, args.sigma_t, args.report,
                     args.fail_fast, args.seed, not args.no_cache)
    except ValueError as exc:
        print(f"eisgeom: {exc}", file=sys.stderr)
        return 2
    reports, ok = run(cfg)
    print(render_json(reports, ok, cfg) if cfg.report == "json" else render_text(reports, ok))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
