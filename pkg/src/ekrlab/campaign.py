"""Parameter-grid campaigns over the verdict engine, with reproducible
machine-readable reports.

Config files are flat key = value text; ranges use 'a..b', lists use
commas, theta strand tuples are comma-separated ints joined by
semicolons.  Grid points outside generator preconditions are skipped
with a recorded reason.  Exit code contract: 2 on any oracle-vs-brute
mismatch or failed construction predicate, 3 when any solver hit its
limits, 0 clean.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import __version__
from .graphs import Graph, GraphError, make_cycle, make_random_tree, make_sun, \
    make_theta
from .solvers import Limits
from .verdicts import Verdict, check_ekr, check_hm

SCHEMA_VERSION = 1

EXIT_CLEAN = 0
EXIT_MISMATCH = 2
EXIT_LIMITS = 3


@dataclass
class CampaignConfig:
    kind: str = "cycle"
    check: str = "ekr"                      # ekr | hm
    mode: str = "uniform"                   # uniform | upto | all-paths
    n: list[int] = field(default_factory=lambda: [6])
    t: list[int] = field(default_factory=lambda: [0])
    a: list[tuple[int, ...]] = field(default_factory=list)
    s: list[int] = field(default_factory=lambda: [1])
    r: list[int] | str = "valid"
    seed: int = 0
    tree_count: int = 1
    limit_nodes: int = 50_000_000
    optima_cap: int = 10_000
    sun_variant: str = "binomial"
    out: str | None = None
    format: str = "json"

    @property
    def limits(self) -> Limits:
        return Limits(node_budget=self.limit_nodes, optima_cap=self.optima_cap)


def _parse_ints(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def parse_config(text: str) -> CampaignConfig:
    cfg = CampaignConfig()
    known = {f for f in vars(cfg)}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value'")
        key, val = (part.strip() for part in line.split("=", 1))
        if key not in known:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        if key in ("n", "t", "s"):
            setattr(cfg, key, _parse_ints(val))
        elif key == "a":
            cfg.a = [tuple(_parse_ints(part)) for part in val.split(";") if part.strip()]
        elif key == "r":
            cfg.r = val if val == "valid" else _parse_ints(val)
        elif key in ("seed", "tree_count", "limit_nodes", "optima_cap"):
            setattr(cfg, key, int(val))
        else:
            setattr(cfg, key, val)
    return cfg


def _instances(cfg: CampaignConfig) -> list[Graph]:
    if cfg.kind == "cycle":
        return [make_cycle(n) for n in cfg.n]
    if cfg.kind == "sun":
        return [make_sun(n, t) for n in cfg.n for t in cfg.t]
    if cfg.kind == "theta":
        if not cfg.a:
            raise ValueError("theta campaigns need strand tuples under key 'a'")
        return [make_theta(a) for a in cfg.a]
    if cfg.kind == "tree":
        return [make_random_tree(n, cfg.seed + i)
                for n in cfg.n for i in range(cfg.tree_count)]
    raise ValueError(f"unknown kind {cfg.kind!r}")


def _valid_r(cfg: CampaignConfig, g: Graph, s: int) -> list[int]:
    if cfg.check == "hm":
        n = g.meta["n"]
        return [r for r in range(3, n // 2 + 1) if 3 * r >= n + 3]
    if cfg.mode == "all-paths":
        return [0]
    if g.kind in ("cycle", "sun"):
        n = g.meta["n"]
        top = (n + s - 1) // 2
        if cfg.mode == "upto":
            return list(range(1, n // 2 + 1))
        return list(range(max(3, s + 2), top + 1))
    if g.kind == "theta":
        a = g.meta["a"]
        return list(range(3, (a[0] + a[1] + 1) // 2 + 1))
    return list(range(1, g.n + 1))


def run_campaign(cfg: CampaignConfig) -> dict:
    """One verdict per grid point; returns the full report dict."""
    verdicts: list[Verdict] = []
    skipped: list[dict] = []
    for g in _instances(cfg):
        for s in cfg.s:
            r_values = _valid_r(cfg, g, s) if cfg.r == "valid" else list(cfg.r)
            if not r_values:
                skipped.append({
                    "instance": {"kind": g.kind, **{k: list(v) if isinstance(v, tuple)
                                                    else v for k, v in g.meta.items()},
                                 "s": s},
                    "reason": "no admissible r for these parameters",
                })
                continue
            for r in r_values:
                size = None if cfg.mode == "all-paths" else r
                try:
                    if cfg.check == "hm":
                        verdicts.append(check_hm(g, r, cfg.limits))
                    else:
                        verdicts.append(check_ekr(g, cfg.mode, size, s, cfg.limits,
                                                  sun_variant=cfg.sun_variant))
                except GraphError as exc:
                    skipped.append({
                        "instance": {"kind": g.kind, "r": r, "s": s},
                        "reason": str(exc),
                    })
    mismatches = sum(1 for v in verdicts if v.oracle_match is False)
    construction_failures = sum(1 for v in verdicts if v.construction_ok is False)
    limits_hit = sum(1 for v in verdicts if v.limits_hit)
    if mismatches or construction_failures:
        exit_code = EXIT_MISMATCH
    elif limits_hit:
        exit_code = EXIT_LIMITS
    else:
        exit_code = EXIT_CLEAN
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "ekrlab",
        "tool_version": __version__,
        "seed": cfg.seed,
        "limits": {"node_budget": cfg.limit_nodes, "optima_cap": cfg.optima_cap},
        "config": {
            "kind": cfg.kind, "check": cfg.check, "mode": cfg.mode,
            "sun_variant": cfg.sun_variant,
        },
        "verdicts": [v.to_dict() for v in verdicts],
        "skipped": skipped,
        "summary": {
            "points": len(verdicts),
            "skipped": len(skipped),
            "oracle_matches": sum(1 for v in verdicts if v.oracle_match is True),
            "oracle_mismatches": mismatches,
            "construction_failures": construction_failures,
            "limits_hit": limits_hit,
            "exit_code": exit_code,
        },
    }


CSV_COLUMNS = (
    "kind", "n", "t", "a", "mode", "s", "r", "k", "family_size", "brute_value",
    "oracle_value", "oracle_applicable", "max_star_size", "is_ekr", "is_strict",
    "classification", "construction_ok", "limits_hit", "runtime_ms",
)


def emit_report(report: dict, fmt: str = "json") -> str:
    """Serialize a campaign report with a stable field order."""
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore",
                                lineterminator="\n")
        writer.writeheader()
        for v in report["verdicts"]:
            row = dict(v["instance"])
            if "a" in row:
                row["a"] = "-".join(str(x) for x in row["a"])
            row.update({
                "family_size": v["family_size"],
                "brute_value": v["brute_value"],
                "oracle_value": v["oracle"]["value"] if v["oracle"] else "",
                "oracle_applicable": v["oracle"]["applicable"] if v["oracle"] else "",
                "max_star_size": v["max_star"]["size"],
                "is_ekr": v["is_ekr"],
                "is_strict": v["is_strict"],
                "classification": v["classification"],
                "construction_ok": v["construction_ok"],
                "limits_hit": v["limits_hit"],
                "runtime_ms": v["runtime_ms"],
            })
            writer.writerow(row)
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")
