"""Command-line entry point: ``qtensor {catalog,info,tensor,compare,verify}``.

Exit status: 0 success, 1 a cap was hit, 2 invalid input, 3 a verification
item failed.  JSON output has a fixed key order and contains no timings
unless ``--timings`` is given, so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import catalog
from .errors import EnumerationLimit, InvalidGroup, OrderLimit, QTensorError, SearchCap
from .fp import DEFAULT_MAX_COSETS
from .groups import (
    abelian_invariants,
    center,
    derived_subgroup,
    frattini_subgroup,
    minimal_generator_count,
    quotient,
)
from .harness import REGISTRY, HarnessConfig, registry_complete, run_all
from .isoclinism import MODES, check, normalize_mode
from .tensor import DEFAULT_MAX_BASE_ORDER, invariant_report

EXIT_OK, EXIT_CAPPED, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2, 3


@dataclass
class CommandConfig:
    command: str
    groups: list = field(default_factory=list)
    q: int = 0
    q_list: tuple | None = None
    mode: str = "classical"
    max_cosets: int = DEFAULT_MAX_COSETS
    max_order: int = DEFAULT_MAX_BASE_ORDER
    simplify: bool = False
    jobs: int = 1
    format: str = "json"
    out: str | None = None
    suites: tuple = ("lemma", "theorem", "oracle")
    corpus: tuple = catalog.DEFAULT_CORPUS
    extended: bool = False
    timings: bool = False

    @property
    def qs(self) -> tuple:
        return self.q_list if self.q_list is not None else (self.q,)


class UsageError(Exception):
    pass


def _q_list(text: str) -> tuple:
    try:
        qs = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad q list {text!r}") from exc
    if not qs or min(qs) < 0:
        raise argparse.ArgumentTypeError("q values must be non-negative")
    return qs


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtensor", description="q-tensor squares, multipliers and isoclinism of small finite groups")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, q=True):
        if q:
            sp.add_argument("--q", type=_nonneg, default=0)
            sp.add_argument("--q-list", type=_q_list, default=None)
        sp.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
        sp.add_argument("--max-order", type=int, default=DEFAULT_MAX_BASE_ORDER)
        sp.add_argument("--simplify", action="store_true")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--out", default=None)

    sp = sub.add_parser("catalog", help="list builtin group names")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("info", help="group-core invariants and Cayley table")
    sp.add_argument("group")
    common(sp, q=False)

    sp = sub.add_parser("tensor", help="invariant report for G and q")
    sp.add_argument("group")
    common(sp)

    sp = sub.add_parser("compare", help="decide an isoclinism relation")
    sp.add_argument("group_g")
    sp.add_argument("group_h")
    sp.add_argument("--mode", default="classical", help=", ".join(MODES) + " (or isoclinic, exterior, weak)")
    common(sp)

    sp = sub.add_parser("verify", help="run the verification suites")
    common(sp)
    sp.add_argument("--suite", default="lemma,theorem,oracle")
    sp.add_argument("--corpus", default=None, help="comma-separated builtin names")
    sp.add_argument("--extended", action="store_true", help="add order-16 p-groups where used")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--timings", action="store_true", help="include wall times (breaks byte-identity)")
    return p


def parse_config(argv) -> CommandConfig:
    ns = build_parser().parse_args(argv)
    cfg = CommandConfig(command=ns.command, format=ns.format, out=ns.out)
    for name in ("max_cosets", "max_order", "simplify", "jobs", "extended", "timings", "q", "q_list", "mode"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if ns.command in ("info", "tensor"):
        cfg.groups = [ns.group]
    elif ns.command == "compare":
        cfg.groups = [ns.group_g, ns.group_h]
    if ns.command == "verify":
        cfg.suites = tuple(s.strip() for s in ns.suite.split(",") if s.strip())
        if ns.corpus:
            cfg.corpus = tuple(s.strip() for s in ns.corpus.split(",") if s.strip())
        if ns.q_list is None and "--q" not in (argv or []):
            cfg.q_list = (0, 1, 2, 3)
    return cfg


# ---------------------------------------------------------------------------
# commands


def _load(spec: str, cfg: CommandConfig):
    return catalog.load_group(spec)


def cmd_catalog(cfg: CommandConfig):
    return {"builtin": catalog.builtin_names(), "default_corpus": list(catalog.DEFAULT_CORPUS), "order_16": list(catalog.ORDER_16)}, EXIT_OK


def group_info(G) -> dict:
    Gab, _ = quotient(G, derived_subgroup(G))
    return {
        "label": G.label,
        "order": G.order,
        "abelian": G.is_abelian,
        "exponent": G.exponent,
        "center_order": center(G).order,
        "derived_order": derived_subgroup(G).order,
        "frattini_order": frattini_subgroup(G).order,
        "d": minimal_generator_count(G),
        "abelianization": list(abelian_invariants(Gab).factors),
        "group": catalog.group_to_json(G),
    }


def cmd_info(cfg: CommandConfig):
    return group_info(_load(cfg.groups[0], cfg)), EXIT_OK


def _tkw(cfg: CommandConfig) -> dict:
    return {"max_cosets": cfg.max_cosets, "max_order": cfg.max_order, "simplify": cfg.simplify}


def cmd_tensor(cfg: CommandConfig):
    G = _load(cfg.groups[0], cfg)
    if G.order > cfg.max_order:
        raise OrderLimit(f"base group order {G.order} exceeds --max-order {cfg.max_order}")
    reports = [invariant_report(G, q, **_tkw(cfg)) for q in cfg.qs]
    return (reports[0] if cfg.q_list is None else reports), EXIT_OK


def cmd_compare(cfg: CommandConfig):
    G, H = (_load(s, cfg) for s in cfg.groups)
    mode = normalize_mode(cfg.mode)
    if mode != "classical":
        for X in (G, H):
            if X.order > cfg.max_order:
                raise OrderLimit(f"group order {X.order} exceeds --max-order {cfg.max_order}")
    out = []
    for q in cfg.qs:
        w = check(G, H, mode, q, **_tkw(cfg))
        out.append({"G": G.label, "H": H.label, "mode": mode, "q": q, "verdict": w is not None, "witness": None if w is None else w.to_json()})
    return (out[0] if cfg.q_list is None else out), EXIT_OK


def cmd_verify(cfg: CommandConfig):
    for name in cfg.corpus:
        catalog.load_group(name)
    hc = HarnessConfig(
        corpus=tuple(cfg.corpus),
        qs=tuple(cfg.qs),
        extended=cfg.extended,
        max_order=cfg.max_order,
        max_cosets=cfg.max_cosets,
        jobs=cfg.jobs,
    )
    reports = run_all(hc, cfg.suites)
    missing = registry_complete(reports) if set(cfg.suites) >= {"lemma", "theorem", "oracle"} else []
    failed = any(not r.ok for r in reports)
    capped = any(it.status == "capped" for r in reports for it in r.items)
    data = {
        "corpus": list(cfg.corpus),
        "qs": list(cfg.qs),
        "extended": cfg.extended,
        "ok": not failed and not missing,
        "unexercised_statements": missing,
        "suites": [r.to_json(cfg.timings) for r in reports],
    }
    code = EXIT_VERIFY if failed or missing else (EXIT_CAPPED if capped else EXIT_OK)
    return data, code


COMMANDS = {"catalog": cmd_catalog, "info": cmd_info, "tensor": cmd_tensor, "compare": cmd_compare, "verify": cmd_verify}


# ---------------------------------------------------------------------------
# output


def _text(data, cfg: CommandConfig) -> str:
    if cfg.command == "verify" and isinstance(data, dict) and "suites" in data:
        lines = []
        for s in data["suites"]:
            c = s["counts"]
            lines.append(f"[{s['suite']}] pass={c['pass']} fail={c['fail']} skipped={c['skipped']} capped={c['capped']}")
            for it in s["items"]:
                if it["status"] == "fail":
                    summary = REGISTRY.get(it["statement"], ("", ""))[1]
                    lines.append(f"  FAIL {it['statement']} {it['groups']} q={it['q']}: {summary}")
                    lines.append(f"       {it['detail']} counterexample={it.get('counterexample')}")
        lines.append("OK" if data["ok"] else "FAILED")
        return "\n".join(lines) + "\n"
    if cfg.command == "info" and isinstance(data, dict):
        return "".join(f"{k}: {v}\n" for k, v in data.items() if k != "group")
    if isinstance(data, list):
        return "".join(_flat(d) for d in data)
    return _flat(data)


def _flat(d) -> str:
    if not isinstance(d, dict):
        return f"{d}\n"
    return "".join(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}\n" for k, v in d.items()) + "\n"


def emit_report(data, fmt: str, path: str | None, cfg: CommandConfig | None = None) -> None:
    if fmt == "json":
        text = json.dumps(data, indent=2) + "\n"
    else:
        text = _text(data, cfg or CommandConfig(command=""))
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def dispatch(cfg: CommandConfig) -> int:
    try:
        data, code = COMMANDS[cfg.command](cfg)
    except (InvalidGroup, OrderLimit, ValueError, FileNotFoundError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except (EnumerationLimit, SearchCap) as exc:
        data, code = {"status": "capped", "reason": f"{type(exc).__name__}: {exc}"}, EXIT_CAPPED
    except QTensorError as exc:
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_VERIFY
    try:
        emit_report(data, cfg.format, cfg.out, cfg)
    except OSError as exc:
        sys.stderr.write(f"error: cannot write report: {exc}\n")
        return EXIT_INVALID
    return code


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    return dispatch(cfg)


if __name__ == "__main__":
    sys.exit(main())
