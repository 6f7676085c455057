"""Batch command-line front end.

Verbs: check, extend, dimension, realizer, generate, hasse.  Results are JSON
on stdout (or ``--out``); ``extend`` and ``hasse`` also write DOT files.
Exit status: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import generators
from .config import EXACT_CAP_ENV, default_config
from .dimension import KINDS as DIMENSION_KINDS
from .dimension import dimension
from .errors import OrdimError
from .extension import (
    ExtensionTrace,
    debreu_extension_from_dense,
    debreu_extension_from_sets,
    extension_from_monotone,
    lex_extension,
)
from .poset import Poset, transitive_reduction
from .representations import (
    IncreasingSetFamily,
    MultiUtility,
    increasing_family_from_multi_utility,
    realizer_from_multi_utility,
    validate_representation,
)

VERBS = ("check", "extend", "dimension", "realizer", "generate", "hasse")
METHODS = ("dense", "sets", "lex", "monotone")


class UsageError(Exception):
    """Bad flags, missing or unreadable input."""


@dataclass(frozen=True)
class Command:
    verb: str
    options: dict = field(default_factory=dict)


# ------------------------------------------------------------------ DOT


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _hasse_edges(labels: Sequence[str], rel: np.ndarray) -> list:
    red = transitive_reduction(rel)
    return sorted((labels[i], labels[j]) for i, j in zip(*np.nonzero(red)))


def emit_dot_hasse(p: Poset) -> str:
    """Deterministic Hasse diagram: sorted nodes, covering edges only."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    lines += [f"  {_q(x)};" for x in sorted(p.labels)]
    lines += [f"  {_q(a)} -> {_q(b)};" for a, b in _hasse_edges(p.labels, p.rel)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot_trace(t: ExtensionTrace) -> str:
    """One cluster per step; covering edges added at that step drawn red."""
    labels = t.sequence.ground
    lines = ["digraph trace {", "  rankdir=BT;"]
    for k in range(len(t.sequence)):
        new = {tuple(pr) for pr in t.added_pairs(k)}
        w = t.witnesses[k]
        if isinstance(w, frozenset):
            w = "{" + ",".join(sorted(w)) + "}"
        title = f"step {k}" if w is None else f"step {k}: {w}"
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f"    label={_q(title)};")
        for x in sorted(labels):
            lines.append(f"    {_q(f's{k}:{x}')} [label={_q(x)}];")
        for a, b in _hasse_edges(labels, t.sequence.steps[k]):
            style = " [color=red]" if (a, b) in new else ""
            lines.append(f"    {_q(f's{k}:{a}')} -> {_q(f's{k}:{b}')}{style};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- parse


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ordim", description="Finite order-extension and dimension toolkit.")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def with_in(sp):
        sp.add_argument("--in", dest="inp", required=True, help="poset JSON")
        sp.add_argument("--out", help="result JSON (default stdout)")
        return sp

    c = with_in(sub.add_parser("check", help="validate a poset (and optional multi-utility)"))
    c.add_argument("--mu", help="multi-utility JSON")

    e = with_in(sub.add_parser("extend", help="build a linear extension"))
    e.add_argument("--method", choices=METHODS, required=True)
    e.add_argument("--d-list", help="comma-separated witnesses (dense)")
    e.add_argument("--family", help="increasing-set family JSON (sets)")
    e.add_argument("--mu", help="multi-utility JSON (lex, monotone)")
    e.add_argument("--row", type=int, default=0, help="monotone row (monotone)")
    e.add_argument("--dot-dir", help="directory for per-step DOT panels")

    d = with_in(sub.add_parser("dimension", help="exact dimension with certificate"))
    d.add_argument("--kind", choices=DIMENSION_KINDS, default="dushnik_miller")

    r = with_in(sub.add_parser("realizer", help="realizer from a multi-utility"))
    r.add_argument("--mu", required=True, help="multi-utility JSON")

    g = sub.add_parser("generate", help="write an example poset")
    g.add_argument("--family", choices=generators.FAMILIES, required=True)
    g.add_argument("--k", type=int, help="level count; first extent for lex_grid")
    g.add_argument("--n", type=int, help="size parameter; second extent for lex_grid")
    g.add_argument("--denom", type=int, help="majorization denominator")
    g.add_argument("--out", help="poset JSON (default stdout)")
    g.add_argument("--mu-out", help="canonical multi-utility JSON, if the family has one")

    h = with_in(sub.add_parser("hasse", help="Hasse diagram as DOT"))
    return ap


def parse(argv: Sequence[str]) -> Command:
    """Raises SystemExit(2) on usage errors."""
    ns = build_parser().parse_args(list(argv))
    opts = {k: v for k, v in vars(ns).items() if k != "verb"}
    if ns.verb == "extend":
        need = {"dense": "d_list", "sets": "family", "lex": "mu", "monotone": "mu"}[ns.method]
        if opts.get(need) is None:
            flag = "--" + need.replace("_", "-")
            raise_usage(f"extend --method {ns.method} requires {flag}")
    return Command(ns.verb, opts)


def raise_usage(msg: str):
    print(f"ordim: error: {msg}", file=sys.stderr)
    raise SystemExit(2)


# ------------------------------------------------------------------ run


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc.msg}") from exc


def _load_poset(path: str) -> Poset:
    obj = _load_json(path)
    if not isinstance(obj, dict) or "labels" not in obj:
        raise UsageError(f"{path} is not a poset file")
    return Poset.from_json(obj)


def _load_mu(path: str) -> MultiUtility:
    obj = _load_json(path)
    if not isinstance(obj, dict) or "rows" not in obj:
        raise UsageError(f"{path} is not a multi-utility file")
    return MultiUtility.from_json(obj)


def _emit(obj, out: Optional[str]) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _check(o: dict) -> dict:
    p = _load_poset(o["inp"])
    res = {"ok": True, "n": p.n, "covers": len(p.covers()), "total": p.is_total()}
    if o.get("mu"):
        rep = validate_representation(p, _load_mu(o["mu"]))
        res["kind"] = rep.kind
        res["ok"] = rep.kind != "none"
    return res


def _extend(o: dict) -> dict:
    p = _load_poset(o["inp"])
    method = o["method"]
    trace = None
    if method == "dense":
        d_list = [s.strip() for s in o["d_list"].split(",") if s.strip()]
        trace = debreu_extension_from_dense(p, d_list)
    elif method == "sets":
        fam = IncreasingSetFamily.from_json(p, _load_json(o["family"]))
        trace = debreu_extension_from_sets(p, fam)
    else:
        mu = _load_mu(o["mu"])
        if method == "lex":
            limit = lex_extension(p, mu)
        else:
            if not 0 <= o["row"] < mu.m:
                raise UsageError(f"--row {o['row']} outside 0..{mu.m - 1}")
            fam = increasing_family_from_multi_utility(p, mu)
            trace = extension_from_monotone(p, mu.rows[o["row"]], fam)
    if trace is not None:
        limit = trace.limit
    if o.get("dot_dir"):
        out = Path(o["dot_dir"])
        out.mkdir(parents=True, exist_ok=True)
        if trace is None:
            (out / "panel_0.dot").write_text(emit_dot_hasse(limit))
        else:
            for k in range(len(trace.sequence)):
                (out / f"panel_{k}.dot").write_text(emit_dot_hasse(trace.step(k)))
            (out / "trace.dot").write_text(emit_dot_trace(trace))
    res = {"method": method, "order": limit.linear_order(), "poset": limit.to_json()}
    if trace is not None:
        res["trace"] = trace.to_json()
    return res


def _dimension(o: dict) -> dict:
    p = _load_poset(o["inp"])
    try:
        config = default_config()
    except ValueError as exc:
        raise UsageError(f"bad {EXACT_CAP_ENV}: {exc}") from exc
    return dimension(p, o["kind"], config).to_json()


def _realizer(o: dict) -> dict:
    p = _load_poset(o["inp"])
    r = realizer_from_multi_utility(p, _load_mu(o["mu"]))
    return {"members": r.to_json()}


def _generate(o: dict) -> Optional[dict]:
    fam = o["family"]
    if fam == "lex_grid":
        params = {"a": o.get("k"), "b": o.get("n")}
    else:
        params = {"k": o.get("k"), "n": o.get("n"), "denom": o.get("denom")}
    p, mu = generators.generate(generators.FamilySpec(fam, params))
    if o.get("mu_out"):
        if mu is None:
            raise UsageError(f"family {fam!r} has no canonical multi-utility")
        Path(o["mu_out"]).write_text(json.dumps(mu.to_json(), indent=2) + "\n")
    return p.to_json()


def _hasse(o: dict) -> None:
    text = emit_dot_hasse(_load_poset(o["inp"]))
    if o.get("out"):
        Path(o["out"]).write_text(text)
    else:
        sys.stdout.write(text)


_HANDLERS = {
    "check": _check,
    "extend": _extend,
    "dimension": _dimension,
    "realizer": _realizer,
    "generate": _generate,
    "hasse": _hasse,
}


def run(cmd: Command) -> int:
    try:
        res = _HANDLERS[cmd.verb](cmd.options)
    except UsageError as exc:
        print(f"ordim: error: {exc}", file=sys.stderr)
        return 2
    except OrdimError as exc:
        sys.stdout.write(json.dumps({"error": exc.code, "detail": exc.detail}) + "\n")
        return 1
    if res is not None:
        _emit(res, cmd.options.get("out"))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cmd = parse(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(cmd)


if __name__ == "__main__":
    sys.exit(main())
