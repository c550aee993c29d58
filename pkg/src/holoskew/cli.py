"""Command-line front end.

    holoskew enumerate SPEC
    holoskew tg SPEC [--method direct|miller|both]
    holoskew construct KIND SPEC [options]
    holoskew check SPEC [--gamma PATH]

Reports are JSON (``"schema": 1``) or TSV.  Exit status is 0 on success,
2 when an input fails a hypothesis and 1 when an internal check fails.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .biskew import beta_report, biskew_report, brace_iso_classes
from .catalog import identify
from .constructions import (ault_watters_gamma, bilinear_delta, central_gamma, childs_gamma,
                            cube_condition, cyclic_ring, delta_gamma, lift_rgf, power_pair_rgf,
                            ring_to_gamma, semi_gamma, trivial_delta)
from .errors import HypothesisError, InvariantError
from .groups import (FiniteGroup, center, cyclic, invariants, is_isomorphic, make_group,
                     parse_spec, subgroup_closure)
from .holomorph import circle_group, multiple_holomorph_T, normalizer_index
from .gamma import GammaFunction, regular_from_gamma, validate_table1
from .perms import automorphism_group

SCHEMA = 1
CENSUS_BOUND = 32
CONSTRUCT_BOUND = 64
KINDS = ("childs", "lift", "central", "semi", "delta", "ault-watters", "ring")


@dataclass
class RunConfig:
    command: str
    spec: str
    fmt: str = "json"
    out: str | None = None
    bound: int | None = None
    verbose: bool = False


def iso_type(G: FiniteGroup) -> str:
    name = identify(G)
    if name is not None:
        return name
    orders = ",".join(f"{o}^{c}" for o, c in G.order_profile)
    return f"order{G.order}[{'abelian' if G.is_abelian else 'nonabelian'};{orders}]"


def _group_block(G: FiniteGroup, spec: str) -> dict:
    return {"spec": spec, "order": G.order, "iso_type": iso_type(G)}


def _load_group(spec: str, bound: int) -> FiniteGroup:
    parse_spec(spec)
    G = make_group(spec)
    if G.order > bound:
        raise HypothesisError(f"|G| = {G.order} exceeds the order bound {bound} (use --bound)")
    return G


# --- commands -----------------------------------------------------------------


def cmd_enumerate(cfg: RunConfig) -> dict:
    G = _load_group(cfg.spec, cfg.bound or CENSUS_BOUND)
    log = [f"ok   |G| = {G.order} within bound {cfg.bound or CENSUS_BOUND}"]
    classes = brace_iso_classes(G)
    log.append(f"ok   {len(classes.gammas)} regular subgroups in Hol(G)")
    braces = []
    for i, gamma in enumerate(classes.gammas):
        bis = biskew_report(gamma)
        beta = beta_report(gamma)
        braces.append({
            "index": i,
            "gamma": gamma.maps.tolist(),
            "circle_iso_type": iso_type(FiniteGroup(gamma.circle)),
            "biskew": bis.to_dict(),
            "beta": beta.to_dict(),
            "orbit": int(classes.orbit_of[i]),
        })
    return {
        "command": "enumerate",
        "group": _group_block(G, cfg.spec),
        "transcript": log,
        "count": len(braces),
        "orbits": len(classes.orbits),
        "braces": braces,
    }


def cmd_tg(cfg: RunConfig, method: str) -> dict:
    G = _load_group(cfg.spec, cfg.bound or CENSUS_BOUND)
    res = multiple_holomorph_T(G, method)
    log = [f"ok   method {method} accepted for |G| = {G.order}"]
    members = []
    for N in res.members:
        cert = is_isomorphic(circle_group(N), G)
        members.append({"alpha": N.alpha.tolist(), "iso_certificate": cert.tolist()})
    return {
        "command": "tg",
        "group": _group_block(G, cfg.spec),
        "transcript": log,
        "method": method,
        "order_direct": res.order_direct,
        "order_miller": res.order_miller,
        "agree": res.agree,
        "members": members,
    }


def _subgroup_arg(G: FiniteGroup, text: str | None, part: str):
    if text is None:
        parts = G.parts or {}
        if part not in parts:
            raise HypothesisError(f"--{part} is required for {G.name}")
        return subgroup_closure(G, parts[part])
    elems = [int(x) for x in text.split(",") if x.strip()]
    if any(not 0 <= x < G.order for x in elems):
        raise HypothesisError(f"--{part} lists an element outside 0..{G.order - 1}")
    return subgroup_closure(G, elems)


def _parse_form(text: str) -> list[list[int]]:
    return [[int(v) for v in row.split(",")] for row in text.split(";")]


def _ring_from(G: FiniteGroup, text: str):
    m = re.fullmatch(r"\s*(\d*)\s*\*?\s*xy\s*|\s*0\s*", text)
    if not m:
        raise HypothesisError(f"ring multiplication {text!r} not understood; use e.g. '2xy'")
    if G.table.tobytes() != cyclic(G.order).table.tobytes():
        raise HypothesisError("ring multiplications 'cxy' need the standard cyclic table, e.g. c4")
    c = 0 if m.group(1) is None else int(m.group(1) or 1)
    return cyclic_ring(G.order, c), c


def cmd_construct(cfg: RunConfig, args) -> dict:
    kind = args.kind
    G = _load_group(cfg.spec, cfg.bound or CONSTRUCT_BOUND)
    log: list[str] = []
    extra: dict = {}
    if kind == "childs":
        gamma = childs_gamma(G, _subgroup_arg(G, args.K, "K"), _subgroup_arg(G, args.H, "H"), log)
    elif kind == "central":
        res = central_gamma(G, _subgroup_arg(G, args.K, "K"), _subgroup_arg(G, args.H, "H"), log)
        gamma = res.gamma
        extra = {"bar_is_bi_gf": res.bar_is_bi_gf, "h_normal": res.h_normal,
                 "bar_kernel_normal": res.bar_kernel_normal}
    elif kind == "lift":
        if not args.gamma_h:
            raise HypothesisError("lift needs --gamma-h PATH (JSON object h -> image array)")
        raw = json.loads(Path(args.gamma_h).read_text())
        values = {int(h): np.asarray(v) for h, v in raw.items()}
        gamma = lift_rgf(G, _subgroup_arg(G, args.H, "H"), _subgroup_arg(G, args.K, "K"),
                         values, log)
    elif kind == "semi":
        K, H = _subgroup_arg(G, args.K, "K"), _subgroup_arg(G, args.H, "H")
        h = args.h if args.h is not None else next(
            x for x in H if G.element_orders[x] == H.order)
        vals = power_pair_rgf(G, K, H, h, args.s, args.t, args.r)
        gamma = semi_gamma(G, K, H, vals, log)
        extra = {"s": args.s, "t": args.t, "r": args.r, "h": int(h)}
    elif kind == "delta":
        K = _subgroup_arg(G, args.K, "K") if args.K else center(G)
        if args.form:
            # entries are exponents of the first element of largest order in K
            z = max(K, key=lambda x: (G.element_orders[x], -x))
            form = [[G.power(z, e) for e in row] for row in _parse_form(args.form)]
            delta = bilinear_delta(G, K, form)
            log.append("ok   form extends to a bi-homomorphism")
        else:
            delta = trivial_delta(G, K)
        gamma = delta_gamma(G, delta, log)
    elif kind == "ault-watters":
        gamma, abelian = ault_watters_gamma(G, log)
        extra = {"circle_abelian": abelian}
    elif kind == "ring":
        if not args.ring:
            raise HypothesisError("ring needs --ring, e.g. --ring 2xy")
        R, c = _ring_from(G, args.ring)
        log.append(f"ok   x*y = {c}xy is a commutative radical ring on Z/{G.order}")
        gamma = ring_to_gamma(R)
        extra = {"cube_condition": cube_condition(R)}
    else:
        raise HypothesisError(f"unknown construction {kind!r}; choose from {', '.join(KINDS)}")
    report = {
        "command": "construct",
        "kind": kind,
        "group": _group_block(G, cfg.spec),
        "transcript": log,
        "gamma": gamma.maps.tolist(),
        "kernel": gamma.kernel(),
        "circle_iso_type": iso_type(FiniteGroup(gamma.circle)),
        "circle_abelian": bool((gamma.circle == gamma.circle.T).all()),
    }
    report.update(extra)
    report["biskew"] = biskew_report(gamma).to_dict()
    if G.order <= CONSTRUCT_BOUND:
        report["normalizer_index"] = normalizer_index(regular_from_gamma(gamma))
    return report


def cmd_check(cfg: RunConfig, gamma_path: str | None) -> dict:
    G = _load_group(cfg.spec, cfg.bound or CENSUS_BOUND)
    log = ["ok   Cayley table is a group (identity, Latin square, associativity)"]
    report = {
        "command": "check",
        "group": _group_block(G, cfg.spec),
        "transcript": log,
        "invariants": [list(map(list, x)) if isinstance(x, tuple) else x for x in invariants(G)],
        "aut_order": len(automorphism_group(G)),
    }
    if gamma_path:
        maps = np.asarray(json.loads(Path(gamma_path).read_text()), dtype=np.int64)
        t1 = validate_table1(G, maps)
        report["table1"] = {k: getattr(t1, k) for k in
                            ("endomorphism", "gfe", "bijective", "brace_axiom",
                             "associative", "inverses")}
        report["table1"]["witnesses"] = {k: list(v) for k, v in t1.witnesses.items()}
        if t1.all_pass:
            gamma = GammaFunction(G, maps).validate()
            log.append("ok   input is a gamma function")
            report["biskew"] = biskew_report(gamma).to_dict()
            report["beta"] = beta_report(gamma).to_dict()
            report["circle_iso_type"] = iso_type(FiniteGroup(gamma.circle))
        else:
            log.append("FAIL input is not a gamma function")
    return report


# --- output -------------------------------------------------------------------


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in obj:
            yield from _flatten(obj[k], f"{prefix}{k}.")
    elif isinstance(obj, list) and obj and isinstance(obj[0], dict):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield prefix[:-1], json.dumps(obj) if isinstance(obj, list) else obj


def render(report: dict, fmt: str) -> str:
    report = {"schema": SCHEMA, **report}
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if report["command"] == "enumerate":
        cols = ["index", "orbit", "circle_iso_type", "is_biskew", "normal_in_hol", "gamma"]
        lines = ["\t".join(cols)]
        for b in report["braces"]:
            row = [b["index"], b["orbit"], b["circle_iso_type"], b["biskew"]["swap_is_brace"],
                   b["beta"]["n_normal_in_hol"], json.dumps(b["gamma"], separators=(",", ":"))]
            lines.append("\t".join(str(v) for v in row))
        return "\n".join(lines) + "\n"
    return "".join(f"{k}\t{v}\n" for k, v in _flatten(report))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="holoskew", description="Skew braces via gamma functions.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--bound", type=int, help="largest group order accepted")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common], help="census of skew braces on G")
    e.add_argument("spec")

    t = sub.add_parser("tg", parents=[common], help="order of the multiple holomorph quotient")
    t.add_argument("spec")
    t.add_argument("--method", choices=("direct", "miller", "both"), default="both")

    c = sub.add_parser("construct", parents=[common], help="run a bi-skew brace construction")
    c.add_argument("kind", choices=KINDS)
    c.add_argument("spec")
    c.add_argument("--K", help="comma-separated generators of K (default: group parts)")
    c.add_argument("--H", help="comma-separated generators of H (default: group parts)")
    c.add_argument("--gamma-h", help="JSON file of gamma' values for lift")
    c.add_argument("--h", type=int, help="generator of H for semi")
    c.add_argument("--s", type=int, default=1)
    c.add_argument("--t", type=int, default=1)
    c.add_argument("--r", type=int, default=4, help="power map on H for semi")
    c.add_argument("--form", help="delta form as exponents of a generator of K, rows split by ';'")
    c.add_argument("--ring", help="ring multiplication such as '2xy'")

    k = sub.add_parser("check", parents=[common], help="validate a group and optionally a gamma")
    k.add_argument("spec")
    k.add_argument("--gamma", help="JSON file with an n x n image array")
    return p


def run(argv=None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.command, args.spec, args.format, args.out, args.bound, args.verbose)
    if cfg.bound is not None and cfg.bound < 1:
        raise HypothesisError("--bound must be positive")
    if args.command == "enumerate":
        report = cmd_enumerate(cfg)
    elif args.command == "tg":
        report = cmd_tg(cfg, args.method)
    elif args.command == "construct":
        report = cmd_construct(cfg, args)
    else:
        report = cmd_check(cfg, args.gamma)
    text = render(report, cfg.fmt)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0, text


def main(argv=None) -> int:
    try:
        code, _ = run(argv)
        return code
    except HypothesisError as exc:
        msg = f"holoskew: rejected: {exc}"
        if getattr(exc, "witness", None) is not None:
            msg += f" (witness {exc.witness})"
        print(msg, file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"holoskew: internal check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
