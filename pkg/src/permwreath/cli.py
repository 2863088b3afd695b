"""Command-line front end: ``permwreath <subcommand> [flags]``.

Exit status: 0 on success, 1 on a domain error (a JSON error object is
printed), 2 on a usage error. Reports are deterministic and carry the tool
version and the resolved parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .actions import dyadic_window, houghton_window, int_window, natural_action, z_regular
from .cosets import (almost_maximal_check, cosets_from_edges, double_cosets_finite, edges_from_cosets,
                     equality_classifier, invariant_edge_sets, orbits_on_pairs, orbits_on_set,
                     sign_classifier)
from .descriptors import (load_action, load_fiber, load_finite_group, parse_element, parse_point,
                          resolve, validate)
from .errors import DescriptorError, WreathError
from .fibre import biindex_vs_conjclasses, spec_from_kernels, verify_lattice_bijection
from .finite import FiniteGroup
from .geodesic import K, explore
from .graph_products import VertexGraph, detect_stabilization, kernel_free_subgroup_criterion
from .groups import DINF_A, DINF_B, ZInt
from .presentations import (G_MODELS, W_MODELS, FpCriteriaInput, check_fg_criteria,
                            check_fp_criteria, finite_fp_input, generated_order, synthesize_wreath_presentation,
                            truncated_pres1, verify_relators, wreath_assignment)
from .serialize import dumps, jsonable
from .thompson import pair_transporter
from .wreath import WreathElement, WreathProduct, bilipschitz_compare, z_to_dinf

DEFAULT_RADIUS = 4
DEFAULT_WINDOW = 32
DYADIC_DEFAULT_WINDOW = 6


class _Window:
    """Membership-only window for infinite point domains."""

    def __init__(self, kind: str, size: int):
        self.kind, self.size = kind, size

    def __contains__(self, x):
        if self.kind == "int":
            return abs(x) <= self.size
        if self.kind == "dyadic":
            return x.exponent <= self.size
        if self.kind == "houghton":
            return x[1] <= self.size
        return True

    def points(self, action) -> list:
        if self.kind == "int":
            return int_window(-self.size, self.size)
        if self.kind == "dyadic":
            return dyadic_window(self.size)
        if self.kind == "houghton":
            return houghton_window(len(action.identity.offsets), self.size)
        return list(action.domain.points)


def _group_kind(doc: dict) -> str:
    g = doc.get("group", doc)
    return g.get("kind", "")


def _window_for(doc: dict, size: int | None) -> _Window:
    kind = {"int": "int", "dihedral_inf": "int", "thompson_f": "dyadic", "houghton": "houghton"}.get(
        _group_kind(doc), "finite")
    if size is None:
        size = DYADIC_DEFAULT_WINDOW if kind == "dyadic" else DEFAULT_WINDOW
    return _Window(kind, size)


def _action_doc(args, default: str = "z") -> dict:
    if getattr(args, "action", None):
        return resolve(args.action)
    return resolve(getattr(args, "group", None) or default)


def _nonneg(name, value):
    if value is not None and value < 0:
        raise _Usage(f"--{name} must be non-negative")


class _Usage(Exception):
    pass


# ---------------------------------------------------------------------------
# subcommands: each returns (result dict, resolved params)

def cmd_wreath_len(args):
    adoc = _action_doc(args)
    action = load_action(adoc)
    fiber = load_fiber(resolve(args.w))
    radius = args.radius
    W = WreathProduct(action, fiber, radius=radius)
    doc = resolve(args.element) if args.element else {"f": [], "c": "1"}
    validate(doc, "wreath_element")
    f = {}
    for i, (p, w) in enumerate(doc.get("f", [])):
        x = parse_point(action, p, f"$.f[{i}][0]")
        f[x] = parse_element(w, fiber, W.fiber_identity, f"$.f[{i}][1]")
    c = parse_element(doc.get("c", "1"), action.generators, action.identity, "$.c")
    a = WreathElement(f, c)
    length = W.word_length(a, args.budget)
    return {"element": a.to_json(), "len": length}, {"radius": radius, "budget": args.budget, "w": args.w}


def cmd_ball(args):
    adoc = _action_doc(args)
    action = load_action(adoc)
    fiber = load_fiber(resolve(args.w))
    window = _window_for(adoc, args.window)
    W = WreathProduct(action, fiber, radius=args.radius)
    ball = W.ball(args.radius, None if window.kind == "finite" else window)
    rows = [a.to_json(n) for a, n in ball]
    return {"size": len(rows), "rows": rows}, {"radius": args.radius, "window": window.size, "w": args.w}


def cmd_bilip(args):
    adoc = _action_doc(args)
    action = load_action(adoc)
    A = WreathProduct(action, {"t": ZInt(1)}, radius=args.radius)
    B = WreathProduct(action, {"a": DINF_A, "b": DINF_B}, radius=2 * args.radius)
    ball = [a for a, _ in A.ball(args.radius)]
    rep = bilipschitz_compare(ball, z_to_dinf, A, B, constant=2)
    return rep.to_json(), {"radius": args.radius}


def cmd_kwalk(args):
    adoc = _action_doc(args)
    action = load_action(adoc)
    window = _window_for(adoc, args.window)
    frag = explore(action, args.radius, window=None if window.kind == "finite" else window)
    targets = [parse_point(action, p, f"$.targets[{i}]") for i, p in enumerate(json.loads(args.targets))]
    c = parse_element(args.terminal, action.generators, action.identity, "$.terminal")
    k = K(targets, c, frag, args.budget)
    return {"K": k, "targets": jsonable(targets), "terminal": str(c)}, {
        "radius": args.radius, "budget": args.budget, "window": window.size}


def cmd_orbits(args):
    adoc = _action_doc(args)
    action = load_action(adoc)
    window = _window_for(adoc, args.window)
    pts = window.points(action)
    kind = _group_kind(adoc)
    classifier = {"sign": sign_classifier(), "equal": equality_classifier(), "none": None}.get(
        args.classifier or ("sign" if kind == "thompson_f" else "equal" if kind == "houghton" else "none"))
    transporter = pair_transporter if kind == "thompson_f" else None
    single = orbits_on_set(action, pts, (lambda x: pair_transporter((x, x))) if transporter else None)
    pairs = orbits_on_pairs(action, pts, classifier, transporter)
    result = {"orbits": single.count, "pair_orbits": pairs.count, "window": window.size,
              "points": len(pts),
              "flags": [f"X: {m}" for m in single.flags] + [f"X^2: {m}" for m in pairs.flags]}
    if pairs.labels is not None:
        result["labels"] = [repr(l) for l in pairs.labels]
    if action.group is not None and len(action.base_points) == 1:
        H = action.group.stabilizer(action.base_point, action.act)
        result["biindex"] = len(action.group.double_cosets(H))
    return result, {"window": window.size, "classifier": classifier.name if classifier else None}


def _finite_action(args):
    adoc = _action_doc(args, default="sym3")
    action = load_action(adoc)
    if action.group is None:
        raise DescriptorError("$.group", "a finite group is required")
    return action


def cmd_dcosets(args):
    action = _finite_action(args)
    G = action.group
    if args.subgroup:
        H = G.subgroup([parse_element(w, G.generators, G.identity, "$.subgroup") for w in args.subgroup])
        stab = None
    else:
        stab = action.base_point if args.stab is None else parse_point(action, json.loads(args.stab), "$.stab")
        H = G.stabilizer(stab, action.act)
    table = double_cosets_finite(G, H)
    am = almost_maximal_check(G, H)
    return {"double_cosets": len(table), "representatives": [str(G.word_of(r)) for r in table.representatives],
            "subgroup_order": len(H), "intermediate_subgroups": am.count, "bound": 2 ** am.biindex}, {
        "stab": jsonable(stab), "subgroup": args.subgroup}


def cmd_edges(args):
    action = _finite_action(args)
    sets = invariant_edge_sets(action)
    rows = []
    for E in sets:
        fam = cosets_from_edges(action, E)
        back = edges_from_cosets(action, fam).edges()
        rows.append({"edges": len(E) // 2, "round_trip": back == E,
                     "family_sizes": {f"{i},{j}": len(v) for (i, j), v in sorted(fam.items())}})
    return {"edge_sets": len(sets), "all_round_trip": all(r["round_trip"] for r in rows), "rows": rows}, {}


def _model_name(name: str, table: dict, flag: str) -> str:
    for k in table:
        if k.lower() == name.lower():
            return k
    raise _Usage(f"--{flag} must be one of {', '.join(sorted(table))}")


def cmd_present(args):
    gname = _model_name(args.g, G_MODELS, "g")
    wname = _model_name(args.w, W_MODELS, "w")
    if gname in ("F", "Z"):
        raise _Usage("present needs a finite G (Sym3, Sym4, D4)")
    G = FiniteGroup(G_MODELS[gname][1], name=gname)
    if args.action not in ("natural",):
        raise _Usage("only the natural action is available for present")
    act = natural_action(G)
    base = [int(b) for b in args.base.split(",")] if args.base else None
    inp = finite_fp_input(gname, wname, act, base)
    pres = synthesize_wreath_presentation(inp)
    assign, _ = wreath_assignment(inp)
    rep = verify_relators(pres, assign)
    order = generated_order(assign)
    expected = FiniteGroup(W_MODELS[wname][1]).order ** len(act.domain.points) * G.order
    if args.pres_out:
        Path(args.pres_out).write_text(pres.dumps() + "\n")
    return {"presentation": pres.to_json(), "pretty": pres.pretty(), "families": pres.families(),
            "fg": check_fg_criteria(inp).to_json(), "fp": check_fp_criteria(inp).to_json(),
            "relators_verified": rep.ok, "verification": rep.to_json(),
            "generated_order": order, "expected_order": expected}, {
        "g": gname, "w": wname, "action": args.action, "base": base}


def cmd_pres1(args):
    gname = _model_name(args.g, G_MODELS, "g")
    wname = _model_name(args.w, W_MODELS, "w")
    if gname == "Z":
        gp, ga = G_MODELS["Z"]
        wp, wa = W_MODELS[wname]
        inp = FpCriteriaInput(g=gp, w=wp, stabilizers=[[]], action=z_regular(), g_assignment=ga,
                              w_assignment=wa, simply_transitive=True, x_finite=False)
    elif gname == "F":
        raise _Usage("pres1 supports Sym3, Sym4, D4 and Z")
    else:
        G = FiniteGroup(G_MODELS[gname][1], name=gname)
        inp = finite_fp_input(gname, wname, natural_action(G))
    rows = []
    for n in range(args.radius + 1):
        p = truncated_pres1(inp, n)
        rows.append({"n": n, "relators": len(p), "families": p.families()})
    return {"rows": rows, "presentation": truncated_pres1(inp, args.radius).to_json(),
            "fp": check_fp_criteria(inp).to_json()}, {"g": gname, "w": wname, "radius": args.radius}


def cmd_graphprod(args):
    doc = resolve(args.graph)
    validate(doc, "graph")
    g = VertexGraph.from_json(doc)
    r = kernel_free_subgroup_criterion(g)
    out = r.to_json()
    if r.witness is not None:
        out["ball_counts"] = r.witness.ball_counts(args.radius)
        out["witness_in_kernel"] = r.witness.in_kernel()
    return out, {"radius": args.radius}


def cmd_stabilize(args):
    doc = resolve(args.graphs)
    validate(doc, "graph_sequence")
    seq = [VertexGraph.from_json(g) for g in doc["graphs"]]
    return detect_stabilization(seq, doc["partition"]).to_json(), {}


def cmd_fibre(args):
    doc = resolve(args.spec)
    validate(doc, "fibre")
    G1 = load_finite_group({"kind": "named", "name": doc["g1"]})
    G2 = load_finite_group({"kind": "named", "name": doc["g2"]})
    N1 = G1.normal_closure([parse_element(w, G1.generators, G1.identity, f"$.kernel1[{i}]")
                            for i, w in enumerate(doc.get("kernel1", []))])
    N2 = G2.normal_closure([parse_element(w, G2.generators, G2.identity, f"$.kernel2[{i}]")
                            for i, w in enumerate(doc.get("kernel2", []))])
    spec = spec_from_kernels(G1, N1, G2, N2)
    if spec is None:
        raise DescriptorError("$", "the two quotients are not isomorphic")
    budget = args.budget if args.budget is not None else 2500
    return {"Q_order": spec.Q.order, "lattice": verify_lattice_bijection(spec, budget).to_json(),
            "biindex": biindex_vs_conjclasses(spec, budget).to_json()}, {"budget": budget}


COMMANDS = {
    "wreath-len": (cmd_wreath_len, "exact word length of a wreath element"),
    "ball": (cmd_ball, "enumerate a ball of the wreath product"),
    "bilip": (cmd_bilip, "compare Z wr X G with D_inf wr X G on a ball"),
    "kwalk": (cmd_kwalk, "covering-walk length K(F, c)"),
    "orbits": (cmd_orbits, "orbits on X and X^2 inside a window"),
    "dcosets": (cmd_dcosets, "double cosets of a point stabiliser or subgroup"),
    "edges": (cmd_edges, "G-invariant edge sets and their coset families"),
    "present": (cmd_present, "synthesize and verify a presentation of W wr X G"),
    "pres1": (cmd_pres1, "truncated relator schema by radius"),
    "graphprod": (cmd_graphprod, "free-subgroup criterion for a labelled graph"),
    "stabilize": (cmd_stabilize, "stabilisation index of an increasing graph sequence"),
    "fibre": (cmd_fibre, "fibre-product lattice and biindex checks"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permwreath", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"permwreath {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        s = sub.add_parser(name, help=help_)
        s.add_argument("--group", help="group descriptor: shorthand (sym3, z, thompson, h3, ...), JSON or file")
        s.add_argument("--action", help="action descriptor (JSON or file); overrides --group")
        s.add_argument("--radius", type=int, default=6 if name == "graphprod" else DEFAULT_RADIUS)
        s.add_argument("--window", type=int, default=None)
        s.add_argument("--budget", type=int, default=None)
        s.add_argument("--out", help="write the report to this file")
        s.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
        s.add_argument("--seed", type=int, default=0)
        if name == "wreath-len":
            s.add_argument("--element", help='wreath element: {"f": [[point, word]], "c": word}')
        if name in ("wreath-len", "ball", "present", "pres1"):
            s.add_argument("--w", default="c2", help="fibre group")
        if name == "kwalk":
            s.add_argument("--targets", default="[]", help="JSON list of points")
            s.add_argument("--terminal", default="1", help="word in the generators of G")
        if name == "orbits":
            s.add_argument("--classifier", choices=["sign", "equal", "none"])
        if name == "dcosets":
            s.add_argument("--stab", help="point whose stabiliser is H (JSON)")
            s.add_argument("--subgroup", nargs="*", help="words generating H")
        if name in ("present", "pres1"):
            s.add_argument("--g", default="sym3", help="Sym3, Sym4, D4 (pres1 also Z)")
        if name == "present":
            s.add_argument("--base", help="comma-separated base points, one per orbit")
            s.add_argument("--pres-out", help="write the presentation file here")
            s.set_defaults(action="natural")
        if name == "graphprod":
            s.add_argument("--graph", required=True, help="graph JSON or file")
        if name == "stabilize":
            s.add_argument("--graphs", required=True, help="graph sequence JSON or file")
        if name == "fibre":
            s.add_argument("--spec", required=True, help="fibre spec JSON or file")
    return p


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, json.dumps(value, sort_keys=True) if isinstance(value, (list, dict)) else value))


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(report) + "\n"
    result = jsonable(report["result"])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        rows = result.get("rows") if isinstance(result, dict) else None
        if rows and all(isinstance(r, dict) for r in rows):
            keys = sorted({k for r in rows for k in r})
            w.writerow(keys)
            for r in rows:
                w.writerow([json.dumps(r.get(k), sort_keys=True) if isinstance(r.get(k), (list, dict))
                            else r.get(k) for k in keys])
        else:
            w.writerow(["key", "value"])
            flat: list = []
            _flatten("", result, flat)
            w.writerows(flat)
        return buf.getvalue()
    lines = [f"permwreath {report['version']} {report['command']}"]
    if isinstance(result, dict) and "pretty" in result:
        lines.append(result["pretty"])
    flat = []
    _flatten("", {k: v for k, v in result.items() if k not in ("pretty", "presentation", "rows")}
             if isinstance(result, dict) else result, flat)
    lines.extend(f"{k}: {v}" for k, v in flat)
    if isinstance(result, dict) and "rows" in result:
        lines.append(f"rows: {len(result['rows'])}")
    return "\n".join(lines) + "\n"


def run(argv=None) -> tuple[int, str, str | None]:
    """Parse and execute; returns (exit status, output text, output path or None)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", None
    params = {k: v for k, v in vars(args).items() if k not in ("out", "format")}
    try:
        for name in ("radius", "budget", "window"):
            _nonneg(name, getattr(args, name, None))
        fn, _ = COMMANDS[args.command]
        result, extra = fn(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"permwreath: error: {exc}", file=sys.stderr)
        return 2, "", None
    except WreathError as exc:
        return 1, dumps({"version": __version__, "command": args.command, **exc.to_dict()}) + "\n", None
    params.update(extra)
    report = {"tool": "permwreath", "version": __version__, "command": args.command,
              "params": params, "result": result}
    return 0, render(report, args.format), args.out


def main(argv=None) -> int:
    code, text, out = run(argv)
    if out:
        Path(out).write_text(text)
    elif text:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
