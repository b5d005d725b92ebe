"""Command line interface.

Exit codes: 0 on success, 1 on usage or guard errors, 2 when the verdict is
negative (not admissible, not realizable, not a design, bound violated).
"""

from __future__ import annotations

import argparse
import sys

from . import designcalc as dc
from . import fqoracle as fq
from . import intersect as ix
from .qpoly import SYMBOLIC, QMode, parse_poly
from .render import FORMATS, STYLES, Report, RenderError, Table, fmt_scalar, json_scalar, render

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2

PER_Q_SPOTS = (1, 2, 3, 4, 5, 7, 8, 9)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _mode(text: str) -> QMode:
    if text == "sym":
        return SYMBOLIC
    try:
        q0 = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--q expects 'sym' or an integer, got {text!r}") from None
    if q0 < 1:
        raise argparse.ArgumentTypeError("--q must be >= 1")
    return QMode(q0)


def _params(a) -> dc.DesignParams:
    for name in ("t", "v", "k", "lam"):
        if getattr(a, name, None) is None:
            raise UsageError(f"{a.command}: missing -{name[0]}")
    lam = parse_poly(a.lam) if a.mode.symbolic else _int(a.lam, "lambda")
    return dc.DesignParams(a.t, a.v, a.k, lam, a.mode)


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def _add_params(sp, lam=True, need_q=True):
    sp.add_argument("-t", "--t", dest="t", type=int)
    sp.add_argument("-v", "--v", dest="v", type=int)
    sp.add_argument("-k", "--k", dest="k", type=int)
    if lam:
        sp.add_argument("-l", "--lambda", dest="lam", default="1")
    sp.add_argument("--q", dest="mode", type=_mode, required=need_q, default=SYMBOLIC)


def _add_common(sp, default_format="text"):
    sp.add_argument("--format", choices=FORMATS, default=default_format)
    sp.add_argument("--style", choices=STYLES, default="factored")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qdesign", description="Intersection numbers of subspace designs")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def cmd(name, help_, **kw):
        sp = sub.add_parser(name, help=help_)
        _add_common(sp, **kw)
        return sp

    sp = cmd("params", "lambda_i table and admissibility")
    _add_params(sp)
    sp = cmd("lambda-ij", "two-index numbers lambda_{i,j}")
    _add_params(sp)
    sp.add_argument("--order", type=int, default=1)
    sp = cmd("dual", "parameters of the dual design")
    _add_params(sp)
    sp = cmd("complement", "parameters of the complementary design")
    _add_params(sp)
    for name, help_ in (("koehler", "Koehler parametrization"), ("mendelsohn", "Mendelsohn equations")):
        sp = cmd(name, help_)
        _add_params(sp)
        sp.add_argument("-s", "--s", dest="s", type=int, required=True)
        if name == "mendelsohn":
            sp.add_argument("--order", type=int, default=1)
        else:
            sp.add_argument("--method", choices=("closed", "matrix"), default="closed")
    sp = cmd("enumerate", "feasible intersection vectors")
    _add_params(sp)
    sp.add_argument("-s", "--s", dest="s", type=int, required=True)
    sp.add_argument("--fix", action="append", default=[], metavar="J=VALUE")
    sp.add_argument("--budget", type=int, default=ix.DEFAULT_NODE_BUDGET)
    sp = cmd("unique", "intersection vector for s <= t or s >= v - t")
    _add_params(sp)
    sp.add_argument("-s", "--s", dest="s", type=int, required=True)
    sp.add_argument("--order", type=int, default=1)
    sp = cmd("nonexist", "nonexistence certificate")
    _add_params(sp)
    sp.add_argument("--budget", type=int, default=ix.DEFAULT_NODE_BUDGET)
    sp = cmd("scan-family", "scan the t=4 or t=3 nonexistence family")
    sp.add_argument("--family", choices=ix.FAMILIES, required=True)
    sp.add_argument("--n-from", type=int, required=True)
    sp.add_argument("--n-to", type=int, required=True)
    for name, help_, fmt in (
        ("fano-table", "intersection vector distribution of a 2-(7,3,1)_q design", "text"),
        ("fano-graph", "intersection structure graph", "dot"),
        ("fano-derived", "derived 2-(7,3,q^4)_q design", "text"),
    ):
        sp = cmd(name, help_, default_format=fmt)
        sp.add_argument("--q", dest="mode", type=_mode, default=SYMBOLIC)
    for name, help_ in (("spread", "Desarguesian spread design file"), ("trivial", "full Grassmannian design file")):
        sp = cmd(name, help_)
        sp.add_argument("--q", dest="q0", type=int, required=True)
        sp.add_argument("-v", "--v", dest="v", type=int, required=True)
        sp.add_argument("-k", "--k", dest="k", type=int, required=True)
        sp.add_argument("--out")
    sp = cmd("verify", "check a design file")
    sp.add_argument("--design", required=True)
    sp.add_argument("-t", "--t", dest="t", type=int, required=True)
    sp = cmd("measure", "measured intersection vectors of a design file")
    sp.add_argument("--design", required=True)
    sp.add_argument("-s", "--s", dest="s", type=int, required=True)
    sp.add_argument("--order", type=int, default=1)
    sp = cmd("bound-steiner3", "counting bound for 3-(v,k,1) designs")
    sp.add_argument("-v", "--v", dest="v", type=int, required=True)
    sp.add_argument("-k", "--k", dest="k", type=int, required=True)
    return parser


# handlers return (exit code, Report)


def _text(lines) -> str:
    # the table would only repeat these lines in text mode
    return "\n".join(lines) + "\n"


def _lambda_lines(p, values, style):
    return [f"lambda_{i} = {fmt_scalar(x, style) if x is not None else '(not integral)'}" for i, x in enumerate(values)]


def cmd_params(a):
    p = _params(a)
    tab = dc.lambda_table(p)
    lines = [f"parameters: {p}"] + _lambda_lines(p, tab.values, a.style)
    table = Table(["i", "lambda_i"], [[str(i), fmt_scalar(x, a.style) if x is not None else ""] for i, x in enumerate(tab.values)])
    data = {
        "params": str(p),
        "lambdas": [json_scalar(x) for x in tab.values],
        "admissible": tab.admissible,
        "fail_witness": tab.fail_witness,
    }
    if p.mode.symbolic:
        if tab.admissible:
            lines.append("admissible for all q")
        else:
            lines.append(f"not admissible for all q (lambda_{tab.fail_witness} is not a polynomial)")
            per_q = {q0: dc.lambda_table(p.at(q0)).admissible for q0 in PER_Q_SPOTS if p.mode.to_int(p.lam, q0) >= 1}
            for q0, ok in per_q.items():
                lines.append(f"  q={q0}: {'admissible' if ok else 'not admissible'}")
            data["per_q"] = {str(q0): ok for q0, ok in per_q.items()}
    else:
        lines.append(
            f"admissible at q={p.mode.q0}" if tab.admissible
            else f"not admissible at q={p.mode.q0} (lambda_{tab.fail_witness} not integral)"
        )
    return (EXIT_OK if tab.admissible else EXIT_NEGATIVE), Report(lines, table, data, raw=_text(lines))


def cmd_lambda_ij(a):
    p = _params(a)
    tab = dc.lambda_ij(p, a.order)
    rows = [[str(i), str(j), fmt_scalar(x, a.style)] for (i, j), x in sorted(tab.entries.items())]
    name = "lambda" if a.order == 1 else f"lambda^({a.order})"
    lines = [f"parameters: {p}"] + [f"{name}_{{{i},{j}}} = {x}" for i, j, x in rows]
    data = {"params": str(p), "order": a.order, "entries": [{"i": int(i), "j": int(j), "value": json_scalar(tab.entries[(int(i), int(j))])} for i, j, _ in rows]}
    return EXIT_OK, Report(lines, Table(["i", "j", "value"], rows), data, raw=_text(lines))


def _params_report(title, p, style):
    tab = dc.lambda_table(p)
    lines = [f"{title}: {p}"] + _lambda_lines(p, tab.values, style)
    table = Table(["t", "v", "k", "lambda"], [[str(p.t), str(p.v), str(p.k), fmt_scalar(p.lam, style)]])
    return Report(lines, table, {"params": str(p), "t": p.t, "v": p.v, "k": p.k, "lambda": json_scalar(p.lam)}, raw=_text(lines))


def cmd_dual(a):
    return EXIT_OK, _params_report("dual", dc.dual_params(_params(a)), a.style)


def cmd_complement(a):
    return EXIT_OK, _params_report("complement", dc.complement_params(_params(a)), a.style)


def cmd_koehler(a):
    p = _params(a)
    form = ix.koehler_forms(p, a.s, a.method)
    free = list(range(p.t + 1, p.k + 1))
    lines = [f"parameters: {p}, s = {a.s}"] + [form.render_row(i, a.style) for i in range(p.t + 1)]
    rows = [
        [str(i), fmt_scalar(form.constants[i], a.style)] + [fmt_scalar(form.coeff(i, j), a.style) for j in free]
        for i in range(p.t + 1)
    ]
    table = Table(["i", "constant"] + [f"alpha{j}" for j in free], rows)
    data = {
        "params": str(p),
        "s": a.s,
        "rows": [
            {"i": i, "constant": json_scalar(form.constants[i]), "coeffs": {str(j): json_scalar(form.coeff(i, j)) for j in free}}
            for i in range(p.t + 1)
        ],
    }
    return EXIT_OK, Report(lines, table, data, raw=_text(lines))


def cmd_mendelsohn(a):
    p = _params(a)
    sysm = ix.mendelsohn_system(p, a.s, a.order)
    name = "alpha" if a.order == 1 else f"alpha^({a.order})"
    lines = [f"parameters: {p}, s = {a.s}, order {a.order}"]
    rows = []
    for i, (row, rhs) in enumerate(zip(sysm.matrix, sysm.rhs)):
        terms = []
        for j, c in enumerate(row):
            if not c:
                continue
            cs = fmt_scalar(c, a.style)
            terms.append(f"{name}_{j}" if c == 1 else f"{ix._wrap(cs, c)}*{name}_{j}")
        lines.append(f"row {i}: {' + '.join(terms) or '0'} = {fmt_scalar(rhs, a.style)}")
        rows.append([str(i)] + [fmt_scalar(c, a.style) for c in row] + [fmt_scalar(rhs, a.style)])
    table = Table(["i"] + [f"alpha{j}" for j in range(p.k + 1)] + ["rhs"], rows)
    data = {"params": str(p), "s": a.s, "order": a.order,
            "matrix": [[json_scalar(c) for c in row] for row in sysm.matrix],
            "rhs": [json_scalar(r) for r in sysm.rhs]}
    return EXIT_OK, Report(lines, table, data, raw=_text(lines))


def _vector_table(vectors, k, style, count=None):
    header = (["count"] if count else []) + [f"alpha{j}" for j in range(k + 1)]
    rows = []
    for idx, vec in enumerate(vectors):
        rows.append(([str(count[idx])] if count else []) + [fmt_scalar(x, style) for x in vec])
    return Table(header, rows)


def cmd_enumerate(a):
    p = _params(a)
    fixed = {}
    for item in a.fix:
        try:
            j, val = item.split("=")
            fixed[int(j)] = int(val)
        except ValueError:
            raise UsageError(f"--fix expects J=VALUE, got {item!r}") from None
    vectors = ix.enumerate_feasible(p, a.s, fixed, a.budget)
    lines = [f"parameters: {p}, s = {a.s}", "constraints:"] + [f"  {c}" for c in vectors.constraints]
    lines.append(f"{len(vectors)} feasible vector(s), {vectors.nodes} nodes")
    data = {"params": str(p), "s": a.s, "constraints": list(vectors.constraints),
            "vectors": [list(v.alphas) for v in vectors]}
    return EXIT_OK, Report(lines, _vector_table(vectors, p.k, a.style), data)


def cmd_unique(a):
    p = _params(a)
    vec = ix.unique_vector(p, a.s, a.order)
    lines = [f"parameters: {p}, s = {a.s}, order {a.order}", f"alpha = ({', '.join(fmt_scalar(x, a.style) for x in vec)})"]
    data = {"params": str(p), "s": a.s, "order": a.order, "alpha": [json_scalar(x) for x in vec]}
    return EXIT_OK, Report(lines, _vector_table([vec], p.k, a.style), data, raw=_text(lines))


def _certificate_lines(cert: ix.NonexistenceCertificate) -> list[str]:
    p = cert.params
    lines = [
        f"parameters: {p}",
        f"lambdas: ({', '.join(str(x) for x in cert.lambdas)}), admissible",
        f"stage: {cert.stage}",
    ]
    if cert.stage == "koehler-negativity":
        lines.append(
            f"block S (s = {p.k}, alpha_{p.k} >= 1): alpha_{cert.negative_index} <= "
            f"{cert.constant} - {-cert.coefficient} = {cert.bound} < 0"
        )
    elif cert.forced_vector is not None:
        lines.append(f"unique intersection vector of a block: {cert.forced_vector}")
        if cert.stage == "unique-vector-pigeonhole":
            lines.append(
                f"two blocks missing a block meet in dimension >= {cert.pair_dim}, "
                f"but alpha_j = 0 for {max(cert.pair_dim, 0)} <= j < {p.k}"
            )
    for c in cert.constraints:
        lines.append(f"  constraint: {c}")
    lines.append(f"verdict: {cert.verdict}")
    return lines


def _certificate_data(cert):
    return {
        "params": str(cert.params),
        "stage": cert.stage,
        "verdict": cert.verdict,
        "lambdas": list(cert.lambdas),
        "negative_index": cert.negative_index,
        "constant": cert.constant,
        "coefficient": cert.coefficient,
        "bound": cert.bound,
        "forced_vector": list(cert.forced_vector.alphas) if cert.forced_vector else None,
        "pair_dim": cert.pair_dim,
    }


def cmd_nonexist(a):
    p = _params(a)
    if p.mode.symbolic:
        raise UsageError("nonexist needs a numeric --q")
    cert = ix.nonexistence_check(p, a.budget)
    code = EXIT_NEGATIVE if cert.realizable is False else EXIT_OK
    return code, Report(_certificate_lines(cert), None, _certificate_data(cert))


def cmd_scan_family(a):
    results = ix.scan_family(a.family, a.n_from, a.n_to)
    rows, data, negative = [], [], False
    for r in results:
        if r.skipped:
            rows.append([str(r.n), "", "skipped", "", "", "", "", r.skipped])
            data.append({"n": r.n, "skipped": r.skipped})
            continue
        cert = r.certificate
        realizable = "" if cert is None else ("no" if cert.realizable is False else "unknown")
        negative |= cert is not None and cert.realizable is False
        rows.append([
            str(r.n), str(r.params), "yes" if r.admissible else "no", realizable,
            cert.stage if cert else "", "" if not cert or cert.negative_index is None else str(cert.negative_index),
            "" if not cert or cert.constant is None else str(cert.constant),
            "" if not cert or cert.bound is None else str(cert.bound),
        ])
        data.append({"n": r.n, "params": str(r.params), "admissible": r.admissible,
                     **({"certificate": _certificate_data(cert)} if cert else {})})
    lines = []
    for row in rows:
        if row[2] == "skipped":
            lines.append(f"n={row[0]}: skipped ({row[7]})")
        else:
            lines.append(f"n={row[0]} {row[1]}: admissible: {row[2]}, realizable: {row[3] or 'n/a'}"
                         + (f" ({row[4]}, i={row[5]}, constant {row[6]}, bound {row[7]})" if row[5] else (f" ({row[4]})" if row[4] else "")))
    table = Table(["n", "params", "admissible", "realizable", "stage", "i", "constant", "bound"], rows)
    return (EXIT_NEGATIVE if negative else EXIT_OK), Report(lines, table, {"family": a.family, "results": data}, raw=_text(lines))


def _warn_q(mode: QMode):
    if not mode.symbolic and mode.q0 > 1 and not dc.is_prime_power(mode.q0):
        print(f"warning: q={mode.q0} is not a prime power", file=sys.stderr)


def cmd_fano_table(a):
    rows = ix.fano_distribution(a.mode)
    table = Table(
        ["count", "s", "alpha0", "alpha1", "alpha2", "alpha3"],
        [[fmt_scalar(r.count, a.style), str(r.s)] + [fmt_scalar(x, a.style) for x in r.vector] for r in rows],
    )
    data = [
        {"count": json_scalar(r.count), "s": r.s, "type": r.type_label, "alpha": [json_scalar(x) for x in r.vector]}
        for r in rows
    ]
    return EXIT_OK, Report([f"intersection vector distribution of a 2-(7,3,1)_{a.mode.label()} design"], table, data)


def cmd_fano_graph(a):
    g = ix.fano_structure_graph(a.mode)
    table = Table(
        ["lower", "upper", "up", "down"],
        [[e.lower, e.upper, fmt_scalar(e.up, a.style), fmt_scalar(e.down, a.style)] for e in g.edges],
    )
    data = {
        "nodes": [{"type": r.type_label, "s": r.s, "count": json_scalar(r.count), "alpha": [json_scalar(x) for x in r.vector]} for r in g.sorted_nodes()],
        "edges": [{"lower": e.lower, "upper": e.upper, "up": json_scalar(e.up), "down": json_scalar(e.down)} for e in g.edges],
    }
    return EXIT_OK, Report([f"intersection structure of a 2-(7,3,1)_{a.mode.label()} design"], table, data, dot=g.to_dot(a.style))


def cmd_fano_derived(a):
    d = ix.fano_derived_design(a.mode)
    lines = [f"derived design: {d.params}", f"complementary pair: {d.complement}"]
    rows = []
    for n, st in enumerate(d.steps, 1):
        val = fmt_scalar(st.value, a.style)
        lines.append(f"step {n}: {st.description} = {val}  [{'ok' if st.ok else 'FAILED'}: {st.check}]")
        rows.append([str(n), st.description, val, "ok" if st.ok else "failed"])
    data = {"derived": str(d.params), "complement": str(d.complement),
            "steps": [{"description": s.description, "value": json_scalar(s.value), "ok": s.ok} for s in d.steps]}
    return (EXIT_OK if d.ok else EXIT_ERROR), Report(lines, Table(["step", "description", "value", "check"], rows), data, raw=_text(lines))


def _design_output(D, out):
    text = fq.format_design(D)
    if out:
        fq.save_design(D, out)
        return Report([f"wrote {len(D)} blocks to {out}"], None, {"blocks": len(D), "path": out})
    return Report([], None, {"q": D.q, "v": D.v, "k": D.k, "blocks": text.splitlines()[1:]}, raw=text)


def cmd_spread(a):
    return EXIT_OK, _design_output(fq.spread_construct(a.q0, a.v, a.k), a.out)


def cmd_trivial(a):
    if not 0 <= a.k <= a.v:
        raise UsageError("need 0 <= k <= v")
    return EXIT_OK, _design_output(fq.trivial_design(a.q0, a.v, a.k), a.out)


def cmd_verify(a):
    D = fq.load_design(a.design)
    if not 0 <= a.t <= D.k:
        raise UsageError("need 0 <= t <= k")
    rep = fq.verify_design(D, a.t)
    if rep.is_design:
        lines = [f"{a.t}-({D.v},{D.k},{rep.lam})_{D.q} design with {len(D)} blocks"]
    else:
        T1, c1, T2, c2 = rep.counterexample
        lines = [f"not a {a.t}-design: {T1} lies in {c1} blocks, {T2} in {c2}"]
    data = {"is_design": rep.is_design, "lambda": rep.lam, "blocks": len(D)}
    return (EXIT_OK if rep.is_design else EXIT_NEGATIVE), Report(lines, None, data)


def cmd_measure(a):
    D = fq.load_design(a.design)
    if not 0 <= a.s <= D.v:
        raise UsageError(f"need 0 <= s <= {D.v}")
    profile = fq.alpha_profile(D, a.s, a.order)
    vecs = sorted(profile)
    table = _vector_table(vecs, D.k, "expanded", count=[profile[v] for v in vecs])
    lines = [f"design with {len(D)} blocks in F_{D.q}^{D.v}, s = {a.s}, order {a.order}"]
    data = {"s": a.s, "order": a.order, "profile": [{"alpha": list(v), "count": profile[v]} for v in vecs]}
    return EXIT_OK, Report(lines, table, data)


def cmd_bound_steiner3(a):
    res = dc.steiner3_bound_check(a.v, a.k)
    lines = [
        f"C({a.v},3) = {res.lhs}",
        f"(v/k)*(v-1)*C(k,3) = {res.rhs}",
        f"bound {'holds' if res.holds else 'violated'} (margin {res.margin})",
    ]
    data = {"holds": res.holds, "lhs": str(res.lhs), "rhs": str(res.rhs), "margin": str(res.margin)}
    return (EXIT_OK if res.holds else EXIT_NEGATIVE), Report(lines, None, data)


HANDLERS = {
    "params": cmd_params,
    "lambda-ij": cmd_lambda_ij,
    "dual": cmd_dual,
    "complement": cmd_complement,
    "koehler": cmd_koehler,
    "mendelsohn": cmd_mendelsohn,
    "enumerate": cmd_enumerate,
    "unique": cmd_unique,
    "nonexist": cmd_nonexist,
    "scan-family": cmd_scan_family,
    "fano-table": cmd_fano_table,
    "fano-graph": cmd_fano_graph,
    "fano-derived": cmd_fano_derived,
    "spread": cmd_spread,
    "trivial": cmd_trivial,
    "verify": cmd_verify,
    "measure": cmd_measure,
    "bound-steiner3": cmd_bound_steiner3,
}


def run(argv=None) -> tuple[int, str]:
    """Parse ``argv``, dispatch, and return ``(exit code, rendered output)``.

    Diagnostics go to stderr; the rendered output is empty on errors.
    """
    try:
        a = build_parser().parse_args(argv)
        mode = getattr(a, "mode", None)
        if mode is not None:
            _warn_q(mode)
        code, report = HANDLERS[a.command](a)
        return code, render(report, a.format)
    except dc.NotAdmissibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE, ""
    except (UsageError, RenderError, ValueError, fq.GuardExceeded, ix.EnumerationBudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR, ""


def main(argv=None) -> int:
    code, out = run(argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
