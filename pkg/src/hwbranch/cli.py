"""Batch command line interface.

Text output prints expansions in classical notation; structured output is
deterministic JSON (sorted keys, fixed separators) so identical invocations
are byte-identical.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import branching as br
from . import charoracle as co
from . import hermitian as hm
from . import sympairs as sp
from . import verify as vf
from .rootsys import DominanceError, InvalidTypeError

_DOMAIN_ERRORS = (
    InvalidTypeError, DominanceError, co.PeelError, hm.NotHermitianError,
    br.NotScalarTypeError, br.NotHoloDSError, br.InvalidHWError,
    br.ParameterError, br.UnsupportedPairError, vf.NonPanError, ValueError,
)

ENV_LEVELS = "HWBRANCH_LEVELS"


def _int_tuple(s):
    return tuple(int(x) for x in str(s).split(","))


def _default_levels(args):
    if getattr(args, "levels", None) is not None:
        return args.levels
    cfg = getattr(args, "_config", {})
    if "levels" in cfg:
        return int(cfg["levels"])
    env = os.environ.get(ENV_LEVELS)
    if env is not None:
        return int(env)
    return 10


def _fmt(args):
    if getattr(args, "format", None):
        return args.format
    return getattr(args, "_config", {}).get("format", "text")


def _emit(args, doc, text_lines):
    payload = (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
               if _fmt(args) == "structured" else "\n".join(text_lines) + "\n")
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


# -- label rendering ---------------------------------------------------------


def _render_label(label):
    if isinstance(label, tuple):
        if label and label[0] == "chi":
            return f"chi_{{{label[1]}}}"
        if label and label[0] == "pi":
            return f"pi_{{{label[1]}}}"
        if label and label[0] == "C":
            _, c, head, tail = label
            inner = ",".join(str(x) for x in head + tail)
            return f"C_{{{c}}} (x) pi_{{({inner})}}"
        if label and label[0] in ("holo", "antiholo"):
            star = "" if label[0] == "holo" else "*"
            return f"pi{star}_{{{tuple(label[1])}}}"
        return "pi_{(" + ",".join(str(x) for x in label) + ")}"
    return str(label)


def _expansion_lines(exp):
    lines = []
    parts = [f"{_render_label(t.label)}" + (f" [x{t.mult}]" if t.mult != 1 else "")
             for t in exp.terms]
    if parts:
        lines.append(" (+) ".join(parts))
    for c in exp.continuous_terms:
        mult = "infinite multiplicity" if c.mult == br.INF else f"mult {c.mult}"
        lines.append(f"(+) integral of {c.family} over {c.parameter_range} ({mult})")
    if not lines:
        lines.append("(empty)")
    lines.append(f"# complete through grading drop {exp.truncation_level}")
    return lines


# -- subcommands --------------------------------------------------------------


def _cmd_branch(args):
    levels = _default_levels(args)
    if args.mode == "sl2":
        exp = br.sl2_formula(args.which, m=args.m, n=args.n, levels=levels)
    elif args.mode == "upq":
        exp = br.upq_restriction(args.p, args.q, _int_tuple(args.mu), levels)
    elif args.mode == "hks":
        exp = _sl2_or_general(args.algebra, args.mu, levels, tensor=None)
    else:  # tensor
        exp = _sl2_or_general(args.algebra, args.mu, levels, tensor=args.nu)
    return _emit(args, br.expansion_to_doc(exp), _expansion_lines(exp))


def _sl2_or_general(algebra, mu, levels, tensor):
    name = str(algebra).strip().lower().replace(" ", "")
    if name in ("sl2r", "sl(2,r)"):
        if tensor is None:
            return br.sl2_hks(int(mu), levels)
        return br.sl2_tensor(int(mu), int(tensor), levels)
    hd = hm.hermitian_data(algebra)
    if tensor is None:
        return br.hks_expansion(hd, _int_tuple(mu), levels)
    return br.tensor_hwm_expansion(hd, _int_tuple(mu), _int_tuple(tensor), levels)


def _cmd_tables(args):
    if args.what == "pan":
        nodes = sp.pan_nodes(args.type, args.rank)
        doc = [{"index": n.index, "levi": n.levi_label.render()} for n in nodes]
        lines = [f"alpha_{n.index}  (levi {n.levi_label.render()})" for n in nodes]
        if not lines:
            lines = ["no nodes: every maximal nilradical is nonabelian"]
        return _emit(args, doc, lines)
    if args.what == "pairs":
        rows = []
        if args.involution in ("holomorphic", "both"):
            rows += sp.holomorphic_pairs(args.g)
        if args.involution in ("antiholomorphic", "both"):
            rows += sp.antiholomorphic_pairs(args.g)
        doc = [r.to_dict() for r in rows]
        lines = [f"({r.g_label}, {r.h_label})  [{r.involution_type}]" for r in rows]
        return _emit(args, doc, lines or ["no matching rows"])
    if args.what == "ranks":
        rows = sp.rank_equal_pairs()
        doc = [r.to_dict() for r in rows]
        lines = [f"({r.g_label}, {r.h_label})  rank {r.rank_value}" for r in rows]
        return _emit(args, doc, lines)
    rows = sp.mf_restriction_table()
    doc = [r.to_dict() for r in rows]
    lines = []
    for r in rows:
        d = r.to_dict()
        lines.append(f"({d['g']}, {d['h']})  i in {{{','.join(d['nodes'])}}}"
                     f"  oracle:{d['oracle']}")
    return _emit(args, doc, lines)


def _cmd_mult(args):
    if args.what == "sp2-holo":
        mu1, mu2 = _int_tuple(args.mu)
        val = br.sp2_holo_ktype_mult(mu1, mu2, args.p, args.q)
        bound = br.sp2_holo_sup(mu1, mu2)
        doc = {"multiplicity": val, "uniform_bound": bound}
        lines = [f"multiplicity {val} (uniform bound {bound})"]
    elif args.what == "sp2-w":
        lam1, lam2 = _int_tuple(args.lam)
        val = br.sp2_nonholo_ktype_mult(lam1, lam2, args.p, args.q)
        doc = {"multiplicity": val}
        lines = [f"multiplicity {val} (family unbounded over K-types)"]
    else:  # c-count
        mu1, mu2 = _int_tuple(args.mu)
        val = br.c_count(mu1, mu2, args.a, args.b)
        doc = {"count": val}
        lines = [f"c({mu1},{mu2};{args.a},{args.b}) = {val}"]
    return _emit(args, doc, lines)


def _report_lines(reports):
    lines = []
    for r in reports:
        line = f"{r.status.upper():<12} {r.case_id}"
        if r.witness is not None:
            line += f"  witness={r.witness}"
        lines.append(line)
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    lines.append("# " + ", ".join(f"{k}: {v}" for k, v in sorted(counts.items())))
    return lines


def _cmd_verify(args):
    if args.what == "thmF":
        if args.i is not None and args.j is not None:
            reports = [vf.check_theorem_F(args.type, args.rank, args.i, args.j,
                                          args.kmax)]
        else:
            reports = vf.check_theorem_F_all_pairs(args.type, args.rank, args.kmax)
    elif args.what == "thmE":
        reports = vf.check_theorem_E_table(args.max_rank, args.kmax)
    elif args.what == "grading":
        levels = _default_levels(args)
        mu = int(args.mu) if args.algebra.lower().replace(" ", "") in (
            "sl2r", "sl(2,r)") else _int_tuple(args.mu)
        name = "su(1,1)" if isinstance(mu, int) else args.algebra
        reports = [vf.check_hks_grading(name, mu, levels)]
    else:  # upq
        levels = _default_levels(args)
        reports = [vf.check_upq_consistency(args.p, args.q, _int_tuple(args.mu),
                                            levels)]
    doc = [r.to_doc() for r in reports]
    code = _emit(args, doc, _report_lines(reports))
    if any(r.status == vf.FAIL for r in reports):
        return 1
    return code


def _cmd_export(args):
    doc = sp.export_tables()
    lines = [json.dumps(doc, sort_keys=True, indent=1)]
    return _emit(args, doc, lines)


# -- parser -------------------------------------------------------------------


def _add_common(p):
    p.add_argument("--format", choices=("text", "structured"), default=None)
    p.add_argument("--output", default=None)
    p.add_argument("--config", default=None, help="JSON config file; flags win")


def build_parser():
    top = argparse.ArgumentParser(
        prog="hwbranch",
        description="Exact branching expansions, classification tables and "
                    "oracle-backed verification for highest weight modules.")
    sub = top.add_subparsers(dest="command", required=True)

    b = sub.add_parser("branch", help="compute a branching expansion")
    bs = b.add_subparsers(dest="mode", required=True)
    for mode in ("hks", "tensor"):
        pp = bs.add_parser(mode)
        pp.add_argument("--algebra", required=True)
        pp.add_argument("--mu", required=True)
        if mode == "tensor":
            pp.add_argument("--nu", required=True)
        pp.add_argument("--levels", type=int, default=None)
        _add_common(pp)
        pp.set_defaults(func=_cmd_branch)
    pp = bs.add_parser("upq")
    pp.add_argument("-p", type=int, required=True)
    pp.add_argument("-q", type=int, required=True)
    pp.add_argument("--mu", required=True)
    pp.add_argument("--levels", type=int, default=None)
    _add_common(pp)
    pp.set_defaults(func=_cmd_branch)
    pp = bs.add_parser("sl2")
    pp.add_argument("--which", required=True, choices=tuple("abcdef"))
    pp.add_argument("--m", type=int, default=None)
    pp.add_argument("--n", type=int, default=None)
    pp.add_argument("--levels", type=int, default=None)
    _add_common(pp)
    pp.set_defaults(func=_cmd_branch)

    t = sub.add_parser("tables", help="query the classification tables")
    ts = t.add_subparsers(dest="what", required=True)
    pp = ts.add_parser("pairs")
    pp.add_argument("--involution", choices=("holomorphic", "antiholomorphic",
                                             "both"), default="both")
    pp.add_argument("--g", default=None)
    _add_common(pp)
    pp.set_defaults(func=_cmd_tables)
    pp = ts.add_parser("pan")
    pp.add_argument("--type", required=True)
    pp.add_argument("--rank", type=int, default=None)
    _add_common(pp)
    pp.set_defaults(func=_cmd_tables)
    for what in ("ranks", "mf"):
        pp = ts.add_parser(what)
        _add_common(pp)
        pp.set_defaults(func=_cmd_tables)

    m = sub.add_parser("mult", help="closed-form multiplicity counts")
    ms = m.add_subparsers(dest="what", required=True)
    pp = ms.add_parser("sp2-holo")
    pp.add_argument("--mu", required=True, help="mu1,mu2")
    pp.add_argument("-p", type=int, required=True)
    pp.add_argument("-q", type=int, required=True)
    _add_common(pp)
    pp.set_defaults(func=_cmd_mult)
    pp = ms.add_parser("sp2-w")
    pp.add_argument("--lam", required=True, help="lam1,lam2")
    pp.add_argument("-p", type=int, required=True)
    pp.add_argument("-q", type=int, required=True)
    _add_common(pp)
    pp.set_defaults(func=_cmd_mult)
    pp = ms.add_parser("c-count")
    pp.add_argument("--mu", required=True, help="mu1,mu2")
    pp.add_argument("--a", type=int, required=True)
    pp.add_argument("--b", type=int, required=True)
    _add_common(pp)
    pp.set_defaults(func=_cmd_mult)

    v = sub.add_parser("verify", help="run verification suites")
    vs = v.add_subparsers(dest="what", required=True)
    pp = vs.add_parser("thmF")
    pp.add_argument("--type", required=True)
    pp.add_argument("--rank", type=int, default=None)
    pp.add_argument("--i", type=int, default=None)
    pp.add_argument("--j", type=int, default=None)
    pp.add_argument("--kmax", type=int, default=3)
    _add_common(pp)
    pp.set_defaults(func=_cmd_verify)
    pp = vs.add_parser("thmE")
    pp.add_argument("--max-rank", type=int, default=4)
    pp.add_argument("--kmax", type=int, default=3)
    _add_common(pp)
    pp.set_defaults(func=_cmd_verify)
    pp = vs.add_parser("grading")
    pp.add_argument("--algebra", required=True)
    pp.add_argument("--mu", required=True)
    pp.add_argument("--levels", type=int, default=None)
    _add_common(pp)
    pp.set_defaults(func=_cmd_verify)
    pp = vs.add_parser("upq")
    pp.add_argument("-p", type=int, required=True)
    pp.add_argument("-q", type=int, required=True)
    pp.add_argument("--mu", required=True)
    pp.add_argument("--levels", type=int, default=None)
    _add_common(pp)
    pp.set_defaults(func=_cmd_verify)

    e = sub.add_parser("export", help="export structured data")
    es = e.add_subparsers(dest="what", required=True)
    pp = es.add_parser("tables")
    _add_common(pp)
    pp.set_defaults(func=_cmd_export)
    return top


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    args._config = {}
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            args._config = json.load(fh)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
