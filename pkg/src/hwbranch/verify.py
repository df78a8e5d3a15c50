"""Verification harness: runs the multiplicity-free claims and the graded
consistency identities against the finite-dimensional character oracle.

Every case is deterministic; a failing case always carries a concrete
witness (the offending label and multiplicity, or the first level and weight
where two graded characters disagree).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import branching as br
from . import charoracle as co
from . import hermitian as hm
from . import sympairs as sp
from .rootsys import build_root_system

PASS = "Pass"
FAIL = "Fail"
UNSUPPORTED = "Unsupported"


class NonPanError(ValueError):
    """A requested node is not a pan node of the given type."""


@dataclass(frozen=True)
class VerificationReport:
    case_id: str
    status: str
    witness: object = None
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    def to_doc(self):
        return {"case_id": self.case_id, "status": self.status,
                "witness": _witness_doc(self.witness),
                "elapsed": round(self.elapsed, 6)}


def _witness_doc(w):
    if w is None:
        return None
    if isinstance(w, (list, tuple)):
        return [_witness_doc(x) for x in w]
    if isinstance(w, Fraction):
        return str(w)
    if isinstance(w, dict):
        return {str(k): _witness_doc(v) for k, v in w.items()}
    return w


def _finish(case_id, start, witness=None):
    status = PASS if witness is None else FAIL
    return VerificationReport(case_id, status, witness,
                              time.perf_counter() - start)


# ---------------------------------------------------------------------------
# tensor products of pan representations


def check_theorem_F(family, rank, i, j, k_max):
    """Tensor products of the two fundamental-weight families at pan nodes
    are multiplicity-free for all scalar multiples up to k_max."""
    start = time.perf_counter()
    pan = {n.index for n in sp.pan_nodes(family, rank)}
    for node in (i, j):
        if node not in pan:
            raise NonPanError(f"node {node} is not a pan node of {family}{rank}")
    sys = build_root_system(family, rank)
    case_id = f"thmF {sys.name} i={i} j={j} k<={k_max}"
    for k in range(1, k_max + 1):
        for k2 in range(1, k_max + 1):
            lam = sys.fw(*[k if t == i - 1 else 0 for t in range(rank)])
            mu = sys.fw(*[k2 if t == j - 1 else 0 for t in range(rank)])
            dec = co.tensor_decompose(sys, lam, mu)
            if not co.is_multiplicity_free(dec):
                bad = max(dec.terms.items(), key=lambda kv: kv[1])
                return _finish(case_id, start, {
                    "k": k, "k2": k2,
                    "label": tuple(bad[0].to_fundamental().coords),
                    "mult": bad[1]})
    return _finish(case_id, start)


def check_theorem_F_all_pairs(family, rank, k_max):
    """All pan-node pairs of one simple type."""
    reports = []
    pan = [n.index for n in sp.pan_nodes(family, rank)]
    for i in pan:
        for j in pan:
            reports.append(check_theorem_F(family, rank, i, j, k_max))
    return reports


# ---------------------------------------------------------------------------
# restrictions of pan representations to symmetric subalgebras


def check_theorem_E(case, k_max):
    """Restriction of pan representations along one restriction-table row
    instance is multiplicity-free; Unsupported if no projection is shipped."""
    start = time.perf_counter()
    case_id = f"thmE {case.name} k<={k_max}"
    if case.projection_args is None:
        return VerificationReport(case_id, UNSUPPORTED, None,
                                  time.perf_counter() - start)
    kind, args = case.projection_args
    proj = co.shipped_projection(kind, *args)
    sys = build_root_system(case.family, case.rank, _internal=True)
    for i in case.nodes:
        for k in range(1, k_max + 1):
            lam = sys.fw(*[k if t == i - 1 else 0 for t in range(case.rank)])
            dec = co.branch_by_projection(sys, lam, proj)
            if not co.is_multiplicity_free(dec):
                bad = max(dec.terms.items(), key=lambda kv: kv[1])
                return _finish(case_id, start,
                               {"node": i, "k": k, "label": bad[0],
                                "mult": bad[1]})
    return _finish(case_id, start)


def check_theorem_E_table(max_rank, k_max):
    """Every restriction-table row instance with rank(g) <= max_rank."""
    return [check_theorem_E(c, k_max) for c in sp.enumerate_mf_cases(max_rank)]


# ---------------------------------------------------------------------------
# graded structure of the compact restriction


def _k_factor_dims(hd, internal):
    """Dimension of the compact-group type with the given internal label."""
    kind = hd.g_label[0]
    internal = tuple(internal)
    if kind in ("su", "u"):
        p = hd.g_label[1]
        return co.gl_dim(_ints(internal[:p])) * co.gl_dim(_ints(internal[p:]))
    if kind in ("sp", "so*"):
        return co.gl_dim(_ints(internal))
    # so(2,n): torus character times an so(n) module
    rest = internal[1:]
    if not rest:
        return 1
    n = hd.g_label[1]
    if n % 2:
        fac = build_root_system("B", len(rest), _internal=True)
    else:
        fac = build_root_system("D", len(rest), _internal=True)
    from .rootsys import weyl_dim
    return weyl_dim(fac, fac.weight(rest))


def _ints(t):
    out = []
    for x in t:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"expected integer label entries, got {t}")
        out.append(int(x))
    return tuple(out)


def check_hks_grading(g_label, mu, levels):
    """Level counts match partitions into at most l parts; level dimensions
    match the symmetric algebra on the noncompact lowering space."""
    start = time.perf_counter()
    hd = g_label if isinstance(g_label, hm.HermitianData) else hm.hermitian_data(g_label)
    case_id = f"grading {hd.name} mu={mu} N={levels}"
    internal = br.internal_label(hd, mu)
    if not hm.is_scalar_type(hd, internal):
        raise br.NotScalarTypeError(f"{mu} is not of scalar type for {hd.name}")
    if not hm.is_holomorphic_ds(hd, internal):
        raise br.NotHoloDSError(f"{mu} is not in the discrete-series range")
    seq = hm.strongly_orthogonal_sequence(hd)
    dim_pminus = len(hd.noncompact_pos)
    internal_terms = br.hks_internal_terms(hd, internal, levels)
    if len({t for t, _ in internal_terms}) != len(internal_terms):
        return _finish(case_id, start, {"reason": "not multiplicity-free"})
    by_level = {}
    for t, lev in internal_terms:
        by_level.setdefault(lev, []).append(t)
    for m in range(levels + 1):
        got = len(by_level.get(m, ()))
        want = br.count_partitions_into(m, seq.length)
        if got != want:
            return _finish(case_id, start,
                           {"level": m, "count": got, "partitions": want})
        got_dim = sum(_k_factor_dims(hd, t) for t in by_level.get(m, ()))
        want_dim = comb(dim_pminus + m - 1, m)
        if got_dim != want_dim:
            return _finish(case_id, start,
                           {"level": m, "dimension": got_dim,
                            "symmetric_power": want_dim})
    return _finish(case_id, start)


# ---------------------------------------------------------------------------
# u(p,q) chain consistency


def _sym_power_char(weights, degree):
    """Weight multiset of the degree-d symmetric power of a weight list."""
    zero = tuple(0 for _ in weights[0]) if weights else ()
    out = {}
    for combo in itertools.combinations_with_replacement(weights, degree):
        tot = zero
        for w in combo:
            tot = tuple(a + b for a, b in zip(tot, w))
        out[tot] = out.get(tot, 0) + 1
    return out


def _hk_type_char(p, q, c, head, tail):
    """Torus character of the compact type C_c x gl(p-1) x gl(q)."""
    heads = co.gl_weight_multiset(tuple(head)) if head else {(): 1}
    tails = co.gl_weight_multiset(tuple(tail)) if tail else {(): 1}
    out = {}
    for wh, mh in heads.items():
        for wt, mt in tails.items():
            w = (c,) + tuple(wh) + tuple(wt)
            out[w] = out.get(w, 0) + mh * mt
    return out


def _k_type_char(p, q, internal):
    """Torus character of the compact type gl(p) x gl(q)."""
    head = co.gl_weight_multiset(_ints(internal[:p]))
    tail = co.gl_weight_multiset(_ints(internal[p:]))
    out = {}
    for wh, mh in head.items():
        for wt, mt in tail.items():
            w = tuple(wh) + tuple(wt)
            out[w] = out.get(w, 0) + mh * mt
    return out


def check_upq_consistency(p, q, mu, levels, upq_exp=None):
    """Level-graded torus-character identity between the u(p,q) chain law and
    the compact graded expansion.

    At each level m, the compact expansion restricted to the chain torus must
    equal the chain terms of level b <= m completed by the symmetric algebra
    on the invariant lowering space at degree m - b.
    """
    start = time.perf_counter()
    case_id = f"upq p={p} q={q} mu={tuple(mu)} N={levels}"
    mu = br.validate_upq_weight(p, q, mu)
    hd = hm.hermitian_data(("u", p, q))
    internal = hd.paper_to_internal(mu)
    if not hm.is_scalar_type(hd, internal):
        raise br.NotScalarTypeError(f"{mu} is not of scalar type for u({p},{q})")
    if upq_exp is None:
        upq_exp = br.upq_restriction(p, q, mu, levels)

    # term-for-term: for scalar type the chain law collapses to the graded
    # expansion along the shipped pair data
    pair = hm.upq_chain_pair(p, q)
    pair_terms = br.hks_internal_terms(hd, internal, levels, pair.nus,
                                       pair.k_compact_pos)
    for (t, lev) in pair_terms:
        expect = ("C", int(t[0]), _ints(t[1:p]), _ints(t[p:]))
        got = [x.label for x in upq_exp.level(lev)]
        if expect not in got:
            return _finish(case_id, start,
                           {"level": lev, "missing_pair_term": expect,
                            "present": got})

    # graded character identity
    invariant_lowering = [
        tuple(-(int(a == i) - int(a == j)) for a in range(p + q))
        for i in range(1, p) for j in range(p, p + q)]
    hks_terms = br.hks_internal_terms(hd, internal, levels)
    hks_by_level = {}
    for t, lev in hks_terms:
        hks_by_level.setdefault(lev, []).append(t)
    upq_chars = {}
    for t in upq_exp.terms:
        _, c, head, tail = t.label
        ch = _hk_type_char(p, q, c, head, tail)
        lev_chars = upq_chars.setdefault(t.ztilde_drop, {})
        for w, m in ch.items():
            lev_chars[w] = lev_chars.get(w, 0) + m * t.mult
    for m in range(levels + 1):
        rhs = {}
        for t in hks_by_level.get(m, ()):
            for w, mult in _k_type_char(p, q, t).items():
                rhs[w] = rhs.get(w, 0) + mult
        lhs = {}
        for b in range(m + 1):
            dress = _sym_power_char(invariant_lowering, m - b)
            for w0, m0 in upq_chars.get(b, {}).items():
                for wd, md in dress.items():
                    if wd == ():
                        w = w0
                    else:
                        w = tuple(a + b2 for a, b2 in zip(w0, wd))
                    lhs[w] = lhs.get(w, 0) + m0 * md
        if lhs != rhs:
            bad = sorted(set(lhs) ^ set(rhs)
                         | {w for w in set(lhs) & set(rhs) if lhs[w] != rhs[w]})
            w = bad[0]
            return _finish(case_id, start,
                           {"level": m, "weight": w,
                            "chain_side": lhs.get(w, 0),
                            "compact_side": rhs.get(w, 0)})
    return _finish(case_id, start)


# ---------------------------------------------------------------------------
# suite driver


@dataclass(frozen=True)
class SuiteConfig:
    """Desk-scale verification bounds (configuration, not code)."""

    max_rank: int = 4
    k_max: int = 3
    levels: int = 10


def run_suite(config=None):
    config = config or SuiteConfig()
    reports = []
    for family, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        for rank in range(lo, config.max_rank + 1):
            reports += check_theorem_F_all_pairs(family, rank, config.k_max)
    for family in ("G2", "F4"):
        reports += check_theorem_F_all_pairs(family, None, config.k_max)
    reports += check_theorem_E_table(config.max_rank, config.k_max)
    reports.append(check_hks_grading("sl(2,R)", 2, min(config.levels, 10)))
    reports.append(check_hks_grading("sp(2,R)", (3, 3), min(config.levels, 6)))
    reports.append(check_upq_consistency(2, 1, (-5, -5, 0), min(config.levels, 5)))
    return reports
