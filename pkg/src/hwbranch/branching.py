"""Explicit branching expansions for holomorphic-family highest weight
modules, and the closed-form multiplicity counts for Sp(2,R).

Expansions are emitted truncated: an expansion with `truncation_level = N`
contains exactly the terms whose grading drop below the leading term is at
most N, so downstream checks can compare level by level.  Infinite
multiplicities and continuous spectra are carried as symbolic descriptors and
never enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .hermitian import (
    HermitianData,
    PairData,
    hermitian_data,
    is_holomorphic_ds,
    is_k_dominant,
    is_scalar_type,
    strongly_orthogonal_sequence,
    upq_chain_pair,
)


class NotScalarTypeError(ValueError):
    """The highest weight is not of scalar type."""


class NotHoloDSError(ValueError):
    """The highest weight does not satisfy the discrete-series condition."""


class InvalidHWError(ValueError):
    """The u(p,q) label violates the required inequality chain."""


class ParameterError(ValueError):
    """Parameters outside the domain of a closed-form family."""


class UnsupportedPairError(ValueError):
    """Restriction data for this symmetric pair is not implemented."""


INF = "inf"


@dataclass(frozen=True)
class ExpansionTerm:
    label: object
    mult: int
    ztilde_drop: int


@dataclass(frozen=True)
class ContinuousTerm:
    family: str
    parameter_range: str
    mult: object  # positive int or INF


@dataclass(frozen=True)
class BranchingExpansion:
    top_label: object
    truncation_level: int
    terms: tuple
    continuous_terms: tuple = ()

    def __post_init__(self):
        for t in self.terms:
            if t.mult < 1:
                raise ValueError(f"nonpositive multiplicity at {t.label}")
            if not 0 <= t.ztilde_drop <= self.truncation_level:
                raise ValueError(f"term {t.label} outside truncation level")

    def level(self, m):
        return [t for t in self.terms if t.ztilde_drop == m]

    def as_dict(self):
        out = {}
        for t in self.terms:
            out[t.label] = out.get(t.label, 0) + t.mult
        return out

    def labels(self):
        return [t.label for t in self.terms]

    def is_multiplicity_free(self):
        d = self.as_dict()
        return len(d) == len(self.terms) and all(m == 1 for m in d.values())

    def __len__(self):
        return len(self.terms)


def _sorted_terms(terms):
    return tuple(sorted(terms, key=lambda t: (t.ztilde_drop, _labkey(t.label))))


def _labkey(label):
    if isinstance(label, tuple):
        return tuple(_labkey(x) for x in label)
    if isinstance(label, str):
        return label
    return Fraction(label)


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class PartitionTuple:
    """Weakly decreasing tuple of nonnegative integers."""

    a: tuple

    def __post_init__(self):
        if any(x < 0 for x in self.a) or any(
                x < y for x, y in zip(self.a, self.a[1:])):
            raise ValueError(f"{self.a} is not weakly decreasing nonnegative")

    def total(self):
        return sum(self.a)


def partitions_into(total, parts):
    """All weakly decreasing tuples of length `parts` summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return

    def rec(rest, cap, slots):
        if slots == 1:
            if rest <= cap:
                yield (rest,)
            return
        for first in range(min(rest, cap), -1, -1):
            if first * slots < rest:
                break
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(total, total, parts)


def count_partitions_into(total, parts):
    return sum(1 for _ in partitions_into(total, parts))


# ---------------------------------------------------------------------------
# graded expansions


@lru_cache(maxsize=None)
def _sequence_for(hd):
    return strongly_orthogonal_sequence(hd)


def hks_internal_terms(hd, mu_internal, levels, nus=None, dominance_roots=None):
    """Internal labels mu - sum(a_j nu_j) by grading drop, multiplicity one."""
    if nus is None:
        nus = _sequence_for(hd).roots
    if dominance_roots is None:
        dominance_roots = hd.compact_pos
    mu_internal = tuple(Fraction(x) for x in mu_internal)
    out = []
    for m in range(levels + 1):
        for a in partitions_into(m, len(nus)):
            term = list(mu_internal)
            for aj, nu in zip(a, nus):
                if aj:
                    term = [x - aj * y for x, y in zip(term, nu)]
            term = tuple(term)
            assert all(sum(x * y for x, y in zip(term, r)) >= 0
                       for r in dominance_roots), \
                "expansion term must be dominant for the target compact part"
            out.append((term, m))
    return out


def hks_expansion(hd, mu, levels):
    """Graded restriction of a scalar-type module to the grading-compatible
    maximal compact subalgebra: labels mu - sum(a_j nu_j), multiplicity one."""
    if isinstance(hd, (str, tuple)) and not isinstance(hd, HermitianData):
        hd = hermitian_data(hd)
    internal = hd.paper_to_internal(mu)
    if not is_scalar_type(hd, internal):
        raise NotScalarTypeError(f"{mu} is not of scalar type for {hd.name}")
    terms = [ExpansionTerm(hd.internal_to_paper(t), 1, m)
             for t, m in hks_internal_terms(hd, internal, levels)]
    return BranchingExpansion(hd.internal_to_paper(internal), levels,
                              _sorted_terms(terms))


def hks_pair_expansion(pair, mu, levels):
    """Graded restriction along one shipped symmetric pair (tau != theta)."""
    if not isinstance(pair, PairData):
        raise UnsupportedPairError(
            "restriction data is shipped only for specific pairs")
    hd = pair.hd
    internal = hd.paper_to_internal(mu)
    if not is_scalar_type(hd, internal):
        raise NotScalarTypeError(f"{mu} is not of scalar type for {hd.name}")
    terms = [ExpansionTerm(hd.internal_to_paper(t), 1, m)
             for t, m in hks_internal_terms(hd, internal, levels, pair.nus,
                                            pair.k_compact_pos)]
    return BranchingExpansion(hd.internal_to_paper(internal), levels,
                              _sorted_terms(terms))


def tensor_hwm_expansion(hd, mu1, mu2, levels):
    """Discrete decomposition of the tensor product of two scalar-type
    holomorphic discrete series: labels mu1 + mu2 - sum(a_j nu_j)."""
    if isinstance(hd, (str, tuple)) and not isinstance(hd, HermitianData):
        hd = hermitian_data(hd)
    w1, w2 = hd.paper_to_internal(mu1), hd.paper_to_internal(mu2)
    for mu, w in ((mu1, w1), (mu2, w2)):
        if not is_scalar_type(hd, w):
            raise NotScalarTypeError(f"{mu} is not of scalar type for {hd.name}")
        if not is_holomorphic_ds(hd, w):
            raise NotHoloDSError(
                f"{mu} is not a holomorphic discrete series parameter for {hd.name}")
    top = tuple(a + b for a, b in zip(w1, w2))
    terms = [ExpansionTerm(hd.internal_to_paper(t), 1, m)
             for t, m in hks_internal_terms(hd, top, levels)]
    return BranchingExpansion(hd.internal_to_paper(top), levels,
                              _sorted_terms(terms))


# ---------------------------------------------------------------------------
# the u(p,q) -> u(1) + u(p-1,q) law


def _interlacings(mu):
    """Tuples (lam_2, ..., lam_p) with mu_i >= lam_{i+1} >= mu_{i+1}."""
    if len(mu) <= 1:
        yield ()
        return

    def rec(i, prefix):
        if i == len(mu):
            yield tuple(prefix)
            return
        for lam in range(mu[i], mu[i - 1] + 1):
            yield from rec(i + 1, prefix + [lam])

    yield from rec(1, [])


def _pieri_patterns(mu, a):
    """Tuples lam with lam_1 >= mu_1 >= lam_2 >= ... >= mu_q, sum(lam-mu) = a."""
    q = len(mu)

    def rec(i, prefix, budget):
        if i == q:
            if budget == 0:
                yield tuple(prefix)
            return
        hi = mu[i - 1] if i > 0 else mu[0] + budget
        hi = min(hi, mu[i] + budget)
        for lam in range(mu[i], hi + 1):
            yield from rec(i + 1, prefix + [lam], budget - (lam - mu[i]))

    yield from rec(0, [], a)


def validate_upq_weight(p, q, mu):
    mu = tuple(int(x) for x in mu)
    if len(mu) != p + q:
        raise InvalidHWError(f"need {p + q} coordinates, got {len(mu)}")
    head, tail = mu[:p], mu[p:]
    if any(a < b for a, b in zip(head, head[1:])):
        raise InvalidHWError(f"{head} is not weakly decreasing")
    if any(a < b for a, b in zip(tail, tail[1:])):
        raise InvalidHWError(f"{tail} is not weakly decreasing")
    if tail[-1] < head[0] + p + q:
        raise InvalidHWError(
            f"need mu_{p + q} >= mu_1 + {p + q} for the discrete-series range")
    return mu


def upq_restriction(p, q, mu, levels):
    """Multiplicity-free restriction of a u(p,q) holomorphic discrete series
    to u(1) + u(p-1,q).

    A term at drop `a` is labelled ("C", c, head, tail): the u(1) character
    c = sum(mu_head) - sum(head) - a, the interlaced u(p-1) part, and the
    one-row-grown u(q) part.
    """
    mu = validate_upq_weight(p, q, mu)
    head_mu, tail_mu = mu[:p], mu[p:]
    terms = []
    for a in range(levels + 1):
        tails = list(_pieri_patterns(tail_mu, a))
        for head in _interlacings(head_mu):
            c = sum(head_mu) - sum(head) - a
            for tail in tails:
                terms.append(
                    ExpansionTerm(("C", c, head, tail), 1, a))
    return BranchingExpansion(tuple(mu), levels, _sorted_terms(terms))


# ---------------------------------------------------------------------------
# SL(2,R) closed forms


def _chi(n):
    return ("chi", n)


def _pi(n):
    return ("pi", n)


def sl2_formula(which, m=None, n=None, levels=10):
    """The six SL(2,R)/SU(2) branching formulas, emitted as printed.

    a: holomorphic discrete series restricted to the split torus
       (purely continuous);
    b: holomorphic discrete series restricted to the rotation subgroup;
    c: holomorphic x anti-holomorphic tensor product (continuous part plus a
       finite discrete ladder);
    d: holomorphic x holomorphic tensor product;
    e: SU(2) weight expansion; f: the Clebsch-Gordan formula.
    """
    which = str(which).lower()
    if which == "a":
        _need(n is not None and n >= 2, "need n >= 2")
        return BranchingExpansion(
            _pi(n), 0, (),
            (ContinuousTerm("unitary characters chi_zeta of SO0(1,1)",
                            "zeta in R", 1),))
    if which == "b":
        _need(n is not None and n >= 2, "need n >= 2")
        terms = [ExpansionTerm(_chi(n + 2 * k), 1, k) for k in range(levels + 1)]
        return BranchingExpansion(_pi(n), levels, _sorted_terms(terms))
    if which == "c":
        _need(m is not None and n is not None and m >= n >= 2, "need m >= n >= 2")
        sign = "+" if (m - n) % 2 == 0 else "-"
        discrete = []
        k = 0
        while 2 * k <= m - n - 2:
            discrete.append(ExpansionTerm(_pi(m - n - 2 * k), 1, k))
            k += 1
        top = max((t.ztilde_drop for t in discrete), default=0)
        return BranchingExpansion(
            (_pi(m), _pi(-n)), top, _sorted_terms(discrete),
            (ContinuousTerm(f"principal series, sign {sign}1",
                            "nu in (0, inf)", 1),))
    if which == "d":
        _need(m is not None and n is not None and m >= n >= 2, "need m >= n >= 2")
        terms = [ExpansionTerm(_pi(m + n + 2 * k), 1, k) for k in range(levels + 1)]
        return BranchingExpansion((_pi(m), _pi(n)), levels, _sorted_terms(terms))
    if which == "e":
        _need(n is not None and n >= 0, "need n >= 0")
        terms = [ExpansionTerm(_chi(n - 2 * k), 1, k) for k in range(n + 1)]
        return BranchingExpansion(_pi(n), n, _sorted_terms(terms))
    if which == "f":
        _need(m is not None and n is not None and m >= 0 and n >= 0,
              "need m, n >= 0")
        lo = min(m, n)
        terms = [ExpansionTerm(_pi(m + n - 2 * k), 1, k) for k in range(lo + 1)]
        return BranchingExpansion((_pi(m), _pi(n)), lo, _sorted_terms(terms))
    raise ParameterError(f"unknown formula {which!r}")


def _need(cond, msg):
    if not cond:
        raise ParameterError(msg)


def sl2_internal(n):
    """Internal su(1,1) weight of the character with index n."""
    return (Fraction(-n, 2), Fraction(n, 2))


def internal_label(hd, mu):
    """Internal weight for a family label; ints are character indices on
    su(1,1), everything else goes through the family codec."""
    if hd.g_label == ("su", 1, 1) and isinstance(mu, int):
        return sl2_internal(mu)
    return hd.paper_to_internal(mu)


def _sl2_paper_index(w):
    """Reported character index of an internal su(1,1) weight."""
    c = w[1] - w[0]
    assert c.denominator == 1
    return int(c)


def sl2_hks(n, levels):
    """Rotation-subgroup expansion of the discrete series, via the generic
    graded machinery on su(1,1); labels as characters."""
    hd = hermitian_data(("su", 1, 1))
    internal = sl2_internal(n)
    if not is_holomorphic_ds(hd, internal):
        raise NotHoloDSError(f"need n >= 2, got {n}")
    terms = [ExpansionTerm(_chi(_sl2_paper_index(t)), 1, mlev)
             for t, mlev in hks_internal_terms(hd, internal, levels)]
    return BranchingExpansion(_pi(n), levels, _sorted_terms(terms))


def sl2_tensor(m, n, levels):
    """Tensor product of two discrete series on su(1,1), via the generic
    graded machinery; labels in the module family."""
    hd = hermitian_data(("su", 1, 1))
    for k in (m, n):
        if not is_holomorphic_ds(hd, sl2_internal(k)):
            raise NotHoloDSError(f"need parameters >= 2, got {k}")
    top = tuple(a + b for a, b in zip(sl2_internal(m), sl2_internal(n)))
    terms = [ExpansionTerm(_pi(_sl2_paper_index(t)), 1, mlev)
             for t, mlev in hks_internal_terms(hd, top, levels)]
    return BranchingExpansion((_pi(m), _pi(n)), levels, _sorted_terms(terms))


# ---------------------------------------------------------------------------
# Sp(2,R) closed-form multiplicities


def blattner_from_hc_holo(lam1, lam2):
    """Minimal K-type of the holomorphic discrete series with the given
    infinitesimal character: (lam1 + 1, lam2 + 2)."""
    if not lam1 > lam2 > 0:
        raise ParameterError("need lam1 > lam2 > 0")
    return (lam1 + 1, lam2 + 2)


def blattner_from_hc_w(lam1, lam2):
    """Minimal K-type of the non-holomorphic family: (lam1 + 1, lam2)."""
    if not lam1 > -lam2 > 0:
        raise ParameterError("need lam1 > -lam2 > 0")
    return (lam1 + 1, lam2)


def sp2_holo_ktype_mult(mu1, mu2, p, q):
    """Multiplicity of the K-type (p,q) in the holomorphic discrete series
    with minimal K-type (mu1, mu2): the count of pairs a >= b >= 0 with
    p + q = mu1 + mu2 + 2a + 2b and max(2a+mu2, 2b+mu1) <= p <= 2a + mu1."""
    if mu1 < mu2:
        raise ParameterError("need mu1 >= mu2")
    if p < q:
        return 0
    count = 0
    rest = p + q - mu1 - mu2
    if rest < 0 or rest % 2:
        return 0
    for a in range(rest // 2 + 1):
        b2 = rest - 2 * a
        if b2 % 2:
            continue
        b = b2 // 2
        if b < 0 or a < b:
            continue
        if max(2 * a + mu2, 2 * b + mu1) <= p <= 2 * a + mu1:
            count += 1
    return count


def sp2_holo_sup(mu1, mu2):
    """The uniform bound attained by sp2_holo_ktype_mult over all K-types."""
    if mu1 < mu2:
        raise ParameterError("need mu1 >= mu2")
    return (mu1 - mu2 + 2) // 2


def sp2_nonholo_ktype_mult(lam1, lam2, p, q):
    """Multiplicity of the K-type (p,q) in the non-holomorphic discrete
    series W_(lam1,lam2); zero outside the support cone, otherwise
    1 + min([(p - mu1)/2], (p - q - mu1 + mu2)/2) with mu = (lam1+1, lam2)."""
    if not lam1 > -lam2 > 0:
        raise ParameterError("need lam1 > -lam2 > 0")
    mu1, mu2 = lam1 + 1, lam2
    if p < mu1 or p - q < mu1 - mu2 or (p - q - mu1 - mu2) % 2:
        return 0
    return 1 + min((p - mu1) // 2, (p - q - mu1 + mu2) // 2)


def sp2_nonholo_witness_exceeding(lam1, lam2, bound):
    """A K-type (p,q) where the multiplicity exceeds `bound`."""
    mu1, mu2 = lam1 + 1, lam2
    t = bound
    p, q = mu1 + 2 * t, mu2 - 2 * t
    assert sp2_nonholo_ktype_mult(lam1, lam2, p, q) == 1 + t > bound
    return (p, q)


# ---------------------------------------------------------------------------
# the finite/infinite counterexample exhibit


def c_count(mu1, mu2, a, b):
    """Number of (s,t,u) in N^3 with a = mu1 + 2s + t and b = mu2 + t + 2u."""
    if a < mu1 or b < mu2:
        return 0
    count = 0
    for t in range(min(a - mu1, b - mu2) + 1):
        if (a - mu1 - t) % 2 == 0 and (b - mu2 - t) % 2 == 0:
            count += 1
    return count


def discrete_part_spc(a, b, cap=None):
    """Discrete spectrum of the split-rank-two principal series restriction:
    finitely many holomorphic/anti-holomorphic summands with multiplicity
    c(mu1,mu2;a,b), plus every non-holomorphic discrete series with infinite
    multiplicity (kept symbolic)."""
    if a < 0 or b < 0:
        raise ParameterError("need a, b >= 0")
    hi1 = a if cap is None else min(a, cap)
    hi2 = b if cap is None else min(b, cap)
    terms = []
    for mu1 in range(3, hi1 + 1):
        for mu2 in range(3, min(mu1, hi2) + 1):
            c = c_count(mu1, mu2, a, b)
            if c:
                drop = mu1 + mu2 - 6
                terms.append(ExpansionTerm(("holo", (mu1, mu2)), c, drop))
                terms.append(ExpansionTerm(("antiholo", (mu1, mu2)), c, drop))
    level = max((t.ztilde_drop for t in terms), default=0)
    cont = (ContinuousTerm("non-holomorphic discrete series W and duals",
                           "lam1 > -lam2 > 0", INF),)
    return BranchingExpansion(("principal-series", (a, b)), level,
                              _sorted_terms(terms), cont)


# ---------------------------------------------------------------------------
# serialization (shared with the command line interface)


def _label_to_json(label):
    if isinstance(label, tuple):
        return [_label_to_json(x) for x in label]
    if isinstance(label, Fraction):
        return str(label) if label.denominator != 1 else int(label)
    return label


def _label_from_json(doc):
    if isinstance(doc, list):
        return tuple(_label_from_json(x) for x in doc)
    if isinstance(doc, str) and "/" in doc:
        return Fraction(doc)
    return doc


def expansion_to_doc(exp):
    return {
        "top_label": _label_to_json(exp.top_label),
        "truncation_level": exp.truncation_level,
        "terms": [{"label": _label_to_json(t.label), "mult": t.mult,
                   "ztilde_drop": t.ztilde_drop} for t in exp.terms],
        "continuous": [{"family": c.family, "parameter_range": c.parameter_range,
                        "mult_or_inf": c.mult} for c in exp.continuous_terms],
    }


def expansion_from_doc(doc):
    terms = tuple(ExpansionTerm(_label_from_json(t["label"]), t["mult"],
                                t["ztilde_drop"]) for t in doc["terms"])
    cont = tuple(ContinuousTerm(c["family"], c["parameter_range"],
                                c["mult_or_inf"]) for c in doc["continuous"])
    return BranchingExpansion(_label_from_json(doc["top_label"]),
                              doc["truncation_level"], terms, cont)
