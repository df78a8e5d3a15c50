"""Hermitian structure of the classical simple algebras that carry one.

A `HermitianData` records the splitting of the roots into compact roots and
noncompact positive roots, together with the grading functional that is 0 on
the former and 1 on the latter.  Highest weights are handled internally in
the convention where the grading value of a holomorphic-family label is very
negative; the `paper label` codecs translate to the positively-written
classical labels used for reporting.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootsys import build_root_system


class NotHermitianError(ValueError):
    """The requested algebra is not (simple) of Hermitian type here."""


class UnsupportedExceptionalError(NotHermitianError):
    """Hermitian data for the exceptional real forms is not constructed."""


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _tuple(v):
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class HermitianData:
    g_label: tuple
    sys: object
    compact_pos: tuple
    noncompact_pos: tuple
    ztilde_vec: tuple
    rho_g: tuple
    real_rank_expected: int

    @property
    def name(self):
        kind = self.g_label[0]
        if kind in ("su", "u"):
            return f"{kind}({self.g_label[1]},{self.g_label[2]})"
        if kind == "sp":
            return f"sp({self.g_label[1]},R)"
        if kind == "so*":
            return f"so*({2 * self.g_label[1]})"
        return f"so(2,{self.g_label[1]})"

    def ztilde(self, w):
        return _dot(self.ztilde_vec, w)

    def all_roots(self):
        return (self.compact_pos + tuple(tuple(-x for x in r) for r in self.compact_pos)
                + self.noncompact_pos
                + tuple(tuple(-x for x in r) for r in self.noncompact_pos))

    def is_root(self, v):
        return tuple(v) in self._root_set()

    @lru_cache(maxsize=None)
    def _root_set(self):
        return frozenset(self.all_roots())

    def strongly_orthogonal(self, a, b):
        s = tuple(x + y for x, y in zip(a, b))
        d = tuple(x - y for x, y in zip(a, b))
        return not self.is_root(s) and not self.is_root(d)

    # -- label codecs -------------------------------------------------------

    def paper_to_internal(self, label):
        label = _tuple(label)
        if self.g_label[0] in ("sp", "so*"):
            return tuple(-x for x in reversed(label))
        return label

    def internal_to_paper(self, w):
        w = _tuple(w)
        if self.g_label[0] in ("sp", "so*"):
            w = tuple(-x for x in reversed(w))
        if all(x.denominator == 1 for x in w):
            return tuple(int(x) for x in w)
        return w


def _parse_label(g_label):
    if isinstance(g_label, (tuple, list)):
        return tuple(g_label)
    s = str(g_label).strip().lower().replace(" ", "")
    if s in ("sl(2,r)", "sl2r", "su(1,1)"):
        return ("su", 1, 1)
    m = re.fullmatch(r"(su|u)\((\d+),(\d+)\)", s)
    if m:
        return (m.group(1), int(m.group(2)), int(m.group(3)))
    m = re.fullmatch(r"sp\((\d+),r\)", s)
    if m:
        return ("sp", int(m.group(1)))
    m = re.fullmatch(r"so\*\((\d+)\)", s)
    if m:
        even = int(m.group(1))
        if even % 2:
            raise NotHermitianError(f"so*({even}) needs an even argument")
        return ("so*", even // 2)
    m = re.fullmatch(r"so\(2,(\d+)\)", s)
    if m:
        return ("so2", int(m.group(1)))
    m = re.fullmatch(r"e[67]\(-?\d+\)", s)
    if m:
        raise UnsupportedExceptionalError(
            f"{s}: Hermitian data for exceptional forms is not constructed")
    raise NotHermitianError(f"cannot parse {g_label!r} as a Hermitian type")


@lru_cache(maxsize=None)
def hermitian_data(g_label):
    """Compact/noncompact root data for su(p,q), u(p,q), sp(n,R), so*(2n), so(2,n)."""
    label = _parse_label(g_label)
    kind = label[0]
    if kind in ("e6", "e7"):
        raise UnsupportedExceptionalError(str(label))
    if kind in ("su", "u"):
        _, p, q = label
        if p < 1 or q < 1:
            raise NotHermitianError(f"{label}: need p, q >= 1")
        sys = build_root_system("A", p + q - 1)
        d = p + q
        zt = tuple(Fraction(int(i < p)) for i in range(d))
        rho = tuple(Fraction(d - 1 - 2 * i, 2) for i in range(d))
        compact, noncompact = [], []
        for i in range(d):
            for j in range(i + 1, d):
                r = tuple(Fraction(int(k == i)) - Fraction(int(k == j))
                          for k in range(d))
                (noncompact if i < p <= j else compact).append(r)
        expected = min(p, q)
    elif kind == "sp":
        _, n = label
        if n < 1:
            raise NotHermitianError(f"{label}: need n >= 1")
        sys = build_root_system("C", n, _internal=True)
        zt = tuple(Fraction(1, 2) for _ in range(n))
        compact = [_unit_diff(n, i, j) for i in range(n) for j in range(i + 1, n)]
        noncompact = [_unit_sum(n, i, j) for i in range(n) for j in range(i, n)]
        rho = _half_sum(compact + noncompact)
        expected = n
    elif kind == "so*":
        _, n = label
        if n < 2:
            raise NotHermitianError(f"{label}: need n >= 2")
        sys = build_root_system("D", n, _internal=True)
        zt = tuple(Fraction(1, 2) for _ in range(n))
        compact = [_unit_diff(n, i, j) for i in range(n) for j in range(i + 1, n)]
        noncompact = [_unit_sum(n, i, j) for i in range(n) for j in range(i + 1, n)]
        rho = _half_sum(compact + noncompact)
        expected = n // 2
    elif kind == "so2":
        _, n = label
        if n == 2:
            raise NotHermitianError("so(2,2) is not simple")
        if n < 1:
            raise NotHermitianError(f"{label}: need n >= 1")
        m = n // 2
        d = m + 1
        if n % 2:
            sys = build_root_system("B", d, _internal=True)
        else:
            sys = build_root_system("D", d, _internal=True)
        zt = tuple(Fraction(int(i == 0)) for i in range(d))
        compact, noncompact = [], []
        for i in range(1, d):
            noncompact.append(_unit_diff(d, 0, i))
            noncompact.append(_unit_sum(d, 0, i))
            for j in range(i + 1, d):
                compact.append(_unit_diff(d, i, j))
                compact.append(_unit_sum(d, i, j))
        if n % 2:
            noncompact.append(tuple(Fraction(int(i == 0)) for i in range(d)))
            for i in range(1, d):
                compact.append(tuple(Fraction(int(k == i)) for k in range(d)))
        rho = _half_sum(compact + noncompact)
        expected = min(2, n)
    else:
        raise NotHermitianError(f"{label} is not of Hermitian type")

    hd = HermitianData(label, sys, tuple(compact), tuple(noncompact),
                       zt, rho, expected)
    _validate(hd)
    return hd


def _unit_diff(d, i, j):
    return tuple(Fraction(int(k == i)) - Fraction(int(k == j)) for k in range(d))


def _unit_sum(d, i, j):
    return tuple(Fraction(int(k == i)) + Fraction(int(k == j)) for k in range(d))


def _half_sum(roots):
    d = len(roots[0])
    return tuple(sum(r[k] for r in roots) / 2 for k in range(d))


def _validate(hd):
    for r in hd.compact_pos:
        if hd.ztilde(r) != 0:
            raise AssertionError(f"compact root {r} has nonzero grading")
    for r in hd.noncompact_pos:
        if hd.ztilde(r) != 1:
            raise AssertionError(f"noncompact root {r} has grading != 1")
    n_roots = 2 * (len(hd.compact_pos) + len(hd.noncompact_pos))
    if n_roots != 2 * len(hd.sys.positive_roots):
        raise AssertionError("compact/noncompact split does not cover the roots")


# ---------------------------------------------------------------------------
# strongly orthogonal sequences


@dataclass(frozen=True)
class StrongOrthSequence:
    roots: tuple
    length: int
    tie_free: bool


def _root_le(hd, a, b):
    """a <= b in the root order: b - a is a nonnegative sum of simple roots."""
    diff = tuple(Fraction(x) - Fraction(y) for x, y in zip(b, a))
    cs = hd.sys.simple_coefficients(diff)
    return cs is not None and all(c >= 0 for c in cs)


def lowest_root(hd, candidates):
    """Minimal element in the root order, ties broken lexicographically."""
    minimal = [a for a in candidates
               if not any(b != a and _root_le(hd, b, a) for b in candidates)]
    return min(minimal), len(minimal) == 1


def strongly_orthogonal_sequence(hd):
    """Greedy maximal sequence of strongly orthogonal noncompact roots.

    Each element is the lowest root (in the root order) among the noncompact
    positive roots strongly orthogonal to all earlier choices.
    """
    remaining = sorted(hd.noncompact_pos)
    chosen = []
    tie_free = True
    while remaining:
        nu, unique = lowest_root(hd, remaining)
        tie_free = tie_free and unique
        chosen.append(nu)
        remaining = [b for b in remaining
                     if b != nu and hd.strongly_orthogonal(nu, b)]
    return StrongOrthSequence(tuple(chosen), len(chosen), tie_free)


# ---------------------------------------------------------------------------
# highest-weight predicates (internal labels)


def is_scalar_type(hd, mu):
    """True iff mu is orthogonal to every compact root."""
    mu = _tuple(mu)
    return all(_dot(mu, a) == 0 for a in hd.compact_pos)


def is_holomorphic_ds(hd, mu):
    """True iff mu + rho pairs strictly negatively with every noncompact
    positive root (the discrete-series condition in the internal convention)."""
    mu = _tuple(mu)
    s = tuple(x + r for x, r in zip(mu, hd.rho_g))
    return all(_dot(s, a) < 0 for a in hd.noncompact_pos)


def is_k_dominant(hd, mu):
    mu = _tuple(mu)
    return all(_dot(mu, a) >= 0 for a in hd.compact_pos)


# ---------------------------------------------------------------------------
# per-pair data for the one implemented non-Cartan involution


@dataclass(frozen=True)
class PairData:
    """Strongly orthogonal root data of one symmetric pair (g, h), h != k."""

    name: str
    hd: HermitianData
    nus: tuple  # restricted noncompact roots driving the expansion
    k_compact_pos: tuple  # positive roots of the compact part of h


def upq_chain_pair(p, q):
    """Data for u(p,q) restricted to u(1) + u(p-1,q): length 1, nu = e1 - e_{p+1}."""
    if p < 1 or q < 1:
        raise NotHermitianError("need p, q >= 1")
    hd = hermitian_data(("u", p, q))
    d = p + q
    nu = tuple(Fraction(int(i == 0)) - Fraction(int(i == p)) for i in range(d))
    hk = tuple(r for r in hd.compact_pos if r[0] == 0)
    return PairData(f"u({p},{q})|u(1)+u({p - 1},{q})", hd, (nu,), hk)
