"""Finite-dimensional ground truth: tensor products and branching by weight
projection.

All decompositions here are computed from exact weight multisets, with no
knowledge of any closed-form branching law, so they can serve as an
independent check of those laws.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootsys import (
    EPSILON,
    DominanceError,
    RootSystemSpec,
    Weight,
    build_root_system,
    weyl_dim,
    _dominant_mults,
    _full_weights,
    _idominant_part,
    _orbit_size,
    _require_dominant_integral,
)


class PeelError(RuntimeError):
    """A peel-off step produced a negative multiplicity.

    This signals an invalid projection map (or a corrupted weight multiset),
    never a legitimate decomposition.
    """


# ---------------------------------------------------------------------------
# decompositions


class Decomposition:
    """Finite map from dominant target labels to positive multiplicities."""

    __slots__ = ("terms", "target", "source_dim")

    def __init__(self, terms, target=None, source_dim=None):
        self.terms = {k: int(m) for k, m in terms.items() if m}
        if any(m < 0 for m in self.terms.values()):
            raise PeelError(f"negative multiplicity in {self.terms}")
        self.target = target
        self.source_dim = source_dim

    def __eq__(self, other):
        return isinstance(other, Decomposition) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: _label_sort_key(kv[0])))

    def multiplicity(self, label):
        return self.terms.get(label, 0)

    def max_multiplicity(self):
        return max(self.terms.values(), default=0)

    def __repr__(self):
        return f"Decomposition({len(self.terms)} terms)"


def is_multiplicity_free(dec):
    """True iff every constituent occurs at most once."""
    return dec.max_multiplicity() <= 1


def _label_sort_key(label):
    if isinstance(label, Weight):
        return label.epskey()
    if isinstance(label, tuple):
        return tuple(_label_sort_key(x) if isinstance(x, (tuple, Weight)) else x
                     for x in label)
    return label


# ---------------------------------------------------------------------------
# tensor products (Klimyk)


def _reflect_to_dominant_signed(sys, iw):
    """Dominant Weyl conjugate with reflection parity; (None, 0) on a wall."""
    sign = 1
    moved = True
    while moved:
        moved = False
        for j in range(sys.rank):
            p = sys._ipair(iw, j)
            if p < 0:
                iw = sys._ireflect(iw, j, p)
                sign = -sign
                moved = True
    for j in range(sys.rank):
        if sys._ipair(iw, j) == 0:
            return None, 0
    return iw, sign


def tensor_decompose(sys, lam, mu, validate=True, _iterate_first=None):
    """Decompose the tensor product of two irreducibles of `sys`.

    Adds every weight of the smaller factor to mu + rho and reflects to the
    dominant chamber with sign; singular vectors cancel.  `_iterate_first`
    forces which factor's weights are enumerated (used to exercise symmetry).
    """
    ilam = _require_dominant_integral(sys, lam)
    imu = _require_dominant_integral(sys, mu)
    dim_l, dim_m = weyl_dim(sys, lam), weyl_dim(sys, mu)
    swap = dim_l > dim_m if _iterate_first is None else not _iterate_first
    if swap:
        ilam, imu = imu, ilam
    shift = tuple(a + b for a, b in zip(imu, sys._irho))
    acc = {}
    for w, m in _full_weights(sys, ilam).items():
        x = tuple(a + b for a, b in zip(w, shift))
        dom, sign = _reflect_to_dominant_signed(sys, x)
        if sign:
            acc[dom] = acc.get(dom, 0) + sign * m
    terms = {}
    for dom, c in acc.items():
        if c:
            if c < 0:
                raise AssertionError("negative multiplicity in tensor product")
            hw = tuple(a - b for a, b in zip(dom, sys._irho))
            terms[Weight(sys._from_int(hw), EPSILON, sys)] = c
    dec = Decomposition(terms, target=sys, source_dim=dim_l * dim_m)
    if validate:
        total = sum(c * weyl_dim(sys, w) for w, c in dec.terms.items())
        if total != dim_l * dim_m:
            raise AssertionError(
                f"dimension mismatch in tensor product: {total} != {dim_l * dim_m}")
    return dec


# ---------------------------------------------------------------------------
# gl(n) helpers: labels are weakly decreasing integer tuples


def _check_gl_label(label):
    label = tuple(int(x) for x in label)
    if any(a < b for a, b in zip(label, label[1:])):
        raise DominanceError(f"gl label {label} is not weakly decreasing")
    return label


def gl_dim(label):
    label = _check_gl_label(label)
    q = len(label)
    if q == 1:
        return 1
    sys = build_root_system("A", q - 1)
    return weyl_dim(sys, sys.weight(label))


@lru_cache(maxsize=4096)
def gl_weight_multiset(label):
    """Weights of the gl(q) irreducible with the given highest weight."""
    label = _check_gl_label(label)
    q = len(label)
    if q == 1:
        return {label: 1}
    sys = build_root_system("A", q - 1)
    ilam = _require_dominant_integral(sys, sys.weight(label))
    mean = Fraction(sum(label), q)
    out = {}
    for w, m in _full_weights(sys, ilam).items():
        coords = tuple(Fraction(x, sys.scale) + mean for x in w)
        assert all(c.denominator == 1 for c in coords)
        out[tuple(int(c) for c in coords)] = m
    return out


def gl_tensor(lam, mu, validate=True):
    """Tensor product of two gl(q) irreducibles, labelled by integer tuples."""
    lam, mu = _check_gl_label(lam), _check_gl_label(mu)
    q = len(lam)
    if len(mu) != q:
        raise ValueError("gl labels must have equal length")
    total = sum(lam) + sum(mu)
    if q == 1:
        return Decomposition({(total,): 1}, target=("gl", 1), source_dim=1)
    sys = build_root_system("A", q - 1)
    dec = tensor_decompose(sys, sys.weight(lam), sys.weight(mu), validate=validate)
    terms = {}
    for w, c in dec.terms.items():
        terms[_gl_lift(w, total)] = c
    return Decomposition(terms, target=("gl", q),
                         source_dim=gl_dim(lam) * gl_dim(mu))


def _gl_lift(w, total):
    """The unique integer gl label with the given sl class and total degree."""
    coords = w.epskey()
    q = len(coords)
    mean = Fraction(total, q)
    lifted = tuple(c + mean for c in coords)
    assert all(c.denominator == 1 for c in lifted), "gl lift is not integral"
    return tuple(int(c) for c in lifted)


def _distinct_permutations(t):
    import math
    from collections import Counter

    n = math.factorial(len(t))
    for c in Counter(t).values():
        n //= math.factorial(c)
    return n


def gl_branch_to_levi(label, p):
    """Restrict a gl(q) irreducible to gl(p) + gl(q - p) by weight projection.

    The projected multiset is collapsed onto dominant (sorted) pairs with
    orbit counts, then peeled greedily.
    """
    label = _check_gl_label(label)
    q = len(label)
    if not 0 < p < q:
        raise ValueError("need 0 < p < q")
    acc = {}
    for w, m in gl_weight_multiset(label).items():
        key = (tuple(sorted(w[:p], reverse=True)), tuple(sorted(w[p:], reverse=True)))
        acc[key] = acc.get(key, 0) + m
    terms = {}
    while True:
        live = [k for k, v in acc.items() if v]
        if not live:
            break
        top = max(live)
        orb = _distinct_permutations(top[0]) * _distinct_permutations(top[1])
        c, rem = divmod(acc[top], orb)
        if rem or c <= 0:
            raise PeelError(f"inconsistent count {acc[top]} at {top}")
        terms[top] = c
        for wl, ml in gl_weight_multiset(top[0]).items():
            for wr, mr in gl_weight_multiset(top[1]).items():
                key = (tuple(sorted(wl, reverse=True)),
                       tuple(sorted(wr, reverse=True)))
                left = acc.get(key, 0) - c * ml * mr
                if left < 0:
                    raise PeelError(f"negative multiplicity at {key}")
                acc[key] = left
    total = sum(c * gl_dim(k[0]) * gl_dim(k[1]) for k, c in terms.items())
    if total != gl_dim(label):
        raise PeelError(f"dimension mismatch: {total} != {gl_dim(label)}")
    return Decomposition(terms, target=("gl", p, q - p), source_dim=gl_dim(label))


def pieri_rule(q, a, mu):
    """Multiply a one-row representation onto a gl(q) irreducible.

    Returns exactly the labels lam with lam_i >= mu_i >= lam_{i+1} and
    sum(lam - mu) = a, each with multiplicity one.
    """
    mu = _check_gl_label(mu)
    if a < 0:
        raise ValueError("a must be nonnegative")
    out = {}

    def rec(i, prefix, budget):
        if i == q:
            if budget == 0:
                out[tuple(prefix)] = 1
            return
        lo = mu[i]
        hi = mu[i - 1] if i > 0 else mu[0] + budget
        hi = min(hi, mu[i] + budget)
        for lam_i in range(lo, hi + 1):
            rec(i + 1, prefix + [lam_i], budget - (lam_i - mu[i]))

    rec(0, [], a)
    return Decomposition(out, target=("gl", q),
                         source_dim=_binom(q + a - 1, a) * gl_dim(mu))


def _binom(n, k):
    from math import comb
    return comb(n, k)


# ---------------------------------------------------------------------------
# reductive targets and projection maps


@dataclass(frozen=True)
class ReductiveSystem:
    """A product of simple factors with a central torus."""

    factors: tuple
    torus_rank: int
    name: str = ""

    @property
    def block_dims(self):
        return tuple(f.ambient_dim for f in self.factors) + (self.torus_rank,)

    def split(self, coords):
        blocks = []
        at = 0
        for d in self.block_dims:
            blocks.append(tuple(coords[at:at + d]))
            at += d
        return tuple(blocks)

    def dominant_key(self, blocks):
        out = []
        for f, b in zip(self.factors, blocks):
            out.append(_idominant_part(f, f._to_int(f._normalize_eps(b))))
        out.append(tuple(Fraction(x) for x in blocks[-1]))
        return tuple(out)

    def label_from_key(self, key):
        blocks = []
        for f, b in zip(self.factors, key):
            blocks.append(f._from_int(b))
        blocks.append(key[-1])
        return tuple(blocks)

    def dim(self, key):
        d = 1
        for f, b in zip(self.factors, key):
            d *= weyl_dim(f, Weight(f._from_int(b), EPSILON, f))
        return d

    def orbit_size(self, key):
        n = 1
        for f, b in zip(self.factors, key):
            n *= _orbit_size(f, b)
        return n

    def collapsed_char(self, key):
        """Dominant weights of the irrep at `key`, counted with orbit sizes."""
        acc = {(): 1}
        for f, b in zip(self.factors, key):
            block = {w: m * _orbit_size(f, w)
                     for w, m in _dominant_mults(f, b).items()}
            nxt = {}
            for pref, c in acc.items():
                for w, m in block.items():
                    nxt[pref + (w,)] = c * m
            acc = nxt
        return {pref + (key[-1],): c for pref, c in acc.items()}


@dataclass(frozen=True)
class ProjectionMap:
    """Exact linear map from source epsilon coordinates to target coordinates."""

    name: str
    source: RootSystemSpec
    target: ReductiveSystem
    matrix: tuple

    def apply(self, eps_coords):
        coords = self.source._normalize_eps(eps_coords)
        out = tuple(sum(r * c for r, c in zip(row, coords)) for row in self.matrix)
        return self.target.split(out)


def branch_by_projection(sys, lam, proj, validate=True):
    """Restrict an irreducible along a projection map and peel highest weights.

    The projected multiset is a genuine character of the target, hence Weyl
    invariant; it is stored collapsed onto dominant representatives with
    orbit-size counts, and peeled greedily from the lexicographically largest
    dominant weight.
    """
    ilam = _require_dominant_integral(sys, lam)
    target = proj.target
    acc = {}
    for w, m in _full_weights(sys, ilam).items():
        blocks = proj.apply(sys._from_int(w))
        key = target.dominant_key(blocks)
        acc[key] = acc.get(key, 0) + m
    terms = {}
    while acc:
        live = [k for k, v in acc.items() if v]
        if not live:
            break
        top = max(live)
        orb = target.orbit_size(top)
        c, rem = divmod(acc[top], orb)
        if rem or c <= 0:
            raise PeelError(f"inconsistent count {acc[top]} at {top}")
        terms[top] = c
        for k, m in target.collapsed_char(top).items():
            left = acc.get(k, 0) - c * m
            if left < 0:
                raise PeelError(f"negative multiplicity at {k}")
            if left:
                acc[k] = left
            else:
                acc.pop(k, None)
    dec = Decomposition({target.label_from_key(k): c for k, c in terms.items()},
                        target=target, source_dim=weyl_dim(sys, lam))
    if validate:
        total = sum(c * target.dim(k) for k, c in terms.items())
        if total != dec.source_dim:
            raise PeelError(
                f"dimension mismatch after peeling: {total} != {dec.source_dim}")
    return dec


# ---------------------------------------------------------------------------
# shipped projection maps


def _centering_rows(total, lo, hi):
    """Rows projecting coordinates [lo, hi) onto their sum-zero hyperplane."""
    n = hi - lo
    rows = []
    for i in range(lo, hi):
        row = [Fraction(0)] * total
        for j in range(lo, hi):
            row[j] = Fraction(-1, n)
        row[i] += 1
        rows.append(tuple(row))
    return rows


def _selector_row(total, indices, value=1):
    row = [Fraction(0)] * total
    for i in indices:
        row[i] = Fraction(value)
    return tuple(row)


def levi_projection(n, p):
    """sl(n+1) restricted to its block Levi sl(p) + sl(n+1-p) + torus."""
    if not 1 <= p <= n:
        raise ValueError("need 1 <= p <= n")
    total = n + 1
    factors = []
    rows = []
    if p >= 2:
        factors.append(build_root_system("A", p - 1))
        rows += _centering_rows(total, 0, p)
    if total - p >= 2:
        factors.append(build_root_system("A", n - p))
        rows += _centering_rows(total, p, total)
    rows.append(_selector_row(total, range(p)))
    target = ReductiveSystem(tuple(factors), 1,
                             name=f"sl({p})+sl({total - p})+C")
    return ProjectionMap(f"sl({total})|levi(p={p})",
                         build_root_system("A", n), target, tuple(rows))


def _so_target(m_coords, odd):
    """Root system of so(N) with m_coords Cartan coordinates."""
    if m_coords == 0:
        return None
    if odd:
        return build_root_system("B", m_coords, _internal=True)
    if m_coords == 1:
        return None  # so(2) is a torus
    return build_root_system("D", m_coords, _internal=True)


def orthogonal_projection(n):
    """sl(n+1) restricted to so(n+1) by folding the ambient coordinates."""
    total = n + 1
    m = total // 2
    rows = []
    for i in range(m):
        row = [Fraction(0)] * total
        row[i] = Fraction(1)
        row[total - 1 - i] = Fraction(-1)
        rows.append(tuple(row))
    fac = _so_target(m, odd=(total % 2 == 1))
    if fac is None:
        target = ReductiveSystem((), m, name=f"so({total})")
    else:
        target = ReductiveSystem((fac,), 0, name=f"so({total})")
    return ProjectionMap(f"sl({total})|so({total})",
                         build_root_system("A", n), target, tuple(rows))


def symplectic_projection(m):
    """sl(2m) restricted to sp(m) by folding the ambient coordinates."""
    total = 2 * m
    rows = []
    for i in range(m):
        row = [Fraction(0)] * total
        row[i] = Fraction(1)
        row[total - 1 - i] = Fraction(-1)
        rows.append(tuple(row))
    fac = build_root_system("C", m, _internal=True)
    target = ReductiveSystem((fac,), 0, name=f"sp({m})")
    return ProjectionMap(f"sl({total})|sp({m})",
                         build_root_system("A", total - 1), target, tuple(rows))


def _gl_target(n):
    if n == 1:
        return ReductiveSystem((), 1, name="gl(1)")
    return ReductiveSystem((build_root_system("A", n - 1),), 1, name=f"gl({n})")


def _gl_rows(n):
    rows = []
    if n >= 2:
        rows += _centering_rows(n, 0, n)
    rows.append(_selector_row(n, range(n)))
    return rows


def gl_in_sp_projection(n):
    """sp(n) restricted to its Levi gl(n); the identity on coordinates."""
    return ProjectionMap(f"sp({n})|gl({n})", build_root_system("C", n),
                         _gl_target(n), tuple(_gl_rows(n)))


def gl_in_so_projection(n):
    """so(2n) restricted to its Levi gl(n); the identity on coordinates."""
    return ProjectionMap(f"so({2 * n})|gl({n})",
                         build_root_system("D", n, _internal=True),
                         _gl_target(n), tuple(_gl_rows(n)))


@lru_cache(maxsize=None)
def shipped_projection(kind, *params):
    """Look up one of the shipped projection families by kind and parameters.

    Kinds: "levi" (n, p); "orthogonal" (n); "symplectic" (m);
    "gl_in_sp" (n); "gl_in_so" (n).
    """
    factory = {
        "levi": levi_projection,
        "orthogonal": orthogonal_projection,
        "symplectic": symplectic_projection,
        "gl_in_sp": gl_in_sp_projection,
        "gl_in_so": gl_in_so_projection,
    }.get(kind)
    if factory is None:
        raise KeyError(f"unknown projection kind {kind!r}")
    return factory(*params)


# -- structured text records -------------------------------------------------

RECORD_HEADER = "# hwbranch projection records v1"


def render_projection_record(proj):
    lines = [f"pair {proj.name}"]
    lines.append(f"source {proj.source.family} {proj.source.rank}")
    for f in proj.target.factors:
        lines.append(f"factor {f.family} {f.rank}")
    lines.append(f"torus {proj.target.torus_rank}")
    for row in proj.matrix:
        lines.append("row " + " ".join(str(x) for x in row))
    lines.append("end")
    return "\n".join(lines)


def render_projection_records(projs):
    return "\n".join([RECORD_HEADER] + [render_projection_record(p) for p in projs])


def parse_projection_records(text):
    projs = []
    name = source = None
    factors, torus, rows = [], 0, []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        op, _, rest = line.partition(" ")
        if op == "pair":
            name, factors, rows, torus = rest, [], [], 0
        elif op == "source":
            fam, rk = rest.split()
            source = build_root_system(fam, int(rk), _internal=True)
        elif op == "factor":
            fam, rk = rest.split()
            factors.append(build_root_system(fam, int(rk), _internal=True))
        elif op == "torus":
            torus = int(rest)
        elif op == "row":
            rows.append(tuple(Fraction(x) for x in rest.split()))
        elif op == "end":
            target = ReductiveSystem(tuple(factors), torus)
            projs.append(ProjectionMap(name, source, target, tuple(rows)))
        else:
            raise ValueError(f"unknown record line {line!r}")
    return projs


def shipped_projection_records(max_rank=8):
    """All shipped projections with source rank <= max_rank, as text records."""
    projs = []
    for n in range(1, max_rank + 1):
        for p in range(1, n + 1):
            projs.append(levi_projection(n, p))
        projs.append(orthogonal_projection(n))
    for m in range(2, max_rank // 2 + 1):
        projs.append(symplectic_projection(m))
    for n in range(2, max_rank + 1):
        projs.append(gl_in_sp_projection(n))
    for n in range(3, max_rank + 1):
        projs.append(gl_in_so_projection(n))
    return render_projection_records(projs)
