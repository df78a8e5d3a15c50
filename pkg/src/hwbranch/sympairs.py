"""Classification tables for symmetric pairs and the pan-type criterion.

The tables are stored as structured records (algebra names are typed values
with affine-expression parameters, never free strings), so parametrized rows
can be instantiated and validated.  Pan nodes are always recomputed from
highest-root coefficients; the published lists are kept alongside as an
independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import build_root_system, highest_root_coefficients

HOLOMORPHIC = "holomorphic"
ANTIHOLOMORPHIC = "antiholomorphic"


# ---------------------------------------------------------------------------
# affine expressions in named parameters


@dataclass(frozen=True)
class Lin:
    """Affine integer expression in named parameters, e.g. 2n - 2p."""

    const: int = 0
    coeffs: tuple = ()  # sorted tuple of (name, coefficient)

    def __add__(self, other):
        other = lin(other)
        d = dict(self.coeffs)
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return Lin(self.const + other.const,
                   tuple(sorted((k, v) for k, v in d.items() if v)))

    def __sub__(self, other):
        return self + (lin(other) * -1)

    def __mul__(self, k):
        return Lin(self.const * k, tuple((n, c * k) for n, c in self.coeffs))

    __radd__ = __add__
    __rmul__ = __mul__

    def eval(self, **params):
        v = self.const
        for name, c in self.coeffs:
            if name not in params:
                raise KeyError(f"parameter {name!r} not supplied")
            v += c * params[name]
        return v

    def render(self):
        parts = []
        for name, c in self.coeffs:
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}{name}")
        if self.const or not parts:
            parts.append(str(self.const))
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __str__(self):
        return self.render()


def lin(x):
    if isinstance(x, Lin):
        return x
    if isinstance(x, int):
        return Lin(x)
    if isinstance(x, str):
        return Lin(0, ((x, 1),))
    raise TypeError(f"cannot coerce {x!r} to a parameter expression")


N, P, Q, I, J, M = (lin(s) for s in "npqijm")


@dataclass(frozen=True)
class Constraint:
    lhs: Lin
    op: str  # "<=", "<", "=="
    rhs: Lin

    def holds(self, **params):
        a, b = self.lhs.eval(**params), self.rhs.eval(**params)
        return {"<=": a <= b, "<": a < b, "==": a == b}[self.op]

    def render(self):
        return f"{self.lhs} {self.op} {self.rhs}"


def c_le(a, b):
    return Constraint(lin(a), "<=", lin(b))


# ---------------------------------------------------------------------------
# structured algebra names

_RENDER = {
    "su": lambda a: f"su({_args(a)})",
    "u": lambda a: f"u({_args(a)})",
    "so": lambda a: f"so({_args(a)})",
    "so*": lambda a: f"so*({_args(a)})",
    "spR": lambda a: f"sp({_args(a)},R)",
    "sp": lambda a: f"sp({_args(a)})",
    "slR": lambda a: f"sl({_args(a)},R)",
    "slC": lambda a: f"sl({_args(a)},C)",
    "glR": lambda a: f"gl({_args(a)},R)",
    "glC": lambda a: f"gl({_args(a)},C)",
    "spC": lambda a: f"sp({_args(a)},C)",
    "soC": lambda a: f"so({_args(a)},C)",
    "su*": lambda a: f"su*({_args(a)})",
    "R": lambda a: "R",
    "C": lambda a: "C",
    "e6": lambda a: f"e6({_args(a)})",
    "e7": lambda a: f"e7({_args(a)})",
    "f4": lambda a: f"f4({_args(a)})",
    "e6C": lambda a: "e6",
    "e7C": lambda a: "e7",
    "f4C": lambda a: "f4",
}


def _args(args):
    return ",".join(str(x) for x in args)


@dataclass(frozen=True)
class AlgebraTerm:
    """One factor of an algebra name: kind plus affine-expression arguments."""

    kind: str
    args: tuple = ()

    def render(self):
        return _RENDER[self.kind](self.args)

    def instantiate(self, **params):
        return AlgebraTerm(self.kind,
                           tuple(lin(a).eval(**params) for a in self.args))

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class AlgebraSum:
    """A direct sum of terms; `traceless` marks an s(...) determinant condition."""

    terms: tuple
    traceless: bool = False

    def render(self):
        body = "+".join(t.render() for t in self.terms)
        return f"s({body})" if self.traceless else body

    def instantiate(self, **params):
        return AlgebraSum(tuple(t.instantiate(**params) for t in self.terms),
                          self.traceless)

    def __str__(self):
        return self.render()


def alg(kind, *args):
    return AlgebraTerm(kind, tuple(lin(a) for a in args))


def asum(*terms, traceless=False):
    return AlgebraSum(tuple(terms), traceless)


@dataclass(frozen=True)
class RankExpr:
    """Rank column entry: an affine expression, a min, or a floor-half."""

    kind: str  # "lin" | "min" | "floor_half"
    args: tuple

    def eval(self, **params):
        if self.kind == "lin":
            return self.args[0].eval(**params)
        if self.kind == "min":
            return min(a.eval(**params) for a in self.args)
        if self.kind == "floor_half":
            return self.args[0].eval(**params) // 2
        raise ValueError(self.kind)

    def render(self):
        if self.kind == "lin":
            return str(self.args[0])
        if self.kind == "min":
            return f"min({','.join(str(a) for a in self.args)})"
        return f"[{self.args[0]}/2]"

    def __str__(self):
        return self.render()


def rk_min(a, b):
    return RankExpr("min", (lin(a), lin(b)))


def rk(a):
    return RankExpr("lin", (lin(a),))


def rk_floor_half(a):
    return RankExpr("floor_half", (lin(a),))


@dataclass(frozen=True)
class SymmetricPairRecord:
    g_label: AlgebraTerm
    h_label: AlgebraSum
    involution_type: str
    params: tuple = ()
    constraints: tuple = ()
    rank_value: RankExpr = None
    notes: str = ""
    antiholomorphic_match: tuple = None  # (row index in the anti-holo table, subst)

    def instantiate(self, **params):
        for c in self.constraints:
            if not c.holds(**params):
                raise ValueError(f"constraint {c.render()} fails for {params}")
        return (self.g_label.instantiate(**params),
                self.h_label.instantiate(**params))

    def to_dict(self):
        d = {
            "g": self.g_label.render(),
            "h": self.h_label.render(),
            "involution_type": self.involution_type,
            "params": list(self.params),
            "constraints": [c.render() for c in self.constraints],
        }
        if self.rank_value is not None:
            d["rank"] = self.rank_value.render()
        if self.notes:
            d["notes"] = self.notes
        return d


_HOLOMORPHIC_TABLE = (
    SymmetricPairRecord(
        alg("su", P, Q),
        asum(alg("u", I, J), alg("u", P - I, Q - J), traceless=True),
        HOLOMORPHIC, ("p", "q", "i", "j"),
        (c_le(0, I), c_le(I, P), c_le(0, J), c_le(J, Q), c_le(1, P), c_le(1, Q))),
    SymmetricPairRecord(alg("su", N, N), asum(alg("so*", N * 2)),
                        HOLOMORPHIC, ("n",), (c_le(1, N),)),
    SymmetricPairRecord(alg("su", N, N), asum(alg("spR", N)),
                        HOLOMORPHIC, ("n",), (c_le(1, N),)),
    SymmetricPairRecord(
        alg("so*", N * 2), asum(alg("so*", P * 2), alg("so*", N * 2 - P * 2)),
        HOLOMORPHIC, ("n", "p"), (c_le(0, P), c_le(P, N))),
    SymmetricPairRecord(alg("so*", N * 2), asum(alg("u", P, N - P)),
                        HOLOMORPHIC, ("n", "p"), (c_le(0, P), c_le(P, N))),
    SymmetricPairRecord(
        alg("so", 2, N), asum(alg("so", 2, P), alg("so", N - P)),
        HOLOMORPHIC, ("n", "p"), (c_le(0, P), c_le(P, N))),
    SymmetricPairRecord(alg("so", 2, N * 2), asum(alg("u", 1, N)),
                        HOLOMORPHIC, ("n",), (c_le(1, N),)),
    SymmetricPairRecord(alg("spR", N), asum(alg("u", P, N - P)),
                        HOLOMORPHIC, ("n", "p"), (c_le(0, P), c_le(P, N))),
    SymmetricPairRecord(
        alg("spR", N), asum(alg("spR", P), alg("spR", N - P)),
        HOLOMORPHIC, ("n", "p"), (c_le(0, P), c_le(P, N))),
    SymmetricPairRecord(alg("e6", -14), asum(alg("so", 10), alg("so", 2)),
                        HOLOMORPHIC),
    SymmetricPairRecord(alg("e6", -14), asum(alg("so*", 10), alg("so", 2)),
                        HOLOMORPHIC),
    SymmetricPairRecord(alg("e6", -14), asum(alg("so", 8, 2), alg("so", 2)),
                        HOLOMORPHIC),
    SymmetricPairRecord(alg("e6", -14), asum(alg("su", 5, 1), alg("slR", 2)),
                        HOLOMORPHIC),
    SymmetricPairRecord(alg("e6", -14), asum(alg("su", 4, 2), alg("su", 2)),
                        HOLOMORPHIC),
    SymmetricPairRecord(alg("e7", -25), asum(alg("e6", -78), alg("so", 2)),
                        HOLOMORPHIC),
    SymmetricPairRecord(alg("e7", -25), asum(alg("e6", -14), alg("so", 2)),
                        HOLOMORPHIC),
    SymmetricPairRecord(alg("e7", -25), asum(alg("so", 10, 2), alg("slR", 2)),
                        HOLOMORPHIC),
    SymmetricPairRecord(alg("e7", -25), asum(alg("so*", 12), alg("su", 2)),
                        HOLOMORPHIC),
    SymmetricPairRecord(alg("e7", -25), asum(alg("su", 6, 2)),
                        HOLOMORPHIC),
)

_ANTIHOLOMORPHIC_TABLE = (
    SymmetricPairRecord(alg("su", P, Q), asum(alg("so", P, Q)),
                        ANTIHOLOMORPHIC, ("p", "q"), (c_le(1, P), c_le(1, Q))),
    SymmetricPairRecord(alg("su", N, N), asum(alg("slC", N), alg("R")),
                        ANTIHOLOMORPHIC, ("n",), (c_le(1, N),)),
    SymmetricPairRecord(alg("su", P * 2, Q * 2), asum(alg("sp", P, Q)),
                        ANTIHOLOMORPHIC, ("p", "q"), (c_le(1, P), c_le(1, Q))),
    SymmetricPairRecord(alg("so*", N * 2), asum(alg("soC", N)),
                        ANTIHOLOMORPHIC, ("n",), (c_le(2, N),)),
    SymmetricPairRecord(alg("so*", N * 4), asum(alg("su*", N * 2), alg("R")),
                        ANTIHOLOMORPHIC, ("n",), (c_le(1, N),)),
    SymmetricPairRecord(
        alg("so", 2, N), asum(alg("so", 1, P), alg("so", 1, N - P)),
        ANTIHOLOMORPHIC, ("n", "p"), (c_le(0, P), c_le(P, N))),
    SymmetricPairRecord(alg("spR", N), asum(alg("glR", N)),
                        ANTIHOLOMORPHIC, ("n",), (c_le(1, N),)),
    SymmetricPairRecord(alg("spR", N * 2), asum(alg("spC", N)),
                        ANTIHOLOMORPHIC, ("n",), (c_le(1, N),)),
    SymmetricPairRecord(alg("e6", -14), asum(alg("f4", -20)), ANTIHOLOMORPHIC),
    SymmetricPairRecord(alg("e6", -14), asum(alg("sp", 2, 2)), ANTIHOLOMORPHIC),
    SymmetricPairRecord(alg("e7", -25),
                        asum(alg("e6", -26), alg("so", 1, 1)), ANTIHOLOMORPHIC),
    SymmetricPairRecord(alg("e7", -25), asum(alg("su*", 8)), ANTIHOLOMORPHIC),
)

_RANK_EQUAL_TABLE = (
    SymmetricPairRecord(alg("su", P, Q), asum(alg("so", P, Q)),
                        ANTIHOLOMORPHIC, ("p", "q"),
                        (c_le(1, P), c_le(1, Q)), rk_min(P, Q),
                        antiholomorphic_match=(0, {})),
    SymmetricPairRecord(alg("so*", N * 2), asum(alg("soC", N)),
                        ANTIHOLOMORPHIC, ("n",),
                        (c_le(2, N),), rk_floor_half(N),
                        antiholomorphic_match=(3, {})),
    SymmetricPairRecord(alg("spR", N), asum(alg("glR", N)),
                        ANTIHOLOMORPHIC, ("n",), (c_le(1, N),), rk(N),
                        antiholomorphic_match=(6, {})),
    SymmetricPairRecord(alg("so", 2, N),
                        asum(alg("so", 1, N - 1), alg("so", 1, 1)),
                        ANTIHOLOMORPHIC, ("n",), (c_le(1, N),), rk_min(2, N),
                        antiholomorphic_match=(5, {"p": N - 1})),
    SymmetricPairRecord(alg("e6", -14), asum(alg("sp", 2, 2)),
                        ANTIHOLOMORPHIC, (), (), rk(2),
                        antiholomorphic_match=(9, {})),
    SymmetricPairRecord(alg("e7", -25), asum(alg("su*", 8)),
                        ANTIHOLOMORPHIC, (), (), rk(3),
                        antiholomorphic_match=(11, {}),
                        notes=("the fixed-point algebra is not unique; "
                               "e6(-26)+R satisfies the same rank conditions")),
)


def holomorphic_pairs(g=None):
    """Rows of the holomorphic-type classification table."""
    return _filter_by_g(_HOLOMORPHIC_TABLE, g)


def antiholomorphic_pairs(g=None):
    """Rows of the anti-holomorphic-type classification table."""
    return _filter_by_g(_ANTIHOLOMORPHIC_TABLE, g)


def rank_equal_pairs():
    """Rows whose fixed-point algebra preserves the real rank."""
    return list(_RANK_EQUAL_TABLE)


def _filter_by_g(table, g):
    if g is None:
        return list(table)
    return [r for r in table if r.g_label.render() == str(g)
            or r.g_label.kind == str(g)]


# ---------------------------------------------------------------------------
# pan nodes


@dataclass(frozen=True)
class PanNode:
    family: str
    rank: int
    index: int  # 1-based node index
    is_pan: bool
    levi_label: AlgebraSum = None


def _levi_for(family, rank, i):
    """Levi factor of the maximal parabolic at node i, for pan nodes."""
    if family == "A":
        return asum(alg("slC", i), alg("slC", rank + 1 - i), alg("C"))
    if family == "B" and i == 1:
        return asum(alg("soC", 2 * rank - 1), alg("C"))
    if family == "C" and i == rank:
        return asum(alg("glC", rank))
    if family == "D" and i == 1:
        return asum(alg("soC", 2 * rank - 2), alg("C"))
    if family == "D" and i in (rank - 1, rank):
        return asum(alg("glC", rank))
    if family == "E6" and i in (1, 6):
        return asum(alg("soC", 10), alg("C"))
    if family == "E7" and i == 7:
        return asum(alg("e6C"), alg("C"))
    return None


def dynkin_nodes(family, rank=None):
    """All nodes of the Dynkin diagram with the computed pan property."""
    sys = build_root_system(family, rank)
    coeffs = highest_root_coefficients(sys)
    nodes = []
    for i, c in enumerate(coeffs, start=1):
        is_pan = c == 1
        nodes.append(PanNode(sys.family, sys.rank, i, is_pan,
                             _levi_for(sys.family, sys.rank, i) if is_pan else None))
    return nodes


def pan_nodes(family, rank=None):
    """Nodes whose simple root has coefficient one in the highest root."""
    return [n for n in dynkin_nodes(family, rank) if n.is_pan]


def pan_node_table(family, rank):
    """The published pan-node lists, kept independent of the computation."""
    if family == "A":
        return list(range(1, rank + 1))
    if family == "B":
        return [1]
    if family == "C":
        return [rank]
    if family == "D":
        return [1, rank - 1, rank]
    if family == "E6":
        return [1, 6]
    if family == "E7":
        return [7]
    if family in ("E8", "F4", "G2"):
        return []
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# multiplicity-free restriction table


@dataclass(frozen=True)
class MfRestrictionRow:
    gc_label: AlgebraTerm
    hc_label: AlgebraSum
    nodes: tuple  # of Lin
    params: tuple = ()
    constraints: tuple = ()
    projection: tuple = None  # (kind, arg names) for the shipped oracle data

    def node_indices(self, **params):
        return sorted({lin(x).eval(**params) for x in self.nodes})

    def gc_type(self, **params):
        kind = self.gc_label.kind
        arg = lin(self.gc_label.args[0]).eval(**params) if self.gc_label.args else None
        if kind == "slC":
            return "A", arg - 1
        if kind == "soC":
            return ("B", (arg - 1) // 2) if arg % 2 else ("D", arg // 2)
        if kind == "spC":
            return "C", arg
        if kind == "e6C":
            return "E6", 6
        if kind == "e7C":
            return "E7", 7
        raise ValueError(kind)

    def to_dict(self):
        if self.nodes and self.nodes[0] == "ALL":
            nodes = [f"1..{self.nodes[1]}"]
        else:
            nodes = [str(x) for x in self.nodes]
        return {
            "g": self.gc_label.render(),
            "h": self.hc_label.render(),
            "nodes": nodes,
            "params": list(self.params),
            "constraints": [c.render() for c in self.constraints],
            "oracle": "shipped" if self.projection else "unsupported",
        }


def _nodes_all(upto):
    return ("ALL", lin(upto))


_MF_TABLE = (
    MfRestrictionRow(alg("slC", N + 1),
                     asum(alg("slC", P), alg("slC", N + 1 - P), alg("C")),
                     _nodes_all(N), ("n", "p"),
                     (c_le(1, P), c_le(P, N)), ("levi", ("n", "p"))),
    MfRestrictionRow(alg("slC", N + 1), asum(alg("soC", N + 1)),
                     _nodes_all(N), ("n",), (c_le(1, N),),
                     ("orthogonal", ("n",))),
    MfRestrictionRow(alg("slC", M * 2), asum(alg("spC", M)),
                     _nodes_all(M * 2 - 1), ("m",), (c_le(2, M),),
                     ("symplectic", ("m",))),
    MfRestrictionRow(alg("soC", N * 2 + 1),
                     asum(alg("soC", P), alg("soC", N * 2 + 1 - P)),
                     (lin(1),), ("n", "p"), (c_le(2, N), c_le(1, P), c_le(P, N * 2))),
    MfRestrictionRow(alg("spC", N), asum(alg("spC", P), alg("spC", N - P)),
                     (N,), ("n", "p"), (c_le(2, N), c_le(1, P), c_le(P, N - 1))),
    MfRestrictionRow(alg("spC", N), asum(alg("glC", N)),
                     (N,), ("n",), (c_le(2, N),), ("gl_in_sp", ("n",))),
    MfRestrictionRow(alg("soC", N * 2),
                     asum(alg("soC", P), alg("soC", N * 2 - P)),
                     (lin(1), N - 1, N), ("n", "p"),
                     (c_le(3, N), c_le(1, P), c_le(P, N * 2 - 1))),
    MfRestrictionRow(alg("soC", N * 2), asum(alg("glC", N)),
                     (lin(1), N - 1, N), ("n",), (c_le(3, N),),
                     ("gl_in_so", ("n",))),
    MfRestrictionRow(alg("e6C"), asum(alg("soC", 10), alg("soC", 2)),
                     (lin(1), lin(6))),
    MfRestrictionRow(alg("e6C"), asum(alg("slC", 6), alg("slC", 2)),
                     (lin(1), lin(6))),
    MfRestrictionRow(alg("e6C"), asum(alg("f4C")), (lin(1), lin(6))),
    MfRestrictionRow(alg("e6C"), asum(alg("spC", 4)), (lin(1), lin(6))),
    MfRestrictionRow(alg("e7C"), asum(alg("e6C"), alg("soC", 2)), (lin(7),)),
    MfRestrictionRow(alg("e7C"), asum(alg("soC", 12), alg("slC", 2)), (lin(7),)),
    MfRestrictionRow(alg("e7C"), asum(alg("slC", 8)), (lin(7),)),
)


def mf_restriction_table():
    """Triples (g_C, h_C, node indices) admitting multiplicity-free restriction."""
    return list(_MF_TABLE)


@dataclass(frozen=True)
class MfCase:
    """One concrete instance of a restriction-table row."""

    row: MfRestrictionRow
    params: tuple  # sorted (name, value) pairs
    family: str
    rank: int
    nodes: tuple
    projection_args: tuple = None  # (kind, args) or None

    @property
    def name(self):
        g = self.row.gc_label.instantiate(**dict(self.params)).render()
        h = self.row.hc_label.instantiate(**dict(self.params)).render()
        return f"{g}|{h}"


def instantiate_mf_row(row, **params):
    for c in row.constraints:
        if not c.holds(**params):
            raise ValueError(f"constraint {c.render()} fails for {params}")
    family, rank = row.gc_type(**params)
    if row.nodes and row.nodes[0] == "ALL":
        nodes = tuple(range(1, lin(row.nodes[1]).eval(**params) + 1))
    else:
        nodes = tuple(row.node_indices(**params))
    proj = None
    if row.projection is not None:
        kind, argnames = row.projection
        proj = (kind, tuple(params[a] for a in argnames))
    return MfCase(row, tuple(sorted(params.items())), family, rank, nodes, proj)


def enumerate_mf_cases(max_rank):
    """All concrete restriction-table instances with rank(g) <= max_rank."""
    cases = []
    for row in _MF_TABLE:
        names = set(row.params)
        if not names:
            family, _ = row.gc_type()
            if build_root_system(family, None).rank <= max_rank:
                cases.append(instantiate_mf_row(row))
            continue
        for n in range(1, max_rank + 3):
            main = "n" if "n" in names else "m"
            try:
                family, rank = row.gc_type(**{main: n})
            except ValueError:
                continue
            if rank > max_rank:
                continue
            free = sorted(names - {main})
            if not free:
                try:
                    cases.append(instantiate_mf_row(row, **{main: n}))
                except ValueError:
                    pass
                continue
            assert free == ["p"]
            for p in range(0, 2 * n + 2):
                try:
                    cases.append(instantiate_mf_row(row, **{main: n, "p": p}))
                except ValueError:
                    pass
    return cases


def export_tables():
    """All classification tables as plain records (documented schema)."""
    return {
        "holomorphic_pairs": [r.to_dict() for r in _HOLOMORPHIC_TABLE],
        "antiholomorphic_pairs": [r.to_dict() for r in _ANTIHOLOMORPHIC_TABLE],
        "rank_equal_pairs": [r.to_dict() for r in _RANK_EQUAL_TABLE],
        "mf_restrictions": [r.to_dict() for r in _MF_TABLE],
        "pan_nodes": {
            f"{fam}{rk}": pan_node_table(fam, rk)
            for fam, rk in [("A", 8), ("B", 8), ("C", 8), ("D", 8),
                            ("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)]
        },
    }
