"""Lower bounds on products of root distances over a graph, with certificates.

The central quantity is LHS = prod over edges of |v_i - v_j|. Every bound
variant produces a BoundReport whose right-hand side is the product of five
individually reported factors:

    sdisc_sqrt           |sDisc_{d-r}|^(1/2)
    mahler_power         M^(-(r-1))          (exponent varies by variant)
    edge_factor          (r/sqrt(3))^(-#E)   (exponent varies by variant)
    r_power              r^(-r/2)
    multiplicity_factor  (1/3)^(min(d, 2d-2r)/6)

LHS and RHS are computed as balls; the verdict "holds" requires the entire
LHS interval to sit above the entire RHS interval, so rounding can never
manufacture a violation. A failed separation is "inconclusive", never
"violated": callers escalate precision through `verify`.

The reduction certificate replays the determinant factorization that proves
the bound: starting from the Vandermonde matrix, each row with incoming
edges is replaced by the divided difference of the power basis over the
edge sources plus the vertex itself. The determinant identity
det W = det W_1 * prod(edge differences), the per-row norm bounds and the
Hadamard bound are all checked against the propagated radii.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import mpmath
from mpmath import mpf

from .balls import (
    CBall,
    RBall,
    ball_det,
    ball_product,
    ball_row_norm,
    working_precision,
)
from .divdiff import power_basis_row
from .errors import (
    BallDomainError,
    CertificationError,
    IndistinguishableRootsError,
    PreconditionError,
    RootsepError,
    ValidationError,
)
from .graph import RootGraph, check_classical_admissible, min_total_degree, orient
from .invariants import discriminant, mahler_measure, sdisc_abs_from_roots
from .poly import ExactPoly, NumericPoly
from .roots import RootSet, find_roots

COMPONENT_KEYS = (
    "sdisc_sqrt",
    "mahler_power",
    "edge_factor",
    "r_power",
    "multiplicity_factor",
)

VARIANTS = ("classical", "main", "remark_degree", "remark_pairs", "sep_product")


# ---------------------------------------------------------------------------
# auxiliary inequalities, checked exactly
# ---------------------------------------------------------------------------


def lemma_aux_check(d: int, r: int) -> tuple[mpf, mpf, mpf]:
    """The binomial-sum inequality chain for in-degree d and size r.

    Returns (lhs, mid, rhs) where
        lhs = (sum_{i=d}^{r-1} C(i,d)^2)^(1/2)
        mid = C(r-1,d) * ((r+d)/(2d+1))^(1/2)
        rhs = (r/sqrt(3))^d * r^(1/2)
    The chain lhs <= mid <= rhs is verified exactly on the squares before
    the floating values are returned.
    """
    if d < 0 or r < 1 or d > r - 1:
        raise PreconditionError(f"lemma_aux_check needs 0 <= d <= r-1, got d={d}, r={r}")
    lhs_sq = sum(comb(i, d) ** 2 for i in range(d, r))
    mid_sq = Fraction(comb(r - 1, d) ** 2 * (r + d), 2 * d + 1)
    rhs_sq = Fraction(r ** (2 * d + 1), 3**d)
    if not (lhs_sq <= mid_sq <= rhs_sq):  # pragma: no cover
        raise RootsepError(f"inequality chain failed at d={d}, r={r}")
    return (
        mpmath.sqrt(mpf(lhs_sq)),
        mpmath.sqrt(mpf(mid_sq.numerator) / mpf(mid_sq.denominator)),
        mpmath.sqrt(mpf(rhs_sq.numerator) / mpf(rhs_sq.denominator)),
    )


def multiplicity_product_bound(multiplicities) -> tuple[mpf, mpf]:
    """(prod m_i, 3^(min(d, 2d-2r)/3)) with the inequality verified exactly."""
    ms = list(multiplicities)
    if not ms or any((not isinstance(m, int)) or m < 1 for m in ms):
        raise ValidationError("multiplicities must be a nonempty list of positive integers")
    d = sum(ms)
    r = len(ms)
    mmin = min(d, 2 * d - 2 * r)
    product = 1
    for m in ms:
        product *= m
    if product**3 > 3**mmin:  # pragma: no cover
        raise RootsepError(f"multiplicity bound failed for {ms}")
    return mpf(product), mpmath.cbrt(mpf(3**mmin))


# ---------------------------------------------------------------------------
# Vandermonde reduction certificate
# ---------------------------------------------------------------------------


def vandermonde_matrix(roots: RootSet) -> list[list[CBall]]:
    """r x r matrix with row j = (1, v_j, ..., v_j^{r-1})."""
    r = roots.r
    rows = []
    for e in roots.entries:
        row = [CBall.one()]
        for _ in range(r - 1):
            row.append(row[-1] * e.value)
        rows.append(row)
    return rows


@dataclass(frozen=True)
class VandermondeCertificate:
    """The matrix sequence of the row-replacement reduction plus its checks.

    matrices[0] is the Vandermonde matrix; each later entry replaces one row
    (highest index first) by the divided difference of the power basis over
    the sources of the edges finishing there, so matrices[-1] is the fully
    reduced matrix. step_factors[i] is the product of (v_j - v_source) for
    the row replaced at step i (exact 1 for rows without incoming edges).
    """

    size: int
    graph: RootGraph
    matrices: tuple
    step_factors: tuple
    det_w: CBall
    det_w1: CBall
    edge_product: CBall
    row_norms: tuple
    row_norm_bounds: tuple
    hadamard_rhs: RBall
    precision_bits: int
    identity_rel_discrepancy: float

    def identity_certified(self) -> bool:
        return self.det_w.overlaps(self.det_w1 * self.edge_product)

    def hadamard_ok(self) -> bool:
        return self.det_w1.abs().lo <= self.hadamard_rhs.hi

    def rows_ok(self) -> bool:
        return all(
            n.lo <= b.hi for n, b in zip(self.row_norms, self.row_norm_bounds)
        )

    def to_json(self) -> dict:
        return {
            "det_w": self.det_w.to_json(),
            "det_w1": self.det_w1.to_json(),
            "step_factors": [f.to_json() for f in self.step_factors],
            "row_norms": [n.to_json() for n in self.row_norms],
            "row_norm_bounds": [b.to_json() for b in self.row_norm_bounds],
            "hadamard": self.hadamard_rhs.to_json(),
            "identity_rel_discrepancy": self.identity_rel_discrepancy,
        }


def _sqrt3() -> RBall:
    return RBall.exact(3).sqrt()


def _row_bound(roots: RootSet, j: int, in_degree: int) -> RBall:
    r = roots.r
    base = (RBall.exact(r) / _sqrt3()).powi(in_degree) * RBall.exact(r).sqrt()
    return base * roots.entries[j].value.abs().max1().powi(r - 1 - in_degree)


def row_norm_bound(cert: "VandermondeCertificate", roots: RootSet, j: int) -> tuple[RBall, RBall]:
    """(Euclidean norm of reduced row j, its closed-form bound)."""
    if not 0 <= j < roots.r:
        raise ValidationError(f"row index {j} out of range")
    return cert.row_norms[j], cert.row_norm_bounds[j]


def hadamard_bound(cert: "VandermondeCertificate", g: RootGraph, roots: RootSet) -> RBall:
    """(r/sqrt(3))^#E * r^(r/2) * prod max(1,|v_j|)^(r-1-d_j); contains |det W_1|."""
    with working_precision(cert.precision_bits):
        return hadamard_bound_direct(g, roots)


def reduce_vandermonde(roots: RootSet, g: RootGraph, precision: int | None = None) -> VandermondeCertificate:
    """Run the row-replacement reduction and certify its determinant identity.

    Raises CertificationError when the propagated radii cannot certify
    det W = det W_1 * prod(edge differences).
    """
    if g.vertex_count != roots.r:
        raise ValidationError(
            f"graph has {g.vertex_count} vertices but the root set has {roots.r}"
        )
    precision = precision if precision is not None else roots.precision_bits
    with working_precision(precision):
        r = roots.r
        vals = roots.values()
        w = vandermonde_matrix(roots)
        matrices = [tuple(tuple(row) for row in w)]
        current = [list(row) for row in w]
        step_factors = []
        for j in range(r - 1, 0, -1):
            sources = [a for a, _ in g.edges_into(j)]
            if sources:
                nodes = [vals[a] for a in sources] + [vals[j]]
                current[j] = power_basis_row(r, nodes)
                factor = ball_product([vals[j] - vals[a] for a in sources], CBall.one())
            else:
                factor = CBall.one()
            step_factors.append(factor)
            matrices.append(tuple(tuple(row) for row in current))
        w1 = current
        try:
            det_w = ball_det(w)
            det_w1 = ball_det(w1)
        except BallDomainError as exc:
            raise CertificationError(precision, str(exc)) from exc
        edge_product = ball_product(
            [vals[b] - vals[a] for a, b in g.oriented], CBall.one()
        )
        recombined = det_w1 * edge_product
        gap = abs(det_w.mid - recombined.mid)
        scale = max(abs(det_w.mid), abs(recombined.mid))
        rel = float(gap / scale) if scale > 0 else 0.0
        row_norms = tuple(ball_row_norm(row) for row in w1)
        row_bounds = tuple(_row_bound(roots, j, g.in_degrees[j]) for j in range(r))
        cert = VandermondeCertificate(
            size=r,
            graph=g,
            matrices=tuple(matrices),
            step_factors=tuple(step_factors),
            det_w=det_w,
            det_w1=det_w1,
            edge_product=edge_product,
            row_norms=row_norms,
            row_norm_bounds=row_bounds,
            hadamard_rhs=hadamard_bound_direct(g, roots),
            precision_bits=precision,
            identity_rel_discrepancy=rel,
        )
        if not cert.identity_certified():
            raise CertificationError(precision, "determinant identity not certified")
        return cert


def hadamard_bound_direct(g: RootGraph, roots: RootSet) -> RBall:
    r = roots.r
    acc = (RBall.exact(r) / _sqrt3()).powi(g.edge_count)
    acc = acc * RBall.exact(r**r).sqrt()
    for j in range(r):
        acc = acc * roots.entries[j].value.abs().max1().powi(r - 1 - g.in_degrees[j])
    return acc


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    variant: str
    lhs: RBall
    rhs: RBall
    components: dict
    margin: float
    verdict: str
    certificate: VandermondeCertificate | None
    precision_bits: int
    roots: RootSet | None = None
    graph: RootGraph | None = None
    extra: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def to_json(self, poly_repr=None) -> dict:
        out = {
            "variant": self.variant,
            "polynomial": {
                "input": poly_repr,
                "roots": self.roots.to_json() if self.roots else None,
                "degree": self.roots.total_degree if self.roots else None,
                "distinct_roots": self.roots.r if self.roots else None,
            },
            "graph": self.graph.to_json() if self.graph else None,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "components": {k: v.to_json() for k, v in self.components.items()},
            "certificate": self.certificate.to_json() if self.certificate else None,
            "margin": self.margin,
            "verdict": self.verdict,
            "precision_bits": self.precision_bits,
        }
        if self.extra:
            out["extra"] = {
                k: v for k, v in self.extra.items() if not k.startswith("_")
            }
        return out


@dataclass(frozen=True)
class ClusterHint:
    """Externally certified close pairs: (gamma, delta, Delta), Delta descending.

    Each pair promises |v_gamma - v_delta| <= (sqrt(3)/r)^(1 + Delta); the
    promise is re-validated against the certified root distances on
    construction.
    """

    pairs: tuple

    @staticmethod
    def build(pairs, roots: RootSet, precision: int | None = None) -> "ClusterHint":
        precision = precision if precision is not None else roots.precision_bits
        with working_precision(precision):
            r = roots.r
            base = _sqrt3() / RBall.exact(r)
            seen = set()
            checked = []
            for entry in pairs:
                gamma, delta, big_delta = entry
                if not (0 <= gamma < r and 0 <= delta < r) or gamma == delta:
                    raise ValidationError(f"hint pair ({gamma}, {delta}) is invalid")
                key = (min(gamma, delta), max(gamma, delta))
                if key in seen:
                    raise ValidationError(f"duplicate hint pair {key}")
                seen.add(key)
                dv = mpf(big_delta)
                if dv <= 0:
                    raise ValidationError("hint exponents must be positive")
                dist = roots.distance(gamma, delta)
                allowed = base.powr(1 + dv)
                if dist.hi > allowed.lo:
                    raise ValidationError(
                        f"hint pair ({gamma}, {delta}) violates its distance certificate"
                    )
                checked.append((gamma, delta, dv))
            checked.sort(key=lambda t: (-t[2], t[0], t[1]))
            return ClusterHint(tuple(checked))

    @property
    def k(self) -> int:
        return len(self.pairs)


# ---------------------------------------------------------------------------
# bound variants
# ---------------------------------------------------------------------------


def _as_graph(graph_or_edges, roots: RootSet) -> RootGraph:
    if isinstance(graph_or_edges, RootGraph):
        if graph_or_edges.vertex_count != roots.r:
            raise ValidationError(
                f"graph has {graph_or_edges.vertex_count} vertices, expected {roots.r}"
            )
        return graph_or_edges
    return orient(graph_or_edges, roots)


def _lhs_over_edges(roots: RootSet, g: RootGraph) -> RBall:
    return ball_product(
        [roots.distance(a, b) for a, b in g.oriented], RBall.one()
    )


def _mult_min_exponent(d: int, r: int) -> int:
    return min(d, 2 * d - 2 * r)


def _base_components(roots: RootSet, d: int, r: int, n_edges: int) -> dict:
    mmin = _mult_min_exponent(d, r)
    return {
        "sdisc_sqrt": sdisc_abs_from_roots(roots).sqrt(),
        "mahler_power": mahler_measure(roots).powi(-(r - 1)),
        "edge_factor": (RBall.exact(r) / _sqrt3()).powi(-n_edges),
        "r_power": RBall.one() / RBall.exact(r**r).sqrt(),
        "multiplicity_factor": RBall.one() / RBall.exact(3**mmin).root(6),
    }


def _finish(
    variant: str,
    lhs: RBall,
    components: dict,
    cert,
    precision: int,
    roots: RootSet,
    g: RootGraph | None,
    extra: dict,
    degenerate_holds: bool = False,
) -> BoundReport:
    rhs = ball_product(list(components.values()))
    margin = float(lhs.lo - rhs.hi)
    if degenerate_holds:
        verdict = "holds"
    elif extra.get("certificate_error"):
        verdict = "inconclusive"
    else:
        verdict = "holds" if margin >= 0 else "inconclusive"
    return BoundReport(
        variant=variant,
        lhs=lhs,
        rhs=rhs,
        components=components,
        margin=margin,
        verdict=verdict,
        certificate=cert,
        precision_bits=precision,
        roots=roots,
        graph=g,
        extra=extra,
    )


def _certificate(roots, g, precision, extra) -> VandermondeCertificate | None:
    try:
        return reduce_vandermonde(roots, g, precision)
    except CertificationError as exc:
        extra["certificate_error"] = str(exc)
        return None


def _degree_and_r(p, roots: RootSet) -> tuple[int, int]:
    return roots.total_degree, roots.r


def bound_main(p, graph_or_edges, precision: int = 128, roots: RootSet | None = None) -> BoundReport:
    """The generalized bound for an arbitrary graph on the roots.

    A single distinct root is a degenerate success: the product over edges is
    empty and the inequality is immediate.
    """
    if roots is None:
        roots = find_roots(p, precision)
    with working_precision(precision):
        g = _as_graph(graph_or_edges, roots)
        d, r = _degree_and_r(p, roots)
        extra: dict = {}
        cert = _certificate(roots, g, precision, extra)
        lhs = _lhs_over_edges(roots, g)
        components = _base_components(roots, d, r, g.edge_count)
        if r == 1:
            extra["degenerate"] = "single distinct root"
        return _finish(
            "main", lhs, components, cert, precision, roots, g, extra,
            degenerate_holds=(r == 1),
        )


def bound_classical(p, graph_or_edges, precision: int = 128, roots: RootSet | None = None) -> BoundReport:
    """The classical bound: square-free polynomials, in-degree at most 1.

    Preconditions are checked exactly: the polynomial must be exact and
    square-free, and the oriented graph must satisfy the in-degree cap.
    """
    if not isinstance(p, ExactPoly):
        raise PreconditionError(
            "the classical bound checks square-freeness exactly and needs exact coefficients"
        )
    if roots is None:
        roots = find_roots(p, precision)
    with working_precision(precision):
        g = _as_graph(graph_or_edges, roots)
        d = p.degree
        if roots.r != d:
            raise PreconditionError(
                "Disc(P) vanishes: the polynomial is not square-free"
            )
        cond1, cond2, cond3 = check_classical_admissible(g)
        if not cond1:  # pragma: no cover - orientation makes this impossible
            raise PreconditionError("condition 1 fails: an edge runs against the modulus order")
        if not cond2:  # pragma: no cover
            raise PreconditionError("condition 2 fails: the oriented graph has a cycle")
        if not cond3:
            worst = max(range(g.vertex_count), key=lambda j: g.in_degrees[j])
            raise PreconditionError(
                f"condition 3 fails: vertex {worst} has in-degree {g.in_degrees[worst]} > 1"
            )
        extra: dict = {}
        cert = _certificate(roots, g, precision, extra)
        lhs = _lhs_over_edges(roots, g)
        if d == 1:
            components = _base_components(roots, d, 1, g.edge_count)
            extra["degenerate"] = "single distinct root"
            return _finish("classical", lhs, components, cert, precision, roots, g, extra, True)
        disc = discriminant(p)
        disc_abs = (
            RBall.exact(abs(disc.re)) if disc.is_real else RBall.exact(disc.norm()).sqrt()
        )
        components = {
            "sdisc_sqrt": disc_abs.sqrt(),
            "mahler_power": mahler_measure(roots).powi(-(d - 1)),
            "edge_factor": (RBall.exact(d) / _sqrt3()).powi(-g.edge_count),
            "r_power": RBall.one() / RBall.exact(d**d).sqrt(),
            "multiplicity_factor": RBall.one(),
        }
        return _finish("classical", lhs, components, cert, precision, roots, g, extra)


def bound_remark_degree(p, graph_or_edges, precision: int = 128, roots: RootSet | None = None) -> BoundReport:
    """Variant for monic polynomials: the Mahler exponent improves by half the
    minimum total degree of the graph."""
    if isinstance(p, ExactPoly):
        monic = not p.is_zero and p.leading == 1
    elif isinstance(p, NumericPoly):
        monic = p.leading == 1
    else:
        raise TypeError(f"cannot bound {type(p).__name__}")
    if not monic:
        raise PreconditionError("this variant requires a monic polynomial (leading coefficient exactly 1)")
    if roots is None:
        roots = find_roots(p, precision)
    with working_precision(precision):
        g = _as_graph(graph_or_edges, roots)
        d, r = _degree_and_r(p, roots)
        dtilde = min_total_degree(g)
        extra: dict = {"min_total_degree": dtilde}
        cert = _certificate(roots, g, precision, extra)
        lhs = _lhs_over_edges(roots, g)
        components = _base_components(roots, d, r, g.edge_count)
        exponent = -(r - 1) + mpf(dtilde) / 2
        if exponent == 0:
            components["mahler_power"] = RBall.one()
        else:
            components["mahler_power"] = mahler_measure(roots).powr(exponent)
        if r == 1:
            extra["degenerate"] = "single distinct root"
        return _finish(
            "remark_degree", lhs, components, cert, precision, roots, g, extra,
            degenerate_holds=(r == 1),
        )


def bound_remark_pairs(
    p,
    graph_or_edges,
    hints,
    precision: int = 128,
    roots: RootSet | None = None,
) -> BoundReport:
    """Variant using externally certified close pairs to improve the edge factor.

    With k validated pairs and #E < k, the edge-factor exponent becomes
    -#E + (sum of the k - #E smallest hint exponents).
    """
    if roots is None:
        roots = find_roots(p, precision)
    with working_precision(precision):
        g = _as_graph(graph_or_edges, roots)
        d, r = _degree_and_r(p, roots)
        if r <= 2:
            raise PreconditionError(f"this variant requires r > 2 distinct roots, got r={r}")
        if not isinstance(hints, ClusterHint):
            hints = ClusterHint.build(hints, roots, precision)
        k = hints.k
        n_edges = g.edge_count
        if n_edges >= k:
            raise PreconditionError(
                f"this variant requires #E < k, got #E={n_edges}, k={k}"
            )
        extra_exponent = mpf(0)
        for _, _, dv in hints.pairs[n_edges:]:
            extra_exponent += dv
        extra: dict = {
            "hint_pairs": [[a, b, float(dv)] for a, b, dv in hints.pairs],
            "edge_exponent": float(-n_edges + extra_exponent),
        }
        cert = _certificate(roots, g, precision, extra)
        lhs = _lhs_over_edges(roots, g)
        components = _base_components(roots, d, r, n_edges)
        components["edge_factor"] = (RBall.exact(r) / _sqrt3()).powr(
            -n_edges + extra_exponent
        )
        return _finish("remark_pairs", lhs, components, cert, precision, roots, g, extra)


def bound_sep_product(p, subset, precision: int = 128, roots: RootSet | None = None) -> BoundReport:
    """Lower bound on prod over a subset of roots of the distance to the
    nearest different root.

    Internally builds the nearest-neighbor multiset over the subset, splits
    it into the support E0 and the doubly occurring edges E1 (an edge can
    occur at most twice, once per endpoint), and composes the main bound for
    both graphs; #E0 + #E1 equals the subset size.
    """
    if roots is None:
        roots = find_roots(p, precision)
    with working_precision(precision):
        r = roots.r
        if r < 2:
            raise PreconditionError("sep products need at least 2 distinct roots")
        subset = sorted(set(subset))
        for v in subset:
            if not isinstance(v, int) or not 0 <= v < r:
                raise ValidationError(f"subset index {v!r} out of range 0..{r - 1}")
        d = roots.total_degree
        counts: dict[tuple[int, int], int] = {}
        seps = []
        for v in subset:
            partner, dist = roots.nearest_partner(v)
            key = (min(v, partner), max(v, partner))
            counts[key] = counts.get(key, 0) + 1
            seps.append(dist)
        e0 = sorted(counts)
        e1 = sorted(k for k, c in counts.items() if c == 2)
        if len(e0) + len(e1) != len(subset):  # pragma: no cover
            raise RootsepError("edge split does not match the subset size")
        sub0 = bound_main(p, e0, precision, roots=roots)
        sub1 = bound_main(p, e1, precision, roots=roots)
        lhs = ball_product(seps, RBall.one())
        mmin = _mult_min_exponent(d, r)
        sdisc = sdisc_abs_from_roots(roots)
        mahler = mahler_measure(roots)
        components = {
            "sdisc_sqrt": sdisc,
            "mahler_power": mahler.powi(-2 * (r - 1)),
            "edge_factor": (RBall.exact(r) / _sqrt3()).powi(-len(subset)),
            "r_power": RBall.one() / RBall.exact(r**r),
            "multiplicity_factor": RBall.one() / RBall.exact(3**mmin).root(3),
        }
        extra = {
            "subset": subset,
            "e0": [list(e) for e in e0],
            "e1": [list(e) for e in e1],
            "split_identity": len(e0) + len(e1) == len(subset),
            "subreports": [sub0.to_json(), sub1.to_json()],
            "_subreports_obj": (sub0, sub1),
        }
        if sub0.extra.get("certificate_error") or sub1.extra.get("certificate_error"):
            extra["certificate_error"] = "component certificate inconclusive"
        return _finish(
            "sep_product", lhs, components, None, precision, roots, None, extra,
            degenerate_holds=(len(subset) == 0),
        )


_DISPATCH = {
    "classical": bound_classical,
    "main": bound_main,
    "remark_degree": bound_remark_degree,
    "remark_pairs": bound_remark_pairs,
    "sep_product": bound_sep_product,
}


def verify(
    p,
    graph_or_edges,
    variant: str = "main",
    precision: int = 128,
    ceiling: int = 1024,
    hints=None,
    subset=None,
) -> BoundReport:
    """Run a bound variant, escalating precision while the verdict is
    inconclusive. Input errors propagate; certification problems never crash
    and surface as an inconclusive report at the ceiling."""
    if variant not in _DISPATCH:
        raise ValidationError(
            f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}"
        )
    if ceiling < precision:
        ceiling = precision
    prec = precision
    last_error: Exception | None = None
    while True:
        try:
            if variant == "remark_pairs":
                if hints is None:
                    raise ValidationError("remark_pairs requires hint pairs")
                report = bound_remark_pairs(p, graph_or_edges, hints, prec)
            elif variant == "sep_product":
                if subset is None:
                    raise ValidationError("sep_product requires a root subset")
                report = bound_sep_product(p, subset, prec)
            else:
                report = _DISPATCH[variant](p, graph_or_edges, prec)
            last_error = None
        except (IndistinguishableRootsError, CertificationError, BallDomainError) as exc:
            last_error = exc
            report = None
        if report is not None and report.verdict == "holds":
            return report
        if prec >= ceiling:
            if report is not None:
                return report
            return BoundReport(
                variant=variant,
                lhs=RBall.exact(0),
                rhs=RBall.exact(0),
                components={},
                margin=0.0,
                verdict="inconclusive",
                certificate=None,
                precision_bits=prec,
                roots=None,
                graph=None,
                extra={"error": str(last_error)},
            )
        prec *= 2
