"""Coboundary Lie-bialgebra operators.

Cocommutators delta(X) = ad_X(r), the algebraic Schouten bracket [[r,r]],
Yang-Baxter verdicts, sub-bialgebra/coisotropy predicates, primitive-generator
detection and the boost-eigenvalue ("goodness") grading.

Conventions.  A wedge r = sum_{i<j} r^{ij} e_i ^ e_j is embedded in the tensor
square as sum r^{ij} (e_i x e_j - e_j x e_i), i.e. full antisymmetrisation
without a 1/2; with this convention the coboundary cocommutator reproduces the
published component lists exactly.  The Schouten bracket is computed in two
independent ways: a sparse accumulation that only ever reads strictly
increasing slots, and a dense tensor-cube oracle that forms the three bracket
terms and antisymmetrises explicitly.  The two must agree; a property test
locks this.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .liealg import LieAlgebra, Subalgebra, WedgeElement
from .scalars import Scalar


@dataclass
class Cocommutator:
    """Images delta(e_i) of every basis generator, each a degree-2 wedge."""

    algebra: LieAlgebra
    images: dict[int, WedgeElement]

    def of(self, x) -> WedgeElement:
        """delta of a basis label, basis index, or linear-combination vector."""
        g = self.algebra
        if isinstance(x, WedgeElement):
            out = g.wedge(2)
            for (i,), c in x.terms.items():
                out = out + self.images[i].map_coeffs(lambda v: c * v)
            return out
        i = x if isinstance(x, int) else g.index[x]
        return self.images[i]

    def params_used(self) -> set:
        used = set()
        for w in self.images.values():
            for coef in w.terms.values():
                used |= coef.params_used()
        return used


def cocommutator(r: WedgeElement) -> Cocommutator:
    """delta(X) = ad_X(r) for every basis generator."""
    g = r.parent
    if r.k != 2:
        raise ValueError("r must be a degree-2 wedge element")
    images = {i: g.ad(g.basis_vector(i), r) for i in range(g.dim)}
    return Cocommutator(g, images)


def _antisym_matrix(r: WedgeElement) -> dict[tuple[int, int], Scalar]:
    mat = {}
    for (i, j), coef in r.terms.items():
        mat[(i, j)] = coef
        mat[(j, i)] = -coef
    return mat


def schouten(r: WedgeElement) -> WedgeElement:
    """[[r,r]] as a degree-3 wedge element (sparse route).

    Accumulates the three summands [r12,r13] + [r12,r23] + [r13,r23] directly
    into tensor slots and reads off the strictly increasing ones.
    """
    g = r.parent
    mat = _antisym_matrix(r)
    out: dict[tuple[int, int, int], Scalar] = {}

    def add_slot(a, b, c, coef):
        if len({a, b, c}) != 3:
            # diagonal tensor slots never contribute to the wedge expansion
            return
        key = (a, b, c)
        if key == tuple(sorted(key)):
            cur = out.get(key)
            cur = coef if cur is None else cur + coef
            if cur.is_zero():
                out.pop(key, None)
            else:
                out[key] = cur

    items = list(mat.items())
    for (i, j), cij in items:
        for (k, l), ckl in items:
            w = cij * ckl
            for m, s in g.bracket_indices(i, k).items():
                add_slot(m, j, l, w * s)        # bracket in slots 1-2's first legs
            for m, s in g.bracket_indices(j, k).items():
                add_slot(i, m, l, w * s)        # bracket in slots 2-3's inner legs
            for m, s in g.bracket_indices(j, l).items():
                add_slot(i, k, m, w * s)        # bracket in slots 1-3's second legs
    return WedgeElement(g, 3, out)


def schouten_tensor_oracle(r: WedgeElement) -> WedgeElement:
    """Independent dense route: build the full tensor cube, antisymmetrise.

    Kept deliberately unoptimised; it is the reference the sparse route is
    checked against.
    """
    g = r.parent
    mat = _antisym_matrix(r)
    cube: dict[tuple[int, int, int], Scalar] = {}

    def acc(key, coef):
        cur = cube.get(key)
        cur = coef if cur is None else cur + coef
        if cur.is_zero():
            cube.pop(key, None)
        else:
            cube[key] = cur

    items = list(mat.items())
    for (i, j), cij in items:
        for (k, l), ckl in items:
            w = cij * ckl
            for m, s in g.bracket_indices(i, k).items():
                acc((m, j, l), w * s)
            for m, s in g.bracket_indices(j, k).items():
                acc((i, m, l), w * s)
            for m, s in g.bracket_indices(j, l).items():
                acc((i, k, m), w * s)

    sixth = Scalar.from_rational(Fraction(1, 6))
    out: dict[tuple[int, int, int], Scalar] = {}
    for a, b, c in itertools.combinations(range(g.dim), 3):
        acc_term = Scalar.zero()
        for perm, sign in _S3:
            key = tuple((a, b, c)[p] for p in perm)
            if key in cube:
                v = cube[key]
                acc_term = acc_term + (v if sign > 0 else -v)
        coef = sixth * acc_term
        if not coef.is_zero():
            out[(a, b, c)] = coef
    return WedgeElement(g, 3, out)


_S3 = [
    ((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
    ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1),
]


@dataclass
class McybeReport:
    """Per-generator residuals ad_X([[r,r]]) plus the derived verdicts."""

    r: WedgeElement
    schouten: WedgeElement
    residuals: dict[int, WedgeElement]

    @property
    def is_cybe(self) -> bool:
        return self.schouten.is_zero()

    @property
    def is_mcybe(self) -> bool:
        return all(w.is_zero() for w in self.residuals.values())

    @property
    def verdict(self) -> str:
        if self.is_cybe:
            return "triangular"
        if self.is_mcybe:
            return "quasitriangular"
        return "not-a-solution"

    def nonzero_residuals(self) -> dict[str, WedgeElement]:
        labs = self.r.parent.labels
        return {labs[i]: w for i, w in self.residuals.items() if not w.is_zero()}


def mcybe_residual(r: WedgeElement, over: Subalgebra | None = None) -> McybeReport:
    """Residuals of the invariance condition on [[r,r]].

    With ``over`` given, only the action of that subalgebra's generators is
    tested (used when an r-matrix is judged within a subalgebra); otherwise
    every basis generator of the ambient algebra acts.
    """
    g = r.parent
    s = schouten(r)
    gens = sorted(over.indices) if over is not None else range(g.dim)
    residuals = {i: g.ad(g.basis_vector(i), s) for i in gens}
    return McybeReport(r, s, residuals)


# -- cocycle and co-Jacobi diagnostics ---------------------------------------


def cocycle_violations(delta: Cocommutator):
    """Pairs where delta([X,Y]) != ad_X delta(Y) - ad_Y delta(X)."""
    g = delta.algebra
    bad = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = g.wedge(2)
            for m, s in g.bracket_indices(i, j).items():
                lhs = lhs + delta.images[m].map_coeffs(lambda v: s * v)
            rhs = (g.ad(g.basis_vector(i), delta.images[j])
                   - g.ad(g.basis_vector(j), delta.images[i]))
            if lhs != rhs:
                bad.append((g.labels[i], g.labels[j]))
    return bad


def cojacobi_violations(delta: Cocommutator):
    """Generators where the cyclic sum of (delta x id) o delta fails to vanish."""
    g = delta.algebra
    bad = []
    for i in range(g.dim):
        tensor: dict[tuple[int, int, int], Scalar] = {}
        img = _antisym_matrix(delta.images[i])
        for (m, n), cmn in img.items():
            inner = _antisym_matrix(delta.images[m])
            for (a, b), cab in inner.items():
                for key in ((a, b, n), (n, a, b), (b, n, a)):
                    cur = tensor.get(key, Scalar.zero()) + cmn * cab
                    if cur.is_zero():
                        tensor.pop(key, None)
                    else:
                        tensor[key] = cur
        if tensor:
            bad.append(g.labels[i])
    return bad


# -- predicates ----------------------------------------------------------------


def predicate_sub_bialgebra(delta: Cocommutator, h: Subalgebra) -> bool:
    """True iff delta(h) lies inside h^h."""
    return all(delta.images[i].support_in(h) for i in sorted(h.indices))


def predicate_coisotropy(delta: Cocommutator, h: Subalgebra) -> bool:
    """True iff delta(h) lies inside h^g (at most one leg leaves h)."""
    for i in sorted(h.indices):
        for key in delta.images[i].terms:
            if all(a not in h.indices for a in key):
                return False
    return True


def image_support_in(delta: Cocommutator, domain, first, second) -> bool:
    """True iff delta(X) for X in `domain` only uses wedges pairing `first`
    with `second` (in either order)."""
    first = getattr(first, "indices", first)
    second = getattr(second, "indices", second)
    dom = getattr(domain, "indices", domain)
    for i in sorted(dom):
        for (a, b) in delta.images[i].terms:
            if not ((a in first and b in second) or (a in second and b in first)):
                return False
    return True


# -- primitive generators and the boost grading --------------------------------


def nullplane_candidates(g: LieAlgebra):
    """Default candidate combinations: the basis itself plus the null-plane
    combinations P0 +/- P1, K2 +/- J3 and K3 -/+ J2 (when those labels exist)."""
    cands = [(lab, g.basis_vector(lab)) for lab in g.labels]
    combos = [
        ("P0+P1", {"P0": 1, "P1": 1}), ("P0-P1", {"P0": 1, "P1": -1}),
        ("K2+J3", {"K2": 1, "J3": 1}), ("K2-J3", {"K2": 1, "J3": -1}),
        ("K3+J2", {"K3": 1, "J2": 1}), ("K3-J2", {"K3": 1, "J2": -1}),
    ]
    for name, combo in combos:
        if all(l in g.index for l in combo):
            cands.append((name, g.vector(combo)))
    return cands


def primitive_generators(delta: Cocommutator, candidates=None) -> list[str]:
    """Names of candidate combinations with exactly vanishing cocommutator."""
    if candidates is None:
        candidates = nullplane_candidates(delta.algebra)
    return [name for name, vec in candidates if delta.of(vec).is_zero()]


def grade_by_goodness(g: LieAlgebra, x: WedgeElement) -> Fraction | None:
    """Eigenvalue gamma in [K1, X] = gamma X, or None if X is not an eigenvector."""
    if x.is_zero():
        raise ValueError("the zero vector has no grading")
    bx = g.bracket(g.basis_vector("K1"), x)
    if bx.is_zero():
        return Fraction(0)
    ratio = None
    for key, coef in x.terms.items():
        other = bx.terms.get(key)
        if other is None:
            return None
        if not coef.is_rational() or not other.is_rational():
            return None
        q = other.as_rational() / coef.as_rational()
        if ratio is None:
            ratio = q
        elif ratio != q:
            return None
    if set(bx.terms) != set(x.terms):
        return None
    return ratio
