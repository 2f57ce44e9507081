"""Basis-indexed Lie algebras with exact structure constants, and exterior powers.

The fixed generator order for the (3+1)D kinematical family is

    (P0, P1, P2, P3, K1, K2, K3, J1, J2, J3)

time translation, space translations, boosts, rotations.  Every module in the
package uses this order, which pins down all wedge-coordinate signs.  Wedge
bases are enumerated lexicographically on strictly increasing index tuples,
so the second exterior power of the ten-dimensional algebra has 45 slots and
the third has 120.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .scalars import LAM, ONE, Scalar


class AlgebraMismatch(ValueError):
    """Operands belong to different Lie algebras."""


def eps(a: int, b: int, c: int) -> int:
    """Levi-Civita symbol on {1,2,3}."""
    if {a, b, c} != {1, 2, 3}:
        return 0
    return 1 if (a, b, c) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


class LieAlgebra:
    """Ordered basis labels plus a sparse table of exact structure constants."""

    def __init__(self, name, labels, brackets, check_jacobi=True):
        """``brackets`` maps (i, j) with i < j to {k: Scalar} giving [e_i, e_j]."""
        self.name = name
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        table = {}
        for (i, j), comps in brackets.items():
            if not i < j:
                raise ValueError("bracket table keys must satisfy i < j")
            comps = {k: v for k, v in comps.items() if not v.is_zero()}
            if comps:
                table[(i, j)] = comps
        self.table = table
        if check_jacobi:
            bad = self.jacobi_violations()
            if bad:
                raise ValueError(f"Jacobi identity fails for {name}: {bad[:3]}")

    # -- brackets ------------------------------------------------------------

    def bracket_indices(self, i: int, j: int) -> dict[int, Scalar]:
        """[e_i, e_j] as a sparse {index: Scalar} map."""
        if i == j:
            return {}
        if i < j:
            return dict(self.table.get((i, j), {}))
        return {k: -v for k, v in self.table.get((j, i), {}).items()}

    def bracket(self, x: "WedgeElement", y: "WedgeElement") -> "WedgeElement":
        """Bracket of two vectors (degree-1 wedge elements)."""
        self._check(x), self._check(y)
        if x.k != 1 or y.k != 1:
            raise ValueError("bracket is defined on vectors")
        out = {}
        for (i,), ci in x.terms.items():
            for (j,), cj in y.terms.items():
                for m, s in self.bracket_indices(i, j).items():
                    _acc(out, (m,), ci * cj * s)
        return WedgeElement(self, 1, out)

    def jacobi_violations(self):
        """Triples where the Jacobi identity fails as an exact Scalar identity."""
        bad = []
        for i, j, k in itertools.combinations(range(self.dim), 3):
            acc = {}
            for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                for m, s in self.bracket_indices(b, c).items():
                    for n, t in self.bracket_indices(a, m).items():
                        _acc(acc, n, s * t)
            if acc:
                bad.append((self.labels[i], self.labels[j], self.labels[k]))
        return bad

    # -- elements --------------------------------------------------------------

    def basis_vector(self, label) -> "WedgeElement":
        i = label if isinstance(label, int) else self.index[label]
        return WedgeElement(self, 1, {(i,): ONE})

    def vector(self, combo: dict) -> "WedgeElement":
        """Linear combination {label: coefficient}."""
        terms = {}
        for lab, coef in combo.items():
            i = lab if isinstance(lab, int) else self.index[lab]
            coef = coef if isinstance(coef, Scalar) else Scalar.from_rational(coef)
            _acc(terms, (i,), coef)
        return WedgeElement(self, 1, terms)

    def wedge(self, k: int, terms=None) -> "WedgeElement":
        return WedgeElement(self, k, terms or {})

    def wedge_from_labels(self, entries) -> "WedgeElement":
        """Degree-2 element from (label_a, label_b, coefficient) triples."""
        terms = {}
        for la, lb, coef in entries:
            i, j = self.index[la], self.index[lb]
            if i == j:
                continue
            coef = coef if isinstance(coef, Scalar) else Scalar.from_rational(coef)
            if i > j:
                i, j = j, i
                coef = -coef
            _acc(terms, (i, j), coef)
        return WedgeElement(self, 2, terms)

    def wedge_basis(self, k: int):
        """Strictly increasing index k-tuples, lexicographically ordered."""
        return list(itertools.combinations(range(self.dim), k))

    # -- adjoint action ----------------------------------------------------------

    def ad(self, x: "WedgeElement", w: "WedgeElement") -> "WedgeElement":
        """Adjoint action of a vector on a wedge element, as a derivation."""
        self._check(x), self._check(w)
        if x.k != 1:
            raise ValueError("ad acts by a vector in the first slot")
        out = {}
        for (i,), ci in x.terms.items():
            for key, cw in w.terms.items():
                coef = ci * cw
                for pos, a in enumerate(key):
                    for m, s in self.bracket_indices(i, a).items():
                        new = key[:pos] + (m,) + key[pos + 1:]
                        _add_sorted(out, new, coef * s)
        return WedgeElement(self, w.k, out)

    # -- subalgebras ------------------------------------------------------------

    def subalgebra(self, name, labels) -> "Subalgebra":
        idx = frozenset(self.index[l] for l in labels)
        for i in idx:
            for j in idx:
                if i < j:
                    for m in self.bracket_indices(i, j):
                        if m not in idx:
                            raise ValueError(
                                f"{name} is not closed: [{self.labels[i]},"
                                f"{self.labels[j]}] leaves the span")
        return Subalgebra(self, name, idx)

    def restrict(self, sub: "Subalgebra") -> "LieAlgebra":
        """Standalone Lie algebra on a closed subalgebra's basis."""
        keep = sorted(sub.indices)
        remap = {old: new for new, old in enumerate(keep)}
        brackets = {}
        for a, i in enumerate(keep):
            for b, j in enumerate(keep):
                if i < j:
                    comps = {remap[m]: s for m, s in self.bracket_indices(i, j).items()}
                    if comps:
                        brackets[(a, b)] = comps
        return LieAlgebra(f"{self.name}:{sub.name}",
                          [self.labels[i] for i in keep], brackets)

    def _check(self, w):
        if w.parent is not self:
            raise AlgebraMismatch(
                f"element of {w.parent.name} used with {self.name}")

    def __repr__(self):
        return f"LieAlgebra({self.name}, dim={self.dim})"


class Subalgebra:
    """A closed subset of basis indices, verified at construction."""

    def __init__(self, parent, name, indices):
        self.parent = parent
        self.name = name
        self.indices = frozenset(indices)

    def __contains__(self, i):
        return i in self.indices

    def __repr__(self):
        labs = [self.parent.labels[i] for i in sorted(self.indices)]
        return f"Subalgebra({self.name}: {' '.join(labs)})"


class WedgeElement:
    """Sparse element of the k-th exterior power of a Lie algebra.

    Only strictly increasing index tuples are stored; reorderings are absorbed
    into the coefficients' signs at construction time.
    """

    __slots__ = ("parent", "k", "terms")

    def __init__(self, parent, k, terms=None):
        self.parent = parent
        self.k = k
        cleaned = {}
        if terms:
            for key, coef in terms.items():
                if len(key) != k or any(a >= b for a, b in zip(key, key[1:])):
                    raise ValueError(f"not a strictly increasing {k}-tuple: {key}")
                if not coef.is_zero():
                    cleaned[tuple(key)] = coef
        self.terms = cleaned

    def _compat(self, other):
        if not isinstance(other, WedgeElement):
            raise TypeError("expected a WedgeElement")
        if other.parent is not self.parent:
            raise AlgebraMismatch("wedge elements over different algebras")
        if other.k != self.k:
            raise ValueError("wedge degrees differ")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.terms)
        for key, coef in other.terms.items():
            _acc(out, key, coef)
        return WedgeElement(self.parent, self.k, out)

    def __neg__(self):
        return WedgeElement(self.parent, self.k,
                            {key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "WedgeElement":
        s = s if isinstance(s, Scalar) else Scalar.from_rational(s)
        return WedgeElement(self.parent, self.k,
                            {key: s * c for key, c in self.terms.items()})

    def wedge(self, other: "WedgeElement") -> "WedgeElement":
        if other.parent is not self.parent:
            raise AlgebraMismatch("wedge elements over different algebras")
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                _add_sorted(out, ka + kb, ca * cb)
        return WedgeElement(self.parent, self.k + other.k, out)

    def map_coeffs(self, fn) -> "WedgeElement":
        out = {}
        for key, coef in self.terms.items():
            v = fn(coef)
            if not v.is_zero():
                out[key] = v
        return WedgeElement(self.parent, self.k, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, WedgeElement):
            return NotImplemented
        return (self.parent is other.parent and self.k == other.k
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.parent), self.k, frozenset(self.terms.items())))

    def support_in(self, allowed) -> bool:
        """True iff every index appearing in every stored tuple lies in `allowed`."""
        allowed = getattr(allowed, "indices", allowed)
        return all(all(i in allowed for i in key) for key in self.terms)

    def component_outside(self, allowed) -> "WedgeElement":
        """The part of the element with at least one index outside `allowed`."""
        allowed = getattr(allowed, "indices", allowed)
        out = {key: c for key, c in self.terms.items()
               if any(i not in allowed for i in key)}
        return WedgeElement(self.parent, self.k, out)

    def __str__(self):
        if not self.terms:
            return "0"
        labs = self.parent.labels
        parts = []
        for key in sorted(self.terms):
            mono = "^".join(labs[i] for i in key)
            parts.append(f"({self.terms[key]})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def _acc(d, key, val):
    acc = d.get(key)
    acc = val if acc is None else acc + val
    if acc.is_zero():
        d.pop(key, None)
    else:
        d[key] = acc


def _add_sorted(d, key, coef):
    """Accumulate coef * e_{key} after sorting the tuple, tracking the sign."""
    if coef.is_zero():
        return
    if len(set(key)) != len(key):
        return
    perm = sorted(range(len(key)), key=key.__getitem__)
    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm))
                     if perm[a] > perm[b])
    skey = tuple(sorted(key))
    _acc(d, skey, -coef if inversions % 2 else coef)


# ---------------------------------------------------------------------------
# Algebra builders
# ---------------------------------------------------------------------------

LABELS_3P1 = ("P0", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3")
LABELS_2P1 = ("P0", "P1", "P2", "K1", "K2", "J3")


def _build(name, labels, lam, rules):
    index = {lab: i for i, lab in enumerate(labels)}
    brackets = {}

    def put(la, lb, comps):
        i, j = index[la], index[lb]
        sign = 1
        if i > j:
            i, j = j, i
            sign = -1
        entry = brackets.setdefault((i, j), {})
        for lc, coef in comps:
            k = index[lc]
            cur = entry.get(k, Scalar.zero())
            cur = cur + (coef if sign > 0 else -coef)
            if cur.is_zero():
                entry.pop(k, None)
            else:
                entry[k] = cur

    rules(put)
    return LieAlgebra(name, labels, brackets)


def build_g_lambda(lam: Scalar | None = None) -> LieAlgebra:
    """The (3+1)D relativistic kinematical algebra with curvature parameter.

    Covers anti-de Sitter (lam < 0), de Sitter (lam > 0) and Poincare
    (lam = 0) in one family; by default the parameter stays symbolic.
    """
    lam = LAM if lam is None else lam
    spatial = (1, 2, 3)

    def rules(put):
        for a in spatial:
            for b in spatial:
                if a == b:
                    continue
                for c in spatial:
                    e = eps(a, b, c)
                    if not e:
                        continue
                    if a < b:
                        put(f"J{a}", f"J{b}", [(f"J{c}", Scalar.from_rational(e))])
                        put(f"K{a}", f"K{b}", [(f"J{c}", Scalar.from_rational(-e))])
                        put(f"P{a}", f"P{b}", [(f"J{c}", lam * Scalar.from_rational(e))])
                    put(f"J{a}", f"P{b}", [(f"P{c}", Scalar.from_rational(e))])
                    put(f"J{a}", f"K{b}", [(f"K{c}", Scalar.from_rational(e))])
        for a in spatial:
            put(f"K{a}", "P0", [(f"P{a}", ONE)])
            put(f"K{a}", f"P{a}", [("P0", ONE)])
            put("P0", f"P{a}", [(f"K{a}", -lam)])

    return _build("relativistic", LABELS_3P1, lam, rules)


def build_newtonian(lam: Scalar | None = None) -> LieAlgebra:
    """Non-relativistic (Newton-Hooke/Galilei) limit algebra: boosts commute,
    [K_a,P_b] = 0 and [P_a,P_b] = 0, while [K_a,P0] = P_a and
    [P0,P_a] = -lam K_a survive."""
    lam = LAM if lam is None else lam
    spatial = (1, 2, 3)

    def rules(put):
        for a in spatial:
            for b in spatial:
                if a == b:
                    continue
                for c in spatial:
                    e = eps(a, b, c)
                    if not e:
                        continue
                    if a < b:
                        put(f"J{a}", f"J{b}", [(f"J{c}", Scalar.from_rational(e))])
                    put(f"J{a}", f"P{b}", [(f"P{c}", Scalar.from_rational(e))])
                    put(f"J{a}", f"K{b}", [(f"K{c}", Scalar.from_rational(e))])
        for a in spatial:
            put(f"K{a}", "P0", [(f"P{a}", ONE)])
            put("P0", f"P{a}", [(f"K{a}", -lam)])

    return _build("newtonian", LABELS_3P1, lam, rules)


def build_carrollian(lam: Scalar | None = None) -> LieAlgebra:
    """Ultra-relativistic (Carroll) limit algebra: boosts commute,
    [K_a,P0] = 0, while [K_a,P_b] = delta_ab P0 and the curvature brackets
    [P0,P_a] = -lam K_a, [P_a,P_b] = lam eps_abc J_c survive."""
    lam = LAM if lam is None else lam
    spatial = (1, 2, 3)

    def rules(put):
        for a in spatial:
            for b in spatial:
                if a == b:
                    continue
                for c in spatial:
                    e = eps(a, b, c)
                    if not e:
                        continue
                    if a < b:
                        put(f"J{a}", f"J{b}", [(f"J{c}", Scalar.from_rational(e))])
                        put(f"P{a}", f"P{b}", [(f"J{c}", lam * Scalar.from_rational(e))])
                    put(f"J{a}", f"P{b}", [(f"P{c}", Scalar.from_rational(e))])
                    put(f"J{a}", f"K{b}", [(f"K{c}", Scalar.from_rational(e))])
        for a in spatial:
            put(f"K{a}", f"P{a}", [("P0", ONE)])
            put("P0", f"P{a}", [(f"K{a}", -lam)])

    return _build("carrollian", LABELS_3P1, lam, rules)


def build_g_2plus1(lam: Scalar | None = None) -> LieAlgebra:
    """The (2+1)D relativistic algebra on {P0, P1, P2, K1, K2, J3}."""
    lam = LAM if lam is None else lam

    def rules(put):
        put("J3", "P1", [("P2", ONE)])
        put("J3", "P2", [("P1", -ONE)])
        put("J3", "K1", [("K2", ONE)])
        put("J3", "K2", [("K1", -ONE)])
        for a in (1, 2):
            put(f"K{a}", "P0", [(f"P{a}", ONE)])
            put(f"K{a}", f"P{a}", [("P0", ONE)])
            put("P0", f"P{a}", [(f"K{a}", -lam)])
        put("K1", "K2", [("J3", -ONE)])
        put("P1", "P2", [("J3", lam)])

    return _build("relativistic-2+1", LABELS_2P1, lam, rules)


def build_abelian(n: int) -> LieAlgebra:
    return LieAlgebra("abelian", [f"X{i}" for i in range(n)], {})


def build_lorentz() -> LieAlgebra:
    """The boost-rotation algebra so(3,1) on (K1, K2, K3, J1, J2, J3)."""
    g = build_g_lambda()
    return g.restrict(lorentz_subalgebra(g))


def lorentz_subalgebra(g: LieAlgebra) -> Subalgebra:
    labels = [l for l in g.labels if l[0] in "KJ"]
    return g.subalgebra("lorentz", labels)


def translation_indices(g: LieAlgebra) -> frozenset:
    return frozenset(i for i, l in enumerate(g.labels) if l[0] == "P")
