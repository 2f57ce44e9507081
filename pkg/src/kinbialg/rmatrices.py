"""Catalog of the classical r-matrices used throughout the package.

All constructors take the target Lie algebra and optional Scalar parameters
(symbolic by default) and return degree-2 wedge elements in the fixed basis
order.  They work over any algebra that carries the named generators, so the
same builders serve the full kinematical family, the standalone
boost-rotation algebra and the contracted families.
"""

from __future__ import annotations

from .liealg import LieAlgebra, WedgeElement
from .scalars import Scalar, rat

_Z = lambda: Scalar.param("z")
_ZP = lambda: Scalar.param("zp")
_half = rat(1, 2)


def r_type_I(g: LieAlgebra, z: Scalar | None = None,
             zp: Scalar | None = None) -> WedgeElement:
    """Two-parameter triangular solution living in boost^rotation wedges."""
    z = _Z() if z is None else z
    zp = _ZP() if zp is None else zp
    return g.wedge_from_labels([
        ("K1", "K2", z), ("K1", "J3", z), ("K3", "J1", -z), ("J1", "J2", -z),
        ("K2", "K3", -zp), ("K2", "J2", zp), ("K3", "J3", zp), ("J2", "J3", -zp),
    ])


def r_type_II(g: LieAlgebra, z: Scalar | None = None) -> WedgeElement:
    """One-parameter twist on the commuting pair (K1, J1)."""
    z = _Z() if z is None else z
    return g.wedge_from_labels([("K1", "J1", z)])


def r_type_III(g: LieAlgebra, z: Scalar | None = None) -> WedgeElement:
    """One-parameter solution K1^(K2+J3); lives in a 3D boost-rotation subalgebra."""
    z = _Z() if z is None else z
    return g.wedge_from_labels([("K1", "K2", z), ("K1", "J3", z)])


def r_type_I_nullplane_zp(g: LieAlgebra, zp: Scalar | None = None) -> WedgeElement:
    """The zp-part of the type-I matrix written as (K3-J2)^(K2+J3)."""
    zp = _ZP() if zp is None else zp
    return (g.vector({"K3": 1, "J2": -1})
            .wedge(g.vector({"K2": 1, "J3": 1}))).map_coeffs(lambda c: zp * c)


def r_type_I_nullplane_z(g: LieAlgebra, z: Scalar | None = None) -> WedgeElement:
    """The z-part of the type-I matrix written as K1^(K2+J3) + J1^(K3-J2)."""
    z = _Z() if z is None else z
    a = g.basis_vector("K1").wedge(g.vector({"K2": 1, "J3": 1}))
    b = g.basis_vector("J1").wedge(g.vector({"K3": 1, "J2": -1}))
    return (a + b).map_coeffs(lambda c: z * c)


# -- the four families of boost-rotation r-matrices --------------------------

def r_family_A(g: LieAlgebra, alpha: Scalar | None = None,
               beta: Scalar | None = None, eta: Scalar | None = None) -> WedgeElement:
    alpha = Scalar.param("alpha") if alpha is None else alpha
    beta = Scalar.param("beta") if beta is None else beta
    eta = Scalar.param("eta") if eta is None else eta
    return g.wedge_from_labels([
        ("K2", "K3", -alpha), ("J2", "J3", alpha),
        ("K2", "J3", -beta), ("K3", "J2", beta),
        ("K1", "J1", _half * eta),
    ])


def r_family_B(g: LieAlgebra, beta: Scalar | None = None,
               chip: Scalar | None = None) -> WedgeElement:
    beta = Scalar.param("beta") if beta is None else beta
    chip = Scalar.param("chip") if chip is None else chip
    return r_type_I(g, z=_half * beta, zp=_half * chip)


def r_family_C(g: LieAlgebra, gamma: Scalar | None = None,
               chip: Scalar | None = None) -> WedgeElement:
    gamma = Scalar.param("gamma") if gamma is None else gamma
    chip = Scalar.param("chip") if chip is None else chip
    return g.wedge_from_labels([
        ("K2", "K3", -(gamma + _half * chip)),
        ("J2", "J3", gamma - _half * chip),
        ("K1", "J1", -gamma),
        ("K2", "J2", _half * chip),
        ("K3", "J3", _half * chip),
    ])


def r_family_D(g: LieAlgebra, chi: Scalar | None = None) -> WedgeElement:
    chi = Scalar.param("chi") if chi is None else chi
    return r_type_III(g, z=chi)


LORENTZ_FAMILIES = {
    "A": r_family_A,
    "B": r_family_B,
    "C": r_family_C,
    "D": r_family_D,
}


# -- (2+1)D ansatz pieces -----------------------------------------------------

def r_2p1_isotropy_invariant(g21: LieAlgebra, c1: Scalar | None = None) -> WedgeElement:
    """The one-parameter element c1*(J3^P0 - P1^K2 + P2^K1)."""
    c1 = Scalar.param("c1") if c1 is None else c1
    return g21.wedge_from_labels([
        ("J3", "P0", c1), ("P1", "K2", -c1), ("P2", "K1", c1),
    ])


def r_2p1_sub_bialgebra(g21: LieAlgebra, a2: Scalar | None = None,
                        b2: Scalar | None = None, c2: Scalar | None = None,
                        c1: Scalar | None = None) -> WedgeElement:
    """The four-parameter family a2*J3^K1 + b2*J3^K2 + c2*K1^K2 + c1*(...)."""
    a2 = Scalar.param("a2") if a2 is None else a2
    b2 = Scalar.param("b2") if b2 is None else b2
    c2 = Scalar.param("c2") if c2 is None else c2
    r = g21.wedge_from_labels([
        ("J3", "K1", a2), ("J3", "K2", b2), ("K1", "K2", c2),
    ])
    return r + r_2p1_isotropy_invariant(g21, c1)


# -- contracted (Newtonian / Carrollian) representatives ----------------------

def r_type_I_contracted(g: LieAlgebra, z: Scalar | None = None,
                        zp: Scalar | None = None) -> WedgeElement:
    """z*K1^K2 - zp*K2^K3, the common Newtonian/Carrollian limit of type I."""
    z = _Z() if z is None else z
    zp = _ZP() if zp is None else zp
    return g.wedge_from_labels([("K1", "K2", z), ("K2", "K3", -zp)])


def r_type_III_contracted(g: LieAlgebra, z: Scalar | None = None) -> WedgeElement:
    """z*K1^K2, the common Newtonian/Carrollian limit of type III."""
    z = _Z() if z is None else z
    return g.wedge_from_labels([("K1", "K2", z)])
