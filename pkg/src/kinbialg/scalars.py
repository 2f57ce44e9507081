"""Exact scalar arithmetic: sparse multivariate Laurent polynomials over the rationals.

Every symbolic computation in the package runs over this ring.  The formal
parameters are

* ``lam``   -- curvature/cosmological-constant parameter,
* ``z``, ``zp`` -- the two deformation parameters,
* ``c``     -- the contraction (speed-of-light) parameter, the only one that
  ever carries negative exponents in practice,
* ``alpha``, ``beta``, ``eta``, ``chi``, ``chip``, ``gamma`` -- parameters of
  the four Lorentz r-matrix families,
* ``a2``, ``b2``, ``c2``, ``c1`` -- coefficients of the (2+1)D ansatz.

A :class:`Scalar` is a sparse map from exponent vectors (one signed integer
per parameter) to ``fractions.Fraction``.  No zero coefficients are stored,
so equality of the underlying maps is structural equality of canonical forms.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

PARAMS: tuple[str, ...] = (
    "lam", "z", "zp", "c",
    "alpha", "beta", "eta", "chi", "chip", "gamma",
    "a2", "b2", "c2", "c1",
)
_NP = len(PARAMS)
_PINDEX = {name: i for i, name in enumerate(PARAMS)}
_ZEXP = (0,) * _NP


class DivisionByZero(ArithmeticError):
    """A negatively-powered parameter was bound to zero."""


class DivergentLimit(ArithmeticError):
    """The requested c-limit does not exist; offending terms are attached."""

    def __init__(self, message, terms):
        super().__init__(message)
        self.terms = terms


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _grlex_key(exps):
    # graded lexicographic: total degree first, then the exponent vector
    return (sum(exps), exps)


class Scalar:
    """Element of Q[lam^±1, z^±1, ..., c1^±1], stored sparsely and canonically."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for exps, coef in terms.items():
                coef = _as_fraction(coef)
                if coef:
                    cleaned[tuple(exps)] = coef
        self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Scalar":
        return cls()

    @classmethod
    def from_rational(cls, x) -> "Scalar":
        x = _as_fraction(x)
        return cls({_ZEXP: x}) if x else cls()

    @classmethod
    def param(cls, name: str, power: int = 1) -> "Scalar":
        exps = [0] * _NP
        exps[_PINDEX[name]] = power
        return cls({tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, coef, **powers) -> "Scalar":
        exps = [0] * _NP
        for name, p in powers.items():
            exps[_PINDEX[name]] = p
        return cls({tuple(exps): _as_fraction(coef)})

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, coef in other.terms.items():
            acc = out.get(exps, 0) + coef
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        s = Scalar.__new__(Scalar)
        s.terms = out
        return s

    __radd__ = __add__

    def __neg__(self):
        s = Scalar.__new__(Scalar)
        s.terms = {e: -c for e, c in self.terms.items()}
        return s

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(e, 0) + c1 * c2
                if acc:
                    out[e] = acc
                else:
                    out.pop(e, None)
        s = Scalar.__new__(Scalar)
        s.terms = out
        return s

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Scalar powers must be non-negative integers")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- queries -----------------------------------------------------------

    def params_used(self) -> set[str]:
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(PARAMS[i])
        return used

    def is_rational(self) -> bool:
        return all(e == _ZEXP for e in self.terms)

    def as_rational(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if self.is_rational():
            return self.terms[_ZEXP]
        raise ValueError(f"not a pure rational: {self}")

    def leading(self):
        """(exponent vector, coefficient) of the graded-lex greatest term."""
        if not self.terms:
            raise ValueError("zero scalar has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # -- substitution and limits --------------------------------------------

    def substitute(self, bindings: dict) -> "Scalar":
        """Exact evaluation of some parameters; unbound ones survive symbolically."""
        idx = {}
        for name, val in bindings.items():
            idx[_PINDEX[name]] = _as_fraction(val)
        out = {}
        for exps, coef in self.terms.items():
            new = list(exps)
            for i, val in idx.items():
                e = exps[i]
                if e == 0:
                    continue
                if val == 0:
                    if e < 0:
                        raise DivisionByZero(
                            f"{PARAMS[i]}^{e} evaluated at {PARAMS[i]}=0")
                    coef = Fraction(0)
                else:
                    coef = coef * val ** e
                new[i] = 0
            if coef:
                key = tuple(new)
                acc = out.get(key, 0) + coef
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        s = Scalar.__new__(Scalar)
        s.terms = out
        return s

    def limit_c(self, direction: str) -> "Scalar":
        """Limit c -> infinity ('to_infinity') or c -> 0 ('to_zero').

        For c -> infinity any term with positive c-exponent diverges and any
        term with negative c-exponent vanishes; c -> 0 is the mirror image.
        """
        ci = _PINDEX["c"]
        if direction == "to_infinity":
            bad = lambda e: e > 0
        elif direction == "to_zero":
            bad = lambda e: e < 0
        else:
            raise ValueError("direction must be 'to_infinity' or 'to_zero'")
        offenders = [e for e in self.terms if bad(e[ci])]
        if offenders:
            raise DivergentLimit(
                f"limit c {direction} diverges on terms "
                + ", ".join(_fmt_term(self.terms[e], e) for e in sorted(offenders)),
                offenders,
            )
        out = {e: c for e, c in self.terms.items() if e[ci] == 0}
        s = Scalar.__new__(Scalar)
        s.terms = out
        return s

    def scale_param(self, name: str, c_power: int) -> "Scalar":
        """Substitute ``name -> c^c_power * name`` (a pure monomial rescaling)."""
        pi = _PINDEX[name]
        ci = _PINDEX["c"]
        out = {}
        for exps, coef in self.terms.items():
            e = list(exps)
            e[ci] += c_power * exps[pi]
            out[tuple(e)] = coef
        s = Scalar.__new__(Scalar)
        s.terms = out
        return s

    def eval_float(self, bindings: dict) -> float:
        """Evaluate to a float; every parameter that appears must be bound."""
        vals = {}
        for name, v in bindings.items():
            vals[_PINDEX[name]] = float(v)
        acc = 0.0
        for exps, coef in self.terms.items():
            t = float(coef)
            for i, e in enumerate(exps):
                if e:
                    if i not in vals:
                        raise ValueError(f"parameter {PARAMS[i]} unbound")
                    t *= vals[i] ** e
            acc += t
        return acc

    # -- normalisation helpers ----------------------------------------------

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators / lcm of denominators)."""
        if not self.terms:
            return Fraction(0)
        from math import gcd, lcm
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Scalar":
        """Divide by the content and fix the sign of the leading coefficient."""
        if not self.terms:
            return self
        cont = self.content()
        _, lead = self.leading()
        if lead < 0:
            cont = -cont
        s = Scalar.__new__(Scalar)
        s.terms = {e: c / cont for e, c in self.terms.items()}
        return s

    # -- display -------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_grlex_key, reverse=True):
            parts.append(_fmt_term(self.terms[exps], exps))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


def _fmt_term(coef, exps) -> str:
    factors = []
    for i, e in enumerate(exps):
        if e == 1:
            factors.append(PARAMS[i])
        elif e:
            factors.append(f"{PARAMS[i]}^{e}")
    if not factors:
        return str(coef)
    body = "*".join(factors)
    if coef == 1:
        return body
    if coef == -1:
        return "-" + body
    return f"{coef}*{body}"


ZERO = Scalar.zero()
ONE = Scalar.from_rational(1)
LAM = Scalar.param("lam")
Z = Scalar.param("z")
ZP = Scalar.param("zp")
C = Scalar.param("c")


def rat(p, q=1) -> Scalar:
    return Scalar.from_rational(Fraction(p, q))
