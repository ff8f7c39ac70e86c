"""U(sl3) in Poincare-Birkhoff-Witt normal form.

A basis monomial is the ordered product
H1^a H2^b E^c F^d E1^e E2^f F1^g F2^h, stored as its exponent vector.
Products are straightened by inserting one generator at a time from the
left, rewriting  z x -> x z + [z, x]  whenever z sits after x in the
basis order.  The insertion routine is memoized on (generator, monomial),
so repeated products share all intermediate straightening work.

Symmetrization sends a commutative monomial to the average over all
orderings of its letters.  It is computed by the first-letter recursion

    sigma(m) = (1/deg m) * sum_i  mult_i(m) * z_i * sigma(m / z_i)

which telescopes to the factorial-average definition; the tests pin it
against the literal brute-force sum in low degree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import lie
from .lie import GVector

ZERO_EXPS = (0,) * 8
_ONE = Fraction(1)


def _inc(exps, i):
    out = list(exps)
    out[i] += 1
    return tuple(out)


def _dec(exps, i):
    out = list(exps)
    out[i] -= 1
    return tuple(out)


def _first_letter(exps):
    for i, e in enumerate(exps):
        if e:
            return i
    return None


@lru_cache(maxsize=None)
def _insert(g: int, exps) -> tuple:
    """z_g times the normal monomial, as ((exponents, coefficient), ...)."""
    h = _first_letter(exps)
    if h is None or g <= h:
        return ((_inc(exps, g), _ONE),)
    rest = _dec(exps, h)
    acc = {}
    # z_g z_h rest = z_h (z_g rest) + [z_g, z_h] rest
    for k1, c1 in _insert(g, rest):
        for k2, c2 in _insert(h, k1):
            w = acc.get(k2, 0) + c1 * c2
            if w:
                acc[k2] = w
            else:
                acc.pop(k2, None)
    for comp, u in lie.BRACKET_TABLE[g][h].coeffs.items():
        for k2, c2 in _insert(comp, rest):
            w = acc.get(k2, 0) + u * c2
            if w:
                acc[k2] = w
            else:
                acc.pop(k2, None)
    return tuple(acc.items())


@lru_cache(maxsize=None)
def pbw_product_items(k1, k2) -> tuple:
    """Normal form of the product of two basis monomials."""
    items = {k2: _ONE}
    word = []
    for i, e in enumerate(k1):
        word.extend([i] * e)
    for g in reversed(word):
        acc = {}
        for key, c in items.items():
            for key2, c2 in _insert(g, key):
                w = acc.get(key2, 0) + c * c2
                if w:
                    acc[key2] = w
                else:
                    acc.pop(key2, None)
        items = acc
    return tuple(items.items())


class UElement:
    """Element of U(sl3): {PBW exponent vector: coefficient}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        for key, v in (coeffs or {}).items():
            v = Fraction(v)
            if v:
                data[key] = v
        self.coeffs = data

    def is_zero(self) -> bool:
        return not self.coeffs

    def filtration_degree(self):
        if not self.coeffs:
            return None
        return max(sum(k) for k in self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            w = out.get(key, 0) + v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
        return UElement(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UElement({k: -v for k, v in self.coeffs.items()})

    def _scaled(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return UElement()
        return UElement({k: scalar * v for k, v in self.coeffs.items()})

    def __rmul__(self, scalar):
        return self._scaled(scalar)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(other)
        out = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                q = ca * cb
                for key, c in pbw_product_items(ka, kb):
                    w = out.get(key, 0) + q * c
                    if w:
                        out[key] = w
                    else:
                        out.pop(key, None)
        return UElement(out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = u_one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        from . import expr

        return "UElement(%s)" % expr.format_u(self)


def u_scalar(c) -> UElement:
    return UElement({ZERO_EXPS: c})


def u_one() -> UElement:
    return u_scalar(1)


def u_gen(i: int) -> UElement:
    return UElement({_inc(ZERO_EXPS, i): 1})


def from_gvector(v: GVector) -> UElement:
    return UElement({_inc(ZERO_EXPS, i): c for i, c in v.coeffs.items()})


def u_commutator(x: UElement, y: UElement) -> UElement:
    return x * y - y * x


@lru_cache(maxsize=None)
def _symmetrize_items(exps) -> tuple:
    n = sum(exps)
    if n == 0:
        return ((ZERO_EXPS, _ONE),)
    acc = {}
    for i, e in enumerate(exps):
        if not e:
            continue
        q = Fraction(e, n)
        for key, c in _symmetrize_items(_dec(exps, i)):
            qc = q * c
            for key2, c2 in _insert(i, key):
                w = acc.get(key2, 0) + qc * c2
                if w:
                    acc[key2] = w
                else:
                    acc.pop(key2, None)
    return tuple(acc.items())


def symmetrize(exps) -> UElement:
    """Image of a commutative monomial under the symmetrization map."""
    return UElement(dict(_symmetrize_items(tuple(exps))))


@lru_cache(maxsize=None)
def casimir_omega() -> UElement:
    """The degree-two central element built from trace-form dual bases."""
    uh = from_gvector(lie.H_VEC)
    ua = from_gvector(lie.A_VEC)
    ue, uf = u_gen(lie.E), u_gen(lie.F)
    ue1, ue2 = u_gen(lie.E1), u_gen(lie.E2)
    uf1, uf2 = u_gen(lie.F1), u_gen(lie.F2)
    return (
        Fraction(1, 2) * (uh * uh)
        + Fraction(3, 2) * (ua * ua)
        + ue * uf
        + uf * ue
        + ue1 * uf1
        + ue2 * uf2
        + uf1 * ue1
        + uf2 * ue2
    )


@lru_cache(maxsize=None)
def _polynomial_generators() -> tuple:
    """U-side counterparts of the four polynomial invariants a, b, c, d."""
    uh = from_gvector(lie.H_VEC)
    ue, uf = u_gen(lie.E), u_gen(lie.F)
    ue1, ue2 = u_gen(lie.E1), u_gen(lie.E2)
    uf1, uf2 = u_gen(lie.F1), u_gen(lie.F2)
    ua = from_gvector(lie.A_VEC)
    ub = uh * uh + 2 * (ue * uf + uf * ue)
    uc = ue1 * uf1 + ue2 * uf2
    ud = (
        2 * (ue * ue2 * uf1)
        + uh * ue1 * uf1
        - uh * ue2 * uf2
        + 2 * (uf * ue1 * uf2)
    )
    return ua, ub, uc, ud


@lru_cache(maxsize=None)
def cubic_element() -> UElement:
    """The degree-three central element, expressed through a, b, c, d lifts."""
    ua, ub, uc, ud = _polynomial_generators()
    return (
        Fraction(-3, 2) * ua ** 3
        + Fraction(3, 2) * (ua * ub)
        - 3 * (ua * uc)
        + Fraction(9, 2) * (ua * ua)
        - 3 * ua
        + 3 * ud
        - Fraction(3, 2) * ub
    )
