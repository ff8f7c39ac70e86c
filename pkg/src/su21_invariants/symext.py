"""The commutative model: S(g) tensor Lambda(p) with its k-action.

Keys of an element are pairs (exponent vector, exterior mask): the vector
has one slot per basis element of g, and the mask packs a subset of
{E1, E2, F1, F2} as four bits in that order.  Wedge signs are always
normalized to increasing mask order; total degree is symmetric degree
plus exterior degree.  The adjoint action of k extends the bracket as a
derivation on both tensor legs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import lie
from .lie import E, E1, E2, F, F1, F2, GVector, Weight

ZERO_EXPS = (0,) * 8
EXT_NAMES = ("E1", "E2", "F1", "F2")


def ext_bit(index: int) -> int:
    """Exterior mask bit of a p basis index."""
    return index - lie.E1


def _merge_sign(ma: int, mb: int) -> int:
    """Sign merging two disjoint sorted wedge words; 0 when they overlap."""
    if ma & mb:
        return 0
    inversions = 0
    for y in range(4):
        if mb >> y & 1:
            inversions += (ma >> (y + 1)).bit_count()
    return -1 if inversions & 1 else 1


class SymTensorElement:
    """Element of S(g) (x) Lambda(p); {(exponents, mask): coefficient}."""

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

    def degree(self):
        """Top total degree, or None for the zero element."""
        if not self.coeffs:
            return None
        return max(sum(e) + m.bit_count() for e, m in self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            w = out.get(key, 0) + v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
        return SymTensorElement(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SymTensorElement({k: -v for k, v in self.coeffs.items()})

    def _scaled(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return SymTensorElement()
        return SymTensorElement({k: scalar * v for k, v in self.coeffs.items()})

    def __rmul__(self, scalar):
        return self._scaled(scalar)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(other)
        out = {}
        for (ea, ma), ca in self.coeffs.items():
            for (eb, mb), cb in other.coeffs.items():
                sign = _merge_sign(ma, mb)
                if not sign:
                    continue
                key = (tuple(x + y for x, y in zip(ea, eb)), ma | mb)
                w = out.get(key, 0) + sign * ca * cb
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
        return SymTensorElement(out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SymTensorElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        from . import expr

        return "SymTensorElement(%s)" % expr.format_sym_tensor(self)


def scalar(c) -> SymTensorElement:
    return SymTensorElement({(ZERO_EXPS, 0): c})


def one() -> SymTensorElement:
    return scalar(1)


def zero() -> SymTensorElement:
    return SymTensorElement()


def sym_gen(i: int) -> SymTensorElement:
    """Basis vector of g placed in the symmetric leg."""
    exps = list(ZERO_EXPS)
    exps[i] = 1
    return SymTensorElement({(tuple(exps), 0): 1})


def ext_gen(i: int) -> SymTensorElement:
    """Basis vector of p placed in the exterior leg."""
    if i not in lie.P_SET:
        raise ValueError("exterior generators come from p")
    return SymTensorElement({(ZERO_EXPS, 1 << ext_bit(i)): 1})


def from_gvector(v: GVector) -> SymTensorElement:
    out = zero()
    for i, c in v.coeffs.items():
        out = out + c * sym_gen(i)
    return out


def key_weight(key) -> Weight:
    exps, mask = key
    a = Fraction(0)
    b = Fraction(0)
    for i, e in enumerate(exps):
        if e:
            w = lie.weight_of(i)
            a += e * w.h1
            b += e * w.h2
    for k in range(4):
        if mask >> k & 1:
            w = lie.weight_of(lie.E1 + k)
            a += w.h1
            b += w.h2
    return Weight(a, b)


def ad_action(z: GVector, x: SymTensorElement) -> SymTensorElement:
    """Derivation extension of the bracket to both tensor legs.

    On the exterior leg only the k-part of the action makes sense; a z
    whose bracket pushes an exterior letter out of p raises ValueError.
    """
    img = [None] * 8
    for i, _ in enumerate(img):
        acc = {}
        for zi, zc in z.coeffs.items():
            for k, c in lie.BRACKET_TABLE[zi][i].coeffs.items():
                w = acc.get(k, 0) + zc * c
                if w:
                    acc[k] = w
                else:
                    acc.pop(k, None)
        img[i] = acc

    out = {}

    def put(key, v):
        w = out.get(key, 0) + v
        if w:
            out[key] = w
        else:
            out.pop(key, None)

    for (exps, mask), q in x.coeffs.items():
        for i, e in enumerate(exps):
            if not e:
                continue
            for j, u in img[i].items():
                new = list(exps)
                new[i] -= 1
                new[j] += 1
                put((tuple(new), mask), q * e * u)
        for k in range(4):
            if not (mask >> k & 1):
                continue
            for j, u in img[lie.E1 + k].items():
                if j not in lie.P_SET:
                    raise ValueError(
                        "adjoint action on the exterior leg requires a k-element"
                    )
                jb = ext_bit(j)
                if jb == k:
                    put((exps, mask), q * u)
                elif mask >> jb & 1:
                    continue
                else:
                    lo, hi = (k, jb) if k < jb else (jb, k)
                    between = ((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1)
                    crossings = ((mask ^ (1 << k)) & between).bit_count()
                    sign = -1 if crossings & 1 else 1
                    put((exps, (mask ^ (1 << k)) | (1 << jb)), q * u * sign)
    return SymTensorElement(out)


def weight_component(x: SymTensorElement, w) -> SymTensorElement:
    target = Weight(Fraction(w[0]), Fraction(w[1]))
    return SymTensorElement(
        {key: v for key, v in x.coeffs.items() if key_weight(key) == target}
    )


# Order and total degrees of the sixteen products that complement the
# polynomial generators a, b, c, d.
T_ORDER = (
    "1", "e", "f", "g", "h", "i", "j",
    "ef", "eg", "fg", "g^2", "ei", "ej", "fh", "fi", "fj",
)
T_DEGREES = {
    "1": 0, "e": 2, "f": 2, "g": 2, "h": 3, "i": 3, "j": 3,
    "ef": 4, "eg": 4, "fg": 4, "g^2": 4,
    "ei": 5, "ej": 5, "fh": 5, "fi": 5, "fj": 5,
}
S_DEGREES = (1, 2, 2, 3)  # degrees of a, b, c, d


@dataclass
class InvariantGenerators:
    """The ten invariants generating the K-invariant subalgebra."""

    a: SymTensorElement
    b: SymTensorElement
    c: SymTensorElement
    d: SymTensorElement
    e: SymTensorElement
    f: SymTensorElement
    g: SymTensorElement
    h: SymTensorElement
    i: SymTensorElement
    j: SymTensorElement

    def as_dict(self):
        return {
            "a": self.a, "b": self.b, "c": self.c, "d": self.d, "e": self.e,
            "f": self.f, "g": self.g, "h": self.h, "i": self.i, "j": self.j,
        }

    def t_products(self):
        """The sixteen module generators over C[a,b,c,d], in fixed order."""
        by_name = self.as_dict()
        out = []
        for name in T_ORDER:
            if name == "1":
                out.append((name, one()))
            elif name == "g^2":
                out.append((name, self.g * self.g))
            elif len(name) == 1:
                out.append((name, by_name[name]))
            else:
                out.append((name, by_name[name[0]] * by_name[name[1]]))
        return out

    def s_monomial(self, n1: int, n2: int, n3: int, n4: int) -> SymTensorElement:
        return self.a ** n1 * self.b ** n2 * self.c ** n3 * self.d ** n4


@lru_cache(maxsize=None)
def named_invariants() -> InvariantGenerators:
    h = from_gvector(lie.H_VEC)
    ea = from_gvector(lie.A_VEC)
    se, sf = sym_gen(E), sym_gen(F)
    se1, se2 = sym_gen(E1), sym_gen(E2)
    sf1, sf2 = sym_gen(F1), sym_gen(F2)
    we1, we2 = ext_gen(E1), ext_gen(E2)
    wf1, wf2 = ext_gen(F1), ext_gen(F2)

    a = ea
    b = h * h + 4 * (se * sf)
    c = se1 * sf1 + se2 * sf2
    d = 2 * (se * se2 * sf1) + h * se1 * sf1 - h * se2 * sf2 + 2 * (sf * se1 * sf2)
    e = sf1 * we1 + sf2 * we2
    f = se1 * wf1 + se2 * wf2
    g = we1 * wf1 + we2 * wf2
    h_inv = (2 * (se * se2) + h * se1) * wf1 + (-(h * se2) + 2 * (sf * se1)) * wf2
    i_inv = (
        2 * (se * (we2 * wf1))
        + h * (we1 * wf1)
        - h * (we2 * wf2)
        + 2 * (sf * (we1 * wf2))
    )
    j_inv = (h * sf1 + 2 * (sf * sf2)) * we1 + (2 * (se * sf1) - h * sf2) * we2
    return InvariantGenerators(a, b, c, d, e, f, g, h_inv, i_inv, j_inv)
