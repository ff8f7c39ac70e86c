"""Structure data for sl(3,C) as the complexified Lie algebra of SU(2,1).

The ordered basis, fixed once and for all (it is also the normal-form
ordering used by the enveloping algebra), is

    H1, H2, E, F,   E1, E2, F1, F2

with H1, H2 spanning the diagonal Cartan subalgebra, E, F completing
k = span{H1, H2, E, F} (the complexified maximal compact subalgebra), and
E1, E2, F1, F2 spanning p, the -1 eigenspace of the Cartan involution.

Structure constants and the trace form B(x, y) = tr(xy) are generated at
import time from the defining 3x3 matrices and then frozen; downstream
modules consume only the tables.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

H1, H2, E, F, E1, E2, F1, F2 = range(8)
BASIS_NAMES = ("H1", "H2", "E", "F", "E1", "E2", "F1", "F2")
K_INDICES = (H1, H2, E, F)
P_INDICES = (E1, E2, F1, F2)
K_SET = frozenset(K_INDICES)
P_SET = frozenset(P_INDICES)
DIM = len(BASIS_NAMES)


def _unit(r, c):
    return tuple(
        tuple(Fraction(1 if (i, j) == (r, c) else 0) for j in range(3))
        for i in range(3)
    )


def _diag(a, b, c):
    vals = (Fraction(a), Fraction(b), Fraction(c))
    return tuple(
        tuple(vals[i] if i == j else Fraction(0) for j in range(3))
        for i in range(3)
    )


BASIS_MATRICES = (
    _diag(Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)),  # H1
    _diag(Fraction(-1, 3), Fraction(2, 3), Fraction(-1, 3)),  # H2
    _unit(0, 1),  # E
    _unit(1, 0),  # F
    _unit(0, 2),  # E1
    _unit(1, 2),  # E2
    _unit(2, 0),  # F1
    _unit(2, 1),  # F2
)


def mat_mul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_sub(x, y):
    return tuple(tuple(x[i][j] - y[i][j] for j in range(3)) for i in range(3))


def mat_trace(x):
    return x[0][0] + x[1][1] + x[2][2]


class GVector:
    """Element of sl(3,C) over the fixed basis; zero coefficients absent."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        for i, v in (coeffs or {}).items():
            v = Fraction(v)
            if v:
                data[i] = v
        self.coeffs = data

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            w = out.get(i, 0) + v
            if w:
                out[i] = w
            else:
                out.pop(i, None)
        return GVector(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GVector({i: -v for i, v in self.coeffs.items()})

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return GVector({i: scalar * v for i, v in self.coeffs.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, GVector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def in_span(self, indices) -> bool:
        allowed = set(indices)
        return all(i in allowed for i in self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "GVector(0)"
        parts = []
        for i in sorted(self.coeffs):
            v = self.coeffs[i]
            parts.append("%s*%s" % (v, BASIS_NAMES[i]) if v != 1 else BASIS_NAMES[i])
        return "GVector(%s)" % " + ".join(parts)


def gvec(i: int) -> GVector:
    return GVector({i: 1})


def matrix_of(v: GVector):
    acc = [[Fraction(0)] * 3 for _ in range(3)]
    for i, c in v.coeffs.items():
        m = BASIS_MATRICES[i]
        for r in range(3):
            for s in range(3):
                acc[r][s] += c * m[r][s]
    return tuple(tuple(row) for row in acc)


def from_matrix(m) -> GVector:
    """Express a traceless 3x3 matrix in the fixed basis, exactly."""
    v = GVector(
        {
            H1: 2 * m[0][0] + m[1][1],
            H2: m[0][0] + 2 * m[1][1],
            E: m[0][1],
            F: m[1][0],
            E1: m[0][2],
            E2: m[1][2],
            F1: m[2][0],
            F2: m[2][1],
        }
    )
    if matrix_of(v) != tuple(tuple(Fraction(x) for x in row) for row in m):
        raise ValueError("matrix is not in sl(3)")
    return v


def _build_tables():
    brackets = []
    form = []
    for i in range(DIM):
        brow = []
        frow = []
        for j in range(DIM):
            mi, mj = BASIS_MATRICES[i], BASIS_MATRICES[j]
            brow.append(from_matrix(mat_sub(mat_mul(mi, mj), mat_mul(mj, mi))))
            frow.append(mat_trace(mat_mul(mi, mj)))
        brackets.append(tuple(brow))
        form.append(tuple(frow))
    return tuple(brackets), tuple(form)


BRACKET_TABLE, FORM_TABLE = _build_tables()

# H = H1 - H2 is the coroot of the semisimple part of k; a = H1 + H2 spans
# the center of k.
H_VEC = GVector({H1: 1, H2: -1})
A_VEC = GVector({H1: 1, H2: 1})


def bracket(x: GVector, y: GVector) -> GVector:
    out = {}
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            ab = a * b
            for k, c in BRACKET_TABLE[i][j].coeffs.items():
                w = out.get(k, 0) + ab * c
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
    return GVector(out)


def trace_form(x: GVector, y: GVector) -> Fraction:
    total = Fraction(0)
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            total += a * b * FORM_TABLE[i][j]
    return total


def cartan_involution(x: GVector) -> GVector:
    return GVector(
        {i: (v if i in K_SET else -v) for i, v in x.coeffs.items()}
    )


class Weight(NamedTuple):
    """Simultaneous eigenvalue pair for the adjoint action of H1 and H2."""

    h1: Fraction
    h2: Fraction


WEIGHTS = tuple(
    Weight(
        BRACKET_TABLE[H1][i].coeffs.get(i, Fraction(0)),
        BRACKET_TABLE[H2][i].coeffs.get(i, Fraction(0)),
    )
    for i in range(DIM)
)


def weight_of(i: int) -> Weight:
    return WEIGHTS[i]
