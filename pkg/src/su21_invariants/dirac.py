"""The tensor product of U(sl3) with the Clifford algebra of p.

An element pairs a PBW monomial with a Clifford blade; the two tensor legs
commute with each other, so multiplication is componentwise.  This module
builds the distinguished K-invariant elements -- the lifts of the
commutative generators a..j, the Dirac operator D and its k-analogue --
and runs the exact identity suites tying them together:

  * the ten symmetrization/Chevalley transfer identities,
  * the six identities reducing the generating set to five elements,
  * the formula for D^2 against the Casimir of the diagonal copy of k,
  * the explicit form of the k-Dirac element,
  * commutativity of the subalgebra generated by the four elements that
    survive modulo the ideal generated by D,
  * the expressions of the two central elements of U(sl3).

Everything is exact rational arithmetic; a failed check reports the full
residual element, which is what localizes a convention error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import clifford as cl
from . import enveloping as env
from . import lie
from . import symext
from .lie import GVector
from .report import CheckResult, VerificationReport

ZERO_EXPS = (0,) * 8


class UCElement:
    """Element of U(sl3) (x) C(p): {(PBW exponents, blade mask): coefficient}."""

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
        return max(sum(e) + m.bit_count() for e, m in self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for key, v in other.coeffs.items():
            w = out.get(key, 0) + v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
        return UCElement(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UCElement({k: -v for k, v in self.coeffs.items()})

    def _scaled(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return UCElement()
        return UCElement({k: scalar * v for k, v in self.coeffs.items()})

    def __rmul__(self, scalar):
        return self._scaled(scalar)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(other)
        out = {}
        for (ea, ma), ca in self.coeffs.items():
            for (eb, mb), cb in other.coeffs.items():
                q = ca * cb
                for ue, uc in env.pbw_product_items(ea, eb):
                    quc = q * uc
                    for cm, cc in cl.clifford_product_items(ma, mb):
                        key = (ue, cm)
                        w = out.get(key, 0) + quc * cc
                        if w:
                            out[key] = w
                        else:
                            out.pop(key, None)
        return UCElement(out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = uc_one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, UCElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        from . import expr

        return "UCElement(%s)" % expr.format_uc(self)


def uc_scalar(c) -> UCElement:
    return UCElement({(ZERO_EXPS, 0): c})


def uc_one() -> UCElement:
    return uc_scalar(1)


def embed_u(x: env.UElement) -> UCElement:
    return UCElement({(k, 0): v for k, v in x.coeffs.items()})


def embed_c(x: cl.CElement) -> UCElement:
    return UCElement({(ZERO_EXPS, m): v for m, v in x.coeffs.items()})


def clifford_component(x: UCElement, mask: int) -> env.UElement:
    """The U-leg coefficient of one Clifford blade."""
    return env.UElement({e: v for (e, m), v in x.coeffs.items() if m == mask})


def sigma_tau(x: symext.SymTensorElement) -> UCElement:
    """Symmetrize the symmetric leg, Chevalley-map the exterior leg."""
    out = {}
    for (exps, mask), q in x.coeffs.items():
        for ue, uc in env._symmetrize_items(exps):
            quc = q * uc
            for cm, cc in cl.chevalley_mask(mask).coeffs.items():
                key = (ue, cm)
                w = out.get(key, 0) + quc * cc
                if w:
                    out[key] = w
                else:
                    out.pop(key, None)
    return UCElement(out)


def diagonal_embed(z: GVector) -> UCElement:
    """z (x) 1 + 1 (x) alpha(z), the diagonal copy of k."""
    return embed_u(env.from_gvector(z)) + embed_c(cl.alpha(z))


def diagonal_action(z: GVector, x: UCElement) -> UCElement:
    d = diagonal_embed(z)
    return d * x - x * d


def _pair_gens(u_vec: GVector, c_vec: GVector) -> UCElement:
    return embed_u(env.from_gvector(u_vec)) * embed_c(cl.from_p_gvector(c_vec))


def dirac_from_dual_pairs(pairs) -> UCElement:
    """Sum b_i (x) d_i over a trace-form-dual pair of bases of p."""
    vecs = [p[0] for p in pairs]
    duals = [p[1] for p in pairs]
    for i, v in enumerate(vecs):
        for j, d in enumerate(duals):
            want = Fraction(1 if i == j else 0)
            if lie.trace_form(v, d) != want:
                raise ValueError("bases are not dual for the trace form")
    out = UCElement()
    for v, d in pairs:
        out = out + _pair_gens(v, d)
    return out


@lru_cache(maxsize=None)
def dirac_operator() -> UCElement:
    pairs = [
        (lie.gvec(lie.E1), lie.gvec(lie.F1)),
        (lie.gvec(lie.E2), lie.gvec(lie.F2)),
        (lie.gvec(lie.F1), lie.gvec(lie.E1)),
        (lie.gvec(lie.F2), lie.gvec(lie.E2)),
    ]
    return dirac_from_dual_pairs(pairs)


@lru_cache(maxsize=None)
def k_dual_pairs() -> tuple:
    """The trace-form-dual pair of bases of k used for diagonal sums."""
    pairs = (
        (lie.gvec(lie.E), lie.gvec(lie.F)),
        (lie.gvec(lie.F), lie.gvec(lie.E)),
        (lie.H_VEC, Fraction(1, 2) * lie.H_VEC),
        (lie.A_VEC, Fraction(3, 2) * lie.A_VEC),
    )
    for i, (v, _) in enumerate(pairs):
        for j, (_, d) in enumerate(pairs):
            if lie.trace_form(v, d) != Fraction(1 if i == j else 0):
                raise AssertionError("k dual pairs are not dual")
    return pairs


def diagonal_casimir(pairs=None) -> UCElement:
    if pairs is None:
        pairs = k_dual_pairs()
    out = UCElement()
    for z, zd in pairs:
        out = out + diagonal_embed(z) * diagonal_embed(zd)
    return out


def dk_element(pairs=None) -> UCElement:
    """The k-analogue of the Dirac element: sum z_i (x) alpha(dual z_i)."""
    if pairs is None:
        pairs = k_dual_pairs()
    out = UCElement()
    for z, zd in pairs:
        out = out + embed_u(env.from_gvector(z)) * embed_c(cl.alpha(zd))
    return out


def _cartan_dual_of_weight(w) -> GVector:
    """The Cartan element pairing to the given weight via the trace form."""
    b11 = lie.FORM_TABLE[lie.H1][lie.H1]
    b12 = lie.FORM_TABLE[lie.H1][lie.H2]
    b22 = lie.FORM_TABLE[lie.H2][lie.H2]
    det = b11 * b22 - b12 * b12
    a, b = Fraction(w[0]), Fraction(w[1])
    x = (b22 * a - b12 * b) / det
    y = (b11 * b - b12 * a) / det
    return GVector({lie.H1: x, lie.H2: y})


def _half_sum_norm_sq(raising_indices) -> Fraction:
    s1 = Fraction(0)
    s2 = Fraction(0)
    for i in raising_indices:
        w = lie.weight_of(i)
        s1 += w.h1
        s2 += w.h2
    rho = (Fraction(1, 2) * s1, Fraction(1, 2) * s2)
    v = _cartan_dual_of_weight(rho)
    return lie.trace_form(v, v)


def rho_g_norm_sq() -> Fraction:
    """Squared trace-form norm of the half sum of the positive g-weights."""
    return _half_sum_norm_sq((lie.E, lie.E1, lie.E2))


def rho_k_norm_sq() -> Fraction:
    """Squared trace-form norm of the half sum of the positive k-weights."""
    return _half_sum_norm_sq((lie.E,))


@dataclass
class LiftedInvariants:
    """Lifts of the ten commutative invariants to U(sl3) (x) C(p)."""

    a: UCElement
    b: UCElement
    c: UCElement
    d: UCElement
    e: UCElement
    f: UCElement
    g: UCElement
    h: UCElement
    i: UCElement
    j: UCElement

    def as_dict(self):
        return {
            "a": self.a, "b": self.b, "c": self.c, "d": self.d, "e": self.e,
            "f": self.f, "g": self.g, "h": self.h, "i": self.i, "j": self.j,
        }

    def t_products(self):
        by_name = self.as_dict()
        out = []
        for name in symext.T_ORDER:
            if name == "1":
                out.append((name, uc_one()))
            elif name == "g^2":
                out.append((name, self.g * self.g))
            elif len(name) == 1:
                out.append((name, by_name[name]))
            else:
                out.append((name, by_name[name[0]] * by_name[name[1]]))
        return out

    def s_monomial(self, n1, n2, n3, n4) -> UCElement:
        return self.a ** n1 * self.b ** n2 * self.c ** n3 * self.d ** n4


@lru_cache(maxsize=None)
def lifted_generators() -> LiftedInvariants:
    uh = env.from_gvector(lie.H_VEC)
    ua = env.from_gvector(lie.A_VEC)
    ue, uf = env.u_gen(lie.E), env.u_gen(lie.F)
    ue1, ue2 = env.u_gen(lie.E1), env.u_gen(lie.E2)
    uf1, uf2 = env.u_gen(lie.F1), env.u_gen(lie.F2)
    ce1, ce2 = cl.c_gen(lie.E1), cl.c_gen(lie.E2)
    cf1, cf2 = cl.c_gen(lie.F1), cl.c_gen(lie.F2)

    a = embed_u(ua)
    b = embed_u(uh * uh + 2 * (ue * uf + uf * ue))
    c = embed_u(ue1 * uf1 + ue2 * uf2)
    d = embed_u(
        2 * (ue * ue2 * uf1)
        + uh * ue1 * uf1
        - uh * ue2 * uf2
        + 2 * (uf * ue1 * uf2)
    )
    e = embed_u(uf1) * embed_c(ce1) + embed_u(uf2) * embed_c(ce2)
    f = embed_u(ue1) * embed_c(cf1) + embed_u(ue2) * embed_c(cf2)
    g = embed_c(ce1 * cf1 + ce2 * cf2)
    h = embed_u(2 * (ue * ue2) + uh * ue1) * embed_c(cf1) + embed_u(
        -(uh * ue2) + 2 * (uf * ue1)
    ) * embed_c(cf2)
    i = (
        2 * (embed_u(ue) * embed_c(ce2 * cf1))
        + embed_u(uh) * embed_c(ce1 * cf1)
        - embed_u(uh) * embed_c(ce2 * cf2)
        + 2 * (embed_u(uf) * embed_c(ce1 * cf2))
    )
    j = embed_u(uh * uf1 + 2 * (uf * uf2)) * embed_c(ce1) + embed_u(
        2 * (ue * uf1) - uh * uf2
    ) * embed_c(ce2)
    return LiftedInvariants(a, b, c, d, e, f, g, h, i, j)


def _residual_check(check_id, anchor, lhs, rhs) -> CheckResult:
    from . import expr

    diff = lhs - rhs
    if diff.is_zero():
        return CheckResult(check_id, anchor, True)
    return CheckResult(check_id, anchor, False, expr.format_uc(diff))


def verify_sigma_tau_table() -> VerificationReport:
    """The ten transfer identities between the commutative generators and
    their lifts."""
    gens = symext.named_invariants()
    lift = lifted_generators()
    half = Fraction(1, 2)
    targets = {
        "a": (lift.a, "a~"),
        "b": (lift.b, "b~"),
        "c": (lift.c - Fraction(3, 2) * lift.a, "c~ - 3/2 a~"),
        "d": (
            lift.d - half * lift.b - Fraction(3, 2) * lift.a,
            "d~ - 1/2 b~ - 3/2 a~",
        ),
        "e": (lift.e, "e~"),
        "f": (lift.f, "f~"),
        "g": (lift.g + 2 * uc_one(), "g~ + 2"),
        "h": (lift.h - Fraction(3, 2) * lift.f, "h~ - 3/2 f~"),
        "i": (lift.i, "i~"),
        "j": (lift.j + Fraction(3, 2) * lift.e, "j~ + 3/2 e~"),
    }
    checks = []
    for name, src in gens.as_dict().items():
        target, label = targets[name]
        checks.append(
            _residual_check(
                "sigma-tau-%s" % name,
                "(sigma x tau)(%s) = %s" % (name, label),
                sigma_tau(src),
                target,
            )
        )
    return VerificationReport("sigma-tau", {}, checks)


def verify_reduction_identities() -> VerificationReport:
    """The six identities expressing e~, f~, c~, h~, j~, d~ through the
    five-element generating set."""
    lift = lifted_generators()
    a, b, c = lift.a, lift.b, lift.c
    e, f, g = lift.e, lift.f, lift.g
    h, i, j = lift.h, lift.i, lift.j
    d = lift.d
    D = dirac_operator()
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    checks = [
        _residual_check(
            "reduce-e",
            "e~ = 1/2 (D + 1/2 D g~ - 1/2 g~ D)",
            e,
            half * (D + half * (D * g) - half * (g * D)),
        ),
        _residual_check(
            "reduce-f",
            "f~ = 1/2 (D - 1/2 D g~ + 1/2 g~ D)",
            f,
            half * (D - half * (D * g) + half * (g * D)),
        ),
        _residual_check(
            "reduce-c",
            "c~ = -1/4 (i~ + 2(e~ f~ + f~ e~) + 3 a~ g~)",
            c,
            -quarter * (i + 2 * (e * f + f * e) + 3 * (a * g)),
        ),
        _residual_check(
            "reduce-h",
            "h~ = 2(f~ c~ - c~ f~) - 3 a~ f~ + 6 f~",
            h,
            2 * (f * c - c * f) - 3 * (a * f) + 6 * f,
        ),
        _residual_check(
            "reduce-j",
            "j~ = 2(c~ e~ - e~ c~) - 3 a~ e~",
            j,
            2 * (c * e - e * c) - 3 * (a * e),
        ),
        _residual_check(
            "reduce-d",
            "d~ = 1/2 (-h~ e~ - e~ h~ + 2 c~ g~ - e~ f~ - 6 a~ g~"
            " - 1/2 b~ g~ - i~ - 3/2 a~ i~)",
            d,
            half
            * (
                -(h * e)
                - e * h
                + 2 * (c * g)
                - e * f
                - 6 * (a * g)
                - half * (b * g)
                - i
                - Fraction(3, 2) * (a * i)
            ),
        ),
    ]
    return VerificationReport("reduction", {}, checks)


def verify_dirac_square() -> VerificationReport:
    """D^2 against the Casimir elements and the derived rho norms."""
    checks = []
    rg = rho_g_norm_sq()
    rk = rho_k_norm_sq()
    checks.append(
        CheckResult(
            "rho-norms",
            "|rho_g|^2 = 2 and |rho_k|^2 = 1/2 under the trace form",
            rg == 2 and rk == Fraction(1, 2),
            None if (rg == 2 and rk == Fraction(1, 2)) else "got %s, %s" % (rg, rk),
        )
    )
    D = dirac_operator()
    lhs = D * D
    rhs = -(embed_u(env.casimir_omega()) + rg * uc_one()) + (
        diagonal_casimir() + rk * uc_one()
    )
    checks.append(
        _residual_check(
            "parthasarathy",
            "D^2 = -(Omega (x) 1 + |rho_g|^2) + (Cas_k_diag + |rho_k|^2)",
            lhs,
            rhs,
        )
    )
    return VerificationReport("dirac-square", {}, checks)


def verify_dk_identity() -> VerificationReport:
    """The explicit form of the k-Dirac element; pins the alpha scaling."""
    lift = lifted_generators()
    lhs = dk_element()
    rhs = -Fraction(1, 4) * (lift.i + 3 * (lift.a * lift.g)) - Fraction(3, 2) * lift.a
    checks = [
        _residual_check(
            "dk-identity",
            "D^k = -1/4 (i~ + 3 a~ g~) - 3/2 a~",
            lhs,
            rhs,
        )
    ]
    return VerificationReport("dk", {}, checks)


def verify_abelian_commutators() -> VerificationReport:
    """Pairwise commutators among a~, b~, g~, i~ vanish."""
    lift = lifted_generators()
    named = [("a", lift.a), ("b", lift.b), ("g", lift.g), ("i", lift.i)]
    checks = []
    for x in range(len(named)):
        for y in range(x + 1, len(named)):
            nx, ex = named[x]
            ny, ey = named[y]
            checks.append(
                _residual_check(
                    "commute-%s-%s" % (nx, ny),
                    "[%s~, %s~] = 0" % (nx, ny),
                    ex * ey,
                    ey * ex,
                )
            )
    return VerificationReport("abelian", {}, checks)


def verify_casimir_expressions() -> VerificationReport:
    """The quadratic and cubic central elements: expressions and centrality."""
    lift = lifted_generators()
    omega = env.casimir_omega()
    cub = env.cubic_element()
    checks = [
        _residual_check(
            "omega-expression",
            "Omega = 3/2 a~^2 + b~/2 + 2 c~ - 3 a~",
            embed_u(omega),
            Fraction(3, 2) * (lift.a * lift.a)
            + Fraction(1, 2) * lift.b
            + 2 * lift.c
            - 3 * lift.a,
        ),
        _residual_check(
            "cub-expression",
            "cub = -3/2 a~^3 + 3/2 a~ b~ - 3 a~ c~ + 9/2 a~^2 - 3 a~ + 3 d~ - 3/2 b~",
            embed_u(cub),
            Fraction(-3, 2) * lift.a ** 3
            + Fraction(3, 2) * (lift.a * lift.b)
            - 3 * (lift.a * lift.c)
            + Fraction(9, 2) * (lift.a * lift.a)
            - 3 * lift.a
            + 3 * lift.d
            - Fraction(3, 2) * lift.b,
        ),
    ]
    from . import expr

    for name, elt in (("omega", omega), ("cub", cub)):
        bad = []
        for gi in range(lie.DIM):
            com = env.u_commutator(elt, env.u_gen(gi))
            if not com.is_zero():
                bad.append("[%s, %s] = %s" % (name, lie.BASIS_NAMES[gi], expr.format_u(com)))
        checks.append(
            CheckResult(
                "%s-central" % name,
                "%s commutes with all eight generators" % name,
                not bad,
                "; ".join(bad) if bad else None,
            )
        )
    return VerificationReport("casimir", {}, checks)
