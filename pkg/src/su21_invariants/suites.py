"""Named verification suites driven by the command line interface."""

from __future__ import annotations

import time

from . import dirac, invariants, lie
from .report import CheckResult, VerificationReport, merge_reports

DEFAULT_MAX_DEGREE = 8
DEFAULT_MAX_FILTRATION = 4
DEFAULT_IDEAL_BOUND = 3

# The twelve bracket relations of the Cartan generators against the rest.
_CARTAN_TABLE = (
    (lie.H1, lie.E1, {lie.E1: 1}),
    (lie.H2, lie.E1, {}),
    (lie.H1, lie.E2, {}),
    (lie.H2, lie.E2, {lie.E2: 1}),
    (lie.H1, lie.F1, {lie.F1: -1}),
    (lie.H2, lie.F1, {}),
    (lie.H1, lie.F2, {}),
    (lie.H2, lie.F2, {lie.F2: -1}),
    (lie.H1, lie.E, {lie.E: 1}),
    (lie.H2, lie.E, {lie.E: -1}),
    (lie.H1, lie.F, {lie.F: -1}),
    (lie.H2, lie.F, {lie.F: 1}),
)


def _suite_lie(config) -> VerificationReport:
    checks = []
    basis = [lie.gvec(i) for i in range(lie.DIM)]

    bad = sum(
        1
        for x in basis
        for y in basis
        if not (lie.bracket(x, y) + lie.bracket(y, x)).is_zero()
    )
    checks.append(
        CheckResult(
            "antisymmetry",
            "[x,y] + [y,x] = 0 on all 64 basis pairs",
            bad == 0,
            None if bad == 0 else "%d failing pairs" % bad,
        )
    )

    bad = 0
    for x in basis:
        for y in basis:
            for z in basis:
                s = (
                    lie.bracket(x, lie.bracket(y, z))
                    + lie.bracket(y, lie.bracket(z, x))
                    + lie.bracket(z, lie.bracket(x, y))
                )
                if not s.is_zero():
                    bad += 1
    checks.append(
        CheckResult(
            "jacobi",
            "Jacobi identity on all 512 basis triples",
            bad == 0,
            None if bad == 0 else "%d failing triples" % bad,
        )
    )

    bad = [
        "[%s,%s]" % (lie.BASIS_NAMES[i], lie.BASIS_NAMES[j])
        for i, j, expect in _CARTAN_TABLE
        if lie.bracket(lie.gvec(i), lie.gvec(j)) != lie.GVector(expect)
    ]
    checks.append(
        CheckResult(
            "cartan-brackets",
            "the twelve Cartan bracket relations hold",
            not bad,
            ", ".join(bad) if bad else None,
        )
    )

    bad = sum(
        1
        for i in range(lie.DIM)
        for j in range(lie.DIM)
        if lie.trace_form(basis[i], basis[j])
        != lie.mat_trace(lie.mat_mul(lie.BASIS_MATRICES[i], lie.BASIS_MATRICES[j]))
    )
    checks.append(
        CheckResult(
            "trace-form",
            "B(x,y) = tr(xy) for the defining matrices on all pairs",
            bad == 0,
        )
    )

    bad = 0
    for x in basis:
        for y in basis:
            for z in basis:
                if lie.trace_form(lie.bracket(x, y), z) + lie.trace_form(
                    y, lie.bracket(x, z)
                ):
                    bad += 1
    checks.append(
        CheckResult(
            "b-invariance",
            "B([x,y],z) + B(y,[x,z]) = 0 on all triples",
            bad == 0,
        )
    )

    ok = True
    for x in basis:
        if lie.cartan_involution(lie.cartan_involution(x)) != x:
            ok = False
        for y in basis:
            if lie.cartan_involution(lie.bracket(x, y)) != lie.bracket(
                lie.cartan_involution(x), lie.cartan_involution(y)
            ):
                ok = False
    for i in lie.K_INDICES:
        for j in lie.K_INDICES:
            ok = ok and lie.BRACKET_TABLE[i][j].in_span(lie.K_INDICES)
        for j in lie.P_INDICES:
            ok = ok and lie.BRACKET_TABLE[i][j].in_span(lie.P_INDICES)
    for i in lie.P_INDICES:
        for j in lie.P_INDICES:
            ok = ok and lie.BRACKET_TABLE[i][j].in_span(lie.K_INDICES)
    for i in lie.K_INDICES:
        for j in lie.P_INDICES:
            ok = ok and lie.trace_form(lie.gvec(i), lie.gvec(j)) == 0
    checks.append(
        CheckResult(
            "cartan-involution",
            "theta is an involutive automorphism; [k,k],[p,p] in k,"
            " [k,p] in p, and B(k,p) = 0",
            ok,
        )
    )
    return VerificationReport("lie", {}, checks)


def _suite_lemmas(config) -> VerificationReport:
    reports = [invariants.verify_sym_k_decomposition(n) for n in range(2, 7)]
    reports += [invariants.verify_sym_p_decomposition(n) for n in range(2, 6)]
    return merge_reports("lemmas", {}, reports)


def run_suite(name: str, max_degree=None, max_filtration=None) -> VerificationReport:
    """Run one named suite (or 'all'); deterministic given its bounds."""
    if max_degree is not None and max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if max_filtration is not None and max_filtration < 0:
        raise ValueError("max_filtration must be nonnegative")
    max_degree = DEFAULT_MAX_DEGREE if max_degree is None else max_degree
    runners = {
        "lie": lambda: _suite_lie({}),
        "lemmas": lambda: _suite_lemmas({}),
        "table": lambda: invariants.verify_table(max_degree),
        "st-basis": lambda: invariants.verify_product_basis(max_degree),
        "sigma-tau": dirac.verify_sigma_tau_table,
        "reduction": dirac.verify_reduction_identities,
        "dirac-square": dirac.verify_dirac_square,
        "dk": dirac.verify_dk_identity,
        "abelian": dirac.verify_abelian_commutators,
        "casimir": dirac.verify_casimir_expressions,
        "uc-basis": lambda: invariants.verify_lifted_basis_slice(
            DEFAULT_MAX_FILTRATION if max_filtration is None else max_filtration
        ),
        "ideal-slice": lambda: invariants.verify_ideal_slice(
            DEFAULT_IDEAL_BOUND if max_filtration is None else max_filtration
        ),
    }
    if name == "all":
        reports = []
        for key in runners:
            reports.append(run_suite(key, max_degree, max_filtration))
        config = {"max_degree": max_degree}
        if max_filtration is not None:
            config["max_filtration"] = max_filtration
        return merge_reports("all", config, reports)
    if name not in runners:
        raise ValueError(
            "unknown suite %r (choose from %s)"
            % (name, ", ".join(list(runners) + ["all"]))
        )
    start = time.perf_counter()
    rep = runners[name]()
    rep.elapsed = time.perf_counter() - start
    return rep


SUITE_NAMES = (
    "lie", "lemmas", "table", "st-basis", "sigma-tau", "reduction",
    "dirac-square", "dk", "abelian", "casimir", "uc-basis", "ideal-slice",
    "all",
)
