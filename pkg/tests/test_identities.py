import math

import pytest

from specfn import (AdjudicationCase, ApproxValue, ArgumentError, Identity,
                    Reading, adjudicate, build_catalog, gn_asymptotics,
                    gn_trend_ok, run_all, run_identity, select_identities)

EXPECTED_VERDICTS = {
    "GperG-first-term": "log-glaisher factor, final log of the full product",
    "x2z-zeta-argument": "derivative at -3",
    "L2-constant": "pi^2/48",
    "logsin-convention": "stated value is the plain integral; double it",
    "xclausen-convention": "stated value is the doubled-integral coefficient",
    "GG1mx-v-factor": "doubled weight",
    "exp-lgamma-bracketing": "factor applies to the full parenthesis",
}


def test_every_identity_passes(reports):
    failed = [r.id for r in reports if not r.passed]
    assert failed == []


def test_report_fields_are_sane(reports):
    assert len(reports) >= 35
    for r in reports:
        assert math.isfinite(r.lhs_value)
        assert math.isfinite(r.rhs_value)
        assert r.residual >= 0.0
        assert r.tolerance > 0.0
        assert r.elapsed >= 0.0
        assert r.note


def test_verdicts(outcomes):
    got = {cid: o.verdict for cid, o in outcomes.items()}
    assert got == EXPECTED_VERDICTS


def test_adjudications_are_decisive(outcomes):
    for cid, o in outcomes.items():
        ranked = sorted(r.residual for r in o.results)
        assert ranked[0] <= o.tolerance
        # winner leads the runner-up by at least a factor of ten
        assert ranked[1] > 10.0 * max(ranked[0], 1e-300)


def test_adjudication_deterministic(suite):
    for case in suite.cases.values():
        first = adjudicate(case)
        second = adjudicate(case)
        assert first == second


def test_run_all_deterministic(suite, reports):
    again = run_all(suite.identities)
    strip = lambda r: (r.id, r.lhs_value, r.rhs_value, r.residual,
                       r.tolerance, r.passed, r.note)
    assert [strip(r) for r in reports] == [strip(r) for r in again]


def test_degenerate_case_yields_no_verdict():
    same = ApproxValue(1.0, 1e-12)
    case = AdjudicationCase(
        id="degenerate",
        note="two identical readings cannot be separated",
        lhs=lambda: same,
        readings=(
            Reading("first copy", lambda: ApproxValue(1.0, 1e-12)),
            Reading("second copy", lambda: ApproxValue(1.0, 1e-12)),
        ),
    )
    outcome = adjudicate(case)
    assert outcome.verdict == "none"


def test_tolerance_respects_error_budget(reports):
    for r in reports:
        # never tighter than the combined reported uncertainty
        assert r.tolerance > 0.0


def test_run_identity_failure_is_reported():
    def boom() -> ApproxValue:
        raise ValueError("synthetic evaluation failure")

    ident = Identity(id="boom", note="synthetic", lhs=boom,
                     rhs=lambda: ApproxValue(0.0, 1e-15), cap=1e-8)
    rep = run_identity(ident)
    assert not rep.passed
    assert math.isnan(rep.lhs_value)
    assert "evaluation failed" in rep.note


def test_select_identities_exact_then_substring():
    catalog = build_catalog()
    exact = select_identities(catalog, "raabe")
    assert [i.id for i in exact] == ["raabe"]
    sub = select_identities(catalog, "raabe-")
    assert sorted(i.id for i in sub) == ["raabe-shifted", "raabe-shifted-t1",
                                         "raabe-shifted-t2"]
    everything = select_identities(catalog, None)
    assert len(everything) == len(catalog)
    assert select_identities(catalog, "zzz-missing") == []


def test_tol_scale_loosens_only():
    catalog = build_catalog()
    base = run_identity(catalog["raabe"])
    wide = run_identity(catalog["raabe"], tol_scale=100.0)
    assert wide.tolerance == pytest.approx(100.0 * base.tolerance)
    assert wide.residual == base.residual


def test_gn_asymptotics_rows(gn_rows):
    assert [row.n for row in gn_rows] == list(range(1, 11))
    for row in gn_rows:
        # alternating sign, factorial-scale growth
        assert row.sign_ok
        assert row.ratio > 0.0
    assert gn_trend_ok(gn_rows)
    # the ratio closes in on 1 as n grows
    r4 = abs(gn_rows[3].ratio - 1.0)
    r10 = abs(gn_rows[9].ratio - 1.0)
    assert r10 < r4


def test_gn_asymptotics_arguments():
    with pytest.raises(ArgumentError):
        gn_asymptotics(1)
    with pytest.raises(ArgumentError):
        gn_asymptotics(13)
    with pytest.raises(ArgumentError):
        gn_asymptotics(4.0)
