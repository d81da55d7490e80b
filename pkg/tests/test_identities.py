from fractions import Fraction

import pytest

from trigsum import (
    APPROXIMATE,
    EXACT,
    FAIL,
    INCONCLUSIVE,
    PASS,
    VerificationReport,
    builtin_catalog,
    corrected_candidates_validation,
    dedekind_def,
    sweep,
    verify_one,
)
from trigsum.identities import ROLE_PRINTED, ROLE_RANGE_PROBE, _judge, RULE_RELATIVE

ALL_IDS = [
    "EQ3", "EQ4", "EQ5", "EQ6", "EQ7", "EQ8", "EQ9", "EQ10", "EQ11", "EQ12",
    "EQ12B", "EQ13", "EQ14", "EQ15", "EQ16", "EQ17", "PARITY",
    "SECANT_K0", "SECANT_K1", "SINEPOW", "COSHALF",
]

MISPRINTS = {"EQ4", "EQ7", "EQ8", "EQ9", "EQ15", "EQ16"}


def test_catalog_covers_every_id_exactly_once():
    catalog = builtin_catalog()
    ids = [ident.id for ident in catalog]
    assert sorted(ids) == sorted(ALL_IDS)
    assert len(set(ids)) == len(ids)
    assert len(catalog) >= 18


def test_catalog_corrected_candidates_attached():
    by_id = {ident.id: ident for ident in builtin_catalog()}
    for ident_id in MISPRINTS:
        assert by_id[ident_id].corrected_rhs is not None
    for ident_id in set(ALL_IDS) - MISPRINTS:
        assert by_id[ident_id].corrected_rhs is None


def test_range_probe_roles():
    by_id = {ident.id: ident for ident in builtin_catalog()}
    assert by_id["SECANT_K0"].role == ROLE_RANGE_PROBE
    assert by_id["SECANT_K1"].role == ROLE_RANGE_PROBE
    for ident_id in set(ALL_IDS) - {"SECANT_K0", "SECANT_K1"}:
        assert by_id[ident_id].role == ROLE_PRINTED


class TestJudge:
    def test_exact_pass_requires_zero(self):
        status, residual, scale, _ = _judge(
            EXACT, RULE_RELATIVE, Fraction(1, 3), Fraction(1, 3)
        )
        assert status == PASS and residual == 0
        status, residual, _, _ = _judge(
            EXACT, RULE_RELATIVE, Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10**30)
        )
        assert status == FAIL

    def test_relative_thresholds(self):
        one = Fraction(1)
        status, _, _, _ = _judge(APPROXIMATE, RULE_RELATIVE, one, one + Fraction(1, 10**9))
        assert status == PASS
        status, _, _, _ = _judge(APPROXIMATE, RULE_RELATIVE, one, one + Fraction(1, 100))
        assert status == FAIL
        status, _, _, _ = _judge(APPROXIMATE, RULE_RELATIVE, one, one + Fraction(1, 10**5))
        assert status == INCONCLUSIVE

    def test_scale_floor_is_one(self):
        tiny = Fraction(1, 10**12)
        status, residual, scale, _ = _judge(APPROXIMATE, RULE_RELATIVE, tiny, Fraction(0))
        assert scale == 1
        assert status == PASS


@pytest.mark.parametrize(
    "ident_id, params, status",
    [
        ("EQ16", {"p": 3, "q": 1}, FAIL),   # -1/18 vs 17/18
        ("EQ8", {"p": 3, "q": 1}, FAIL),    # 0 vs 24
        ("EQ9", {"p": 3, "q": 4}, FAIL),    # -4 vs -3
        ("EQ15", {"p": 3}, FAIL),           # -2/3 vs 1
        ("EQ17", {"p": 7, "q": 3}, PASS),
        ("EQ3", {"p": 11, "q": 4}, PASS),
        ("EQ13", {"p": 9, "q": 10}, PASS),
        ("EQ10", {"p": 17}, PASS),
    ],
)
def test_verify_one_spot_checks(ident_id, params, status):
    verdict = verify_one(ident_id, params, 128)
    assert verdict.status == status


def test_verify_one_known_fail_values():
    v = verify_one("EQ16", {"p": 3, "q": 1}, 128)
    assert v.lhs == Fraction(-1, 18)
    assert v.rhs == Fraction(17, 18)
    assert v.corrected_status == PASS
    v8 = verify_one("EQ8", {"p": 3, "q": 1}, 128)
    assert v8.rhs == Fraction(24)
    assert v8.corrected_status == PASS


def test_verify_one_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_one("EQ99", {"p": 3}, 128)
    with pytest.raises(ValueError):
        verify_one("EQ17", {"p": 3}, 128)  # missing q
    with pytest.raises(ValueError):
        verify_one("EQ17", {"p": 4, "q": 2}, 128)  # not coprime: outside domain
    with pytest.raises(TypeError):
        verify_one("EQ17", {"p": 3.0, "q": 1}, 128)


def test_sweep_ordering_deterministic():
    rep = sweep(["EQ17", "EQ3"], 12, 128)
    keys = [(v.identity, v.params) for v in rep.verdicts]
    assert keys == sorted(keys, key=lambda t: (t[0] != "EQ3", t[1]))
    ids_seen = [v.identity for v in rep.verdicts]
    assert ids_seen.index("EQ3") < ids_seen.index("EQ17")


def test_sweep_errata_and_adjudication():
    rep = sweep(None, 15, 128)
    assert rep.errata() == ["EQ4", "EQ7", "EQ8", "EQ9", "EQ15", "EQ16"]
    assert rep.adjudications()["secant_power_sum_range"] == "from_k0"
    for v in rep.verdicts:
        assert v.status in (PASS, FAIL)  # nothing inconclusive at 128 bits


def test_secant_probes_decisive():
    rep = sweep(["SECANT_K0", "SECANT_K1"], 15, 128)
    k0 = [v for v in rep.verdicts if v.identity == "SECANT_K0"]
    k1 = [v for v in rep.verdicts if v.identity == "SECANT_K1"]
    assert k0 and k1 and len(k0) == len(k1)
    assert all(v.status == PASS for v in k0)
    assert all(v.status == FAIL for v in k1)


def test_eq12b_encloses_exact_dedekind():
    # the scaled trigonometric pair sum must enclose the exact rational
    # Dedekind sum for every coprime pair up to 40
    count = 0
    for v in sweep(["EQ12B"], 40, 128).verdicts:
        params = v.params_dict
        p, q = params["p"], params["q"]
        assert v.status == PASS
        assert v.lhs == dedekind_def(q, p)
        assert v.rhs.contains(v.lhs)
        assert v.enclosed is True
        count += 1
    assert count > 100


def test_coshalf_exact_zero_for_odd_p():
    for v in sweep(["COSHALF"], 99, 128).verdicts:
        assert v.status == PASS
        assert v.residual == 0
        assert v.exactness == EXACT


def test_parity_identity_all_pass():
    rep = sweep(["PARITY"], 30, 128)
    assert len(rep.verdicts) >= 50
    assert all(v.status == PASS for v in rep.verdicts)


@pytest.mark.parametrize(
    "ident_id, params",
    [
        ("EQ5", {"p": 199, "q": 120}),
        ("EQ5", {"p": 200, "q": 199}),
        ("EQ6", {"p": 199, "q": 200}),
        ("EQ6", {"p": 200, "q": 199}),
        ("EQ9", {"p": 199, "q": 200}),
        ("EQ10", {"p": 199}),
        ("EQ10", {"p": 200}),
        ("EQ12", {"p": 199, "q": 120}),
        ("EQ12B", {"p": 200, "q": 199}),
        ("EQ13", {"p": 200, "q": 601}),
        ("EQ14", {"p": 199, "q": 598}),
        ("EQ17", {"p": 200, "q": 199}),
    ],
)
def test_decisive_at_top_of_range(ident_id, params):
    # identities that hold stay decisively PASS at 128 bits out to p = 200:
    # center residuals are ~1e-30 while the PASS cutoff is 1e-8 * scale
    v = verify_one(ident_id, params, 128)
    expected = FAIL if ident_id in MISPRINTS else PASS
    assert v.status == expected
    assert v.status != INCONCLUSIVE


def test_eq15_printed_form_inconclusive_boundary():
    # the as-printed constant-offset misprint has residual 5/3 at every odd p,
    # while the FAIL cutoff grows like p^2/6000: decisiveness is lost at p=103
    v101 = verify_one("EQ15", {"p": 101}, 128)
    assert v101.status == FAIL
    v103 = verify_one("EQ15", {"p": 103}, 128)
    assert v103.status == INCONCLUSIVE
    assert v103.corrected_status == PASS
    assert v103.residual == Fraction(5, 3)


def test_corrected_candidates_validation_all_pass():
    rep = corrected_candidates_validation(60, 128)
    assert all(v.status == PASS for v in rep.verdicts)
    ids = {v.identity for v in rep.verdicts}
    assert ids == {f"{i}.corrected" for i in MISPRINTS}


def test_sweep_rejects_unknown_and_small():
    with pytest.raises(ValueError):
        sweep(["EQ1"], 20, 128)
    with pytest.raises(ValueError):
        sweep(None, 1, 128)


def test_report_reorders_verdicts():
    rep0 = sweep(["EQ17"], 8, 128)
    shuffled = list(reversed(rep0.verdicts))
    rep = VerificationReport(verdicts=shuffled, precision=128)
    assert [((v.identity), v.params) for v in rep.verdicts] == [
        ((v.identity), v.params) for v in rep0.verdicts
    ]


def test_statements_are_self_describing():
    for ident in builtin_catalog():
        assert isinstance(ident.statement, str) and ident.statement.strip()
