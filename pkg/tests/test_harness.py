import json

import pytest

from qsymb import harness
from qsymb.config import Caps
from qsymb.errors import InvalidParams, SizeLimit
from qsymb.harness import (REGISTRY, IdentityCase, SuiteConfig, exit_code, load_suite_config,
                           make_case, verify, verify_all)
from qsymb.qpoly import Laurent, fundamental_B, xy_alphabet

REPORT_KEYS = {"identity", "params", "status", "lhs_terms", "rhs_terms", "lhs_digest", "rhs_digest",
               "mismatches", "ms"}

EXPECTED_IDS = ["eq2", "eq3", "eq4", "eq5", "eq6", "eq7", "eq11", "eq13", "eq14", "lemma1", "prop2",
                "thm1", "cor1", "lemma2", "qfactor", "eq18", "thm2", "prop3", "gamma-ex", "fig1"]


def test_registry_contents():
    assert list(REGISTRY) == EXPECTED_IDS
    assert all(entry.description for entry in REGISTRY.values())


def test_small_constant_products():
    r = verify("eq14", p=2, q=2, M=4)
    assert r.status == "verified" and r.lhs_digest == r.rhs_digest
    for M in range(1, 8):
        assert verify("eq14", p=1, q=1, M=M).ok


def test_signed_cauchy_single_letter():
    r = verify("prop3", n=1, M=2, My=2)
    assert r.ok
    J = xy_alphabet(2, 2, True, True)
    f0 = fundamental_B(set(), 1, 2)
    f1 = fundamental_B({0}, 1, 2)
    expected = f0.embed(J, "x") * f0.embed(J, "y") + f1.embed(J, "x") * f1.embed(J, "y") * Laurent({2: 1})
    lhs, rhs = harness._prop3(harness.normalise_params("prop3", {"n": 1, "M": 2, "My": 2}))
    expected_side = {}
    harness._add_poly(expected_side, "n=1", expected)
    assert lhs == rhs == expected_side


def test_report_json_schema():
    r = verify("gamma-ex")
    data = r.to_json()
    assert set(data) == REPORT_KEYS
    assert data["mismatches"] == [] and data["status"] == "verified"
    json.dumps(data)


def test_reports_are_deterministic():
    a = verify("eq13")
    b = verify("eq13")
    assert (a.lhs_digest, a.rhs_digest, a.lhs_terms) == (b.lhs_digest, b.rhs_digest, b.lhs_terms)


def test_invalid_params():
    with pytest.raises(InvalidParams):
        verify("nope")
    with pytest.raises(InvalidParams):
        verify("eq2", n=-1)
    with pytest.raises(InvalidParams):
        verify("eq2", p=2)
    with pytest.raises(InvalidParams):
        verify("lemma2", **{"lambda": "2,1"})
    with pytest.raises(InvalidParams):
        verify("eq7", **{"lambda": "1,2"})
    with pytest.raises(InvalidParams):
        verify("thm2", n=2, m=2, M=3)


def test_size_limit_propagates():
    from qsymb.config import use_caps
    with use_caps(Caps(max_n_a=2)):
        with pytest.raises(SizeLimit):
            verify("eq3", n=3)


def test_degenerate_suite():
    reports = verify_all(config=SuiteConfig(size_clip=0))
    assert [r.case.id for r in reports] == EXPECTED_IDS
    assert all(r.ok for r in reports)
    assert exit_code(reports) == 0


def test_parallel_matches_serial():
    config = SuiteConfig(size_clip=2)
    serial = verify_all(config=config)
    parallel = verify_all(config=config, jobs=2)
    assert [r.case.id for r in parallel] == EXPECTED_IDS
    assert [(r.lhs_digest, r.rhs_digest) for r in serial] == [(r.lhs_digest, r.rhs_digest) for r in parallel]


def test_mutation_is_detected(monkeypatch):
    # a wrong descent statistic must surface as a failed report with a monomial
    real = harness.descent_set_tableau
    monkeypatch.setattr(harness, "descent_set_tableau", lambda t: frozenset() if len(t) > 1 else real(t))
    r = verify("eq2", n=3, M=3)
    assert r.status == "failed"
    assert 0 < len(r.mismatches) <= harness.MAX_MISMATCHES
    assert " | t^0 x1^" in r.mismatches[0].monomial
    assert exit_code([r]) == 1


def test_mutated_weak_composition_function(monkeypatch):
    monkeypatch.setattr(harness, "fundamental_WC",
                        lambda a, M: harness.SparsePoly.constant(harness.AlphabetSpec(M), 1))
    r = verify("gamma-ex")
    assert r.status == "failed"
    assert r.mismatches[0].monomial.startswith("M=")


def test_not_expandable_status(monkeypatch):
    from qsymb.expand import NotExpandable
    monkeypatch.setattr(harness, "expand_in_domino_basis", lambda *a, **k: NotExpandable("forced"))
    r = verify("eq18", n=1, m=1)
    assert r.status == "not-expandable" and r.note == "forced"
    assert exit_code([r]) == 1


def test_caps_file(tmp_path, monkeypatch):
    path = tmp_path / "caps.json"
    path.write_text(json.dumps({"caps": {"max_n_a": 6}, "size_clip": 1, "alphabet": 3,
                                "params": {"eq2": {"n": 2}}}))
    monkeypatch.delenv("QSYMB_MAX_N_A", raising=False)
    config = load_suite_config(path)
    assert config.caps.max_n_a == 6 and config.size_clip == 1 and config.alphabet == 3
    cases = harness.suite_cases("default", config)
    eq2 = cases[0]
    assert eq2.params["n"] == 2 and eq2.params["M"] == 3
    monkeypatch.setenv("QSYMB_MAX_N_A", "5")
    assert load_suite_config(path).caps.max_n_a == 5
    path.write_text(json.dumps({"params": {"eq99": {}}}))
    with pytest.raises(InvalidParams):
        load_suite_config(path)


def test_explicit_case_object():
    case = make_case("thm1", {"lambda": "1", "mu": "1", "p": 1, "q": 0})
    assert isinstance(case, IdentityCase)
    assert verify(case).ok


@pytest.mark.parametrize("ident", ["eq18", "thm2", "eq7"])
def test_single_pair_params(ident):
    shapes = {"eq18": ("2", "1,1"), "thm2": ("2,2", "2"), "eq7": ("2,1", "1")}[ident]
    assert verify(ident, **{"lambda": shapes[0], "mu": shapes[1]}).ok
