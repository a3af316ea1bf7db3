import pytest

from rieszlex.casebook import CASES, run_case
from rieszlex.errors import UnknownCase
from rieszlex.groups import SearchBudget

FAST = [c for c in CASES if c not in ("example5_8", "example5_9")]


@pytest.mark.parametrize("case_id", FAST)
def test_case_passes(case_id):
    rep = run_case(case_id)
    assert rep.passed, rep.summary()
    assert rep.to_json()["format"] == 1


@pytest.mark.parametrize("case_id", ["example5_8", "example5_9"])
def test_free_group_cases_at_reduced_depth(case_id):
    # the full-depth runs live in the acceptance suite
    rep = run_case(case_id, SearchBudget(max_word_len=4, max_candidates=10**6))
    assert rep.passed, rep.summary()
    bounded = [c for c in rep.claims if c.bounded]
    assert bounded and all(c.budget.max_word_len == 4 for c in bounded)


def test_lemma_case_reports_rdp1_failure():
    rep = run_case("lemma2_3")
    claim = rep.get("RDP1 fails on the solver table")
    assert claim.evidence["rdp1"] == "Fails"
    assert claim.evidence["x"] == "((0, 0), M(2,0))"


def test_unknown_case():
    with pytest.raises(UnknownCase):
        run_case("lemma9_9")
