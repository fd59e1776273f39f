import random

import pytest

from powmon import (
    GroupElement,
    LexCone,
    QuadraticIrrational,
    RejectionBudgetExceeded,
    SlopeCone,
    gen_subset,
    parse_alpha,
    verify,
)
from powmon.harness import PROPERTIES
from strategies import RelaxedLexCone, StrictSlopeCone

LEX = LexCone()
SLOPE2 = SlopeCone(QuadraticIrrational(0, 1, 2))


class NothingCone(LexCone):
    def contains(self, g: GroupElement) -> bool:
        return False


def test_gen_subset_base_case():
    X = gen_subset(LEX, 1, 50, random.Random(3))
    assert X.elems == (GroupElement(0, 0),)


def test_gen_subset_deterministic():
    assert gen_subset(SLOPE2, 8, 50, random.Random("s")) == gen_subset(
        SLOPE2, 8, 50, random.Random("s")
    )


@pytest.mark.parametrize("m", [LEX, SLOPE2, None])
def test_gen_subset_respects_monoid_and_bounds(m):
    for seed in range(30):
        X = gen_subset(m, 8, 20, random.Random(seed))
        assert 1 <= len(X) <= 8
        for g in X:
            assert abs(g.x) <= 20 and abs(g.y) <= 20
            if m is not None:
                assert m.contains(g)


def test_gen_subset_validates_bounds():
    rng = random.Random(0)
    with pytest.raises(ValueError):
        gen_subset(LEX, 0, 50, rng)
    with pytest.raises(ValueError):
        gen_subset(LEX, 8, 0, rng)


def test_gen_subset_rejection_budget():
    # find a seed that actually asks for at least one extra element
    seed = next(s for s in range(100) if random.Random(f"s{s}").randint(0, 1) == 1)
    with pytest.raises(RejectionBudgetExceeded):
        gen_subset(NothingCone(), 2, 5, random.Random(f"s{seed}"))


def test_verify_clean_run():
    report = verify(LEX, SLOPE2, trials=40, seed=7)
    assert report.failures == 0
    assert set(report.tallies) == set(PROPERTIES)
    assert all(t == {"runs": 40, "failures": 0} for t in report.tallies.values())


def test_verify_between_two_slope_cones():
    # the transport isomorphism is not tied to the default slope or to lex
    a = SlopeCone(parse_alpha("1/2+3*sqrt(5)"))
    b = SlopeCone(parse_alpha("7-2*sqrt(11)"))
    assert verify(a, b, trials=25, seed=2).failures == 0


def test_verify_single_trial_runs_every_property():
    report = verify(LEX, SLOPE2, trials=1, seed=11)
    assert all(t["runs"] == 1 for t in report.tallies.values())


def test_verify_rejects_zero_trials():
    with pytest.raises(ValueError):
        verify(LEX, SLOPE2, trials=0, seed=1)


def test_verify_deterministic_modulo_elapsed():
    a = verify(LEX, SLOPE2, trials=25, seed=13).to_json()
    b = verify(LEX, SLOPE2, trials=25, seed=13).to_json()
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_verify_report_json_shape():
    report = verify(LEX, SLOPE2, trials=5, seed=1, size_bound=4, coord_bound=10)
    payload = report.to_json()
    assert payload["trials"] == 5 and payload["seed"] == 1
    assert payload["size_bound"] == 4 and payload["coord_bound"] == 10
    assert payload["failures"] == 0 and payload["failure_records"] == []
    assert isinstance(payload["elapsed_ms"], int)


@pytest.mark.parametrize(
    "src,dst",
    [
        (RelaxedLexCone(), SLOPE2),
        (StrictSlopeCone(QuadraticIrrational(0, 1, 2)), LEX),
    ],
)
def test_verify_detects_membership_mutations(src, dst):
    report = verify(src, dst, trials=50, seed=3)
    assert report.failures > 0
    # records carry everything needed to replay
    record = report.failure_records[0]
    assert record.trial_seed == f"3:{record.trial}"
    assert record.detail
