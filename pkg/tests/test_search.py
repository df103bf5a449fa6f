from fractions import Fraction as F

import pytest

from weakadv import (
    GenSpec,
    Relation,
    Verdict,
    compare_improvement,
    improvement_relation,
    is_constant_sum,
    parse_game_file,
    realize,
    search_hurt,
    verify_property,
)
from weakadv.scenarios import COSTSUM, COSTSUM_NO_COST1
from weakadv.search import (
    gen_constant_sum,
    gen_cost_decrease,
    gen_costed,
    gen_general,
    gen_improvement,
    run_trial,
)


def test_genspec_validation():
    for bad in (dict(rows=0), dict(payoff_range=(3, 1)), dict(trials=0), dict(seed=-1)):
        with pytest.raises(ValueError):
            GenSpec(**bad)


def test_generation_is_deterministic_per_trial():
    spec = GenSpec(rows=3, cols=2, seed=11)
    assert gen_general(spec, 5) == gen_general(spec, 5)
    assert gen_general(spec, 5) != gen_general(spec, 6)
    assert gen_general(spec, 5) != gen_general(GenSpec(rows=3, cols=2, seed=12), 5)


def test_generators_respect_their_contracts():
    spec = GenSpec(rows=3, cols=4, constant=F(2), seed=3)
    for t in range(30):
        g = gen_constant_sum(spec, t)
        assert is_constant_sum(g) == 2
        for p in (1, 2):
            assert improvement_relation(g, gen_improvement(g, p, spec, t), p).kind is not Relation.NOT_IMPROVED
        c = gen_costed(spec, t, opponent_cost_constant=True)
        assert len(set(c.cost2)) == 1
        cut = gen_cost_decrease(c, spec, t)
        assert cut.cost2 == c.cost2 and all(a <= b for a, b in zip(cut.cost1, c.cost1))


def test_verify_is_reproducible():
    spec = GenSpec(rows=3, cols=3, seed=7, trials=40)
    a = verify_property("oddness", spec)
    b = verify_property("oddness", spec)
    assert a == b and a.passed


def test_unknown_property():
    with pytest.raises(ValueError):
        run_trial("nope", GenSpec(), 0)


def test_search_hurt_pinned_hit():
    hits = search_hurt(GenSpec(seed=2013, trials=10), 1)
    assert [h.trial for h in hits] == [3, 4, 7]
    first = hits[0]
    assert (first.report.before_worst, first.report.after_worst) == (4, F(24, 7))
    # every hit is a genuine improvement that hurts
    for h in hits:
        assert improvement_relation(h.before, h.after, 1).is_improvement
        assert compare_improvement(h.before, h.after, 1).verdict is Verdict.HURT


def test_search_limit_and_candidates():
    assert len(search_hurt(GenSpec(seed=2013, trials=10), 1, limit=1)) == 1
    chicken_pairs = [(realize(COSTSUM), realize(COSTSUM_NO_COST1))]
    hits = search_hurt(GenSpec(), 1, candidates=chicken_pairs)
    assert [h.trial for h in hits] == [0]


def test_constant_sum_search_finds_nothing():
    assert search_hurt(GenSpec(rows=3, cols=3, seed=5, trials=60), 2, constant_sum=True) == []


def test_negative_control_violation_replays_from_text():
    report = verify_property(
        "theorem2",
        GenSpec(seed=1, trials=5),
        opponent_cost_constant=False,
        fixtures=[(COSTSUM, COSTSUM_NO_COST1)],
    )
    v = report.violations[0]
    assert v.trial == -1 and report.trials == 6
    before, after = (parse_game_file(t).costed() for t in v.games)
    r = compare_improvement(realize(before), realize(after), 1)
    assert r.verdict is Verdict.HURT and (r.before_worst, r.after_worst) == (F(5, 2), 2)
