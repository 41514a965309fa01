import statistics

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from dgahunt.errors import EmptyScoreSet, FileUnreadable, InvalidPattern
from dgahunt.fqdn import validate_fqdn
from dgahunt.scorer import DomainScore, ScoreMode
from dgahunt.stats import Allowlist, CorpusStats, compute_stats, flag_suspects, load_allowlist, mean_pstdev, waterline


def score(name, bits):
    f = validate_fqdn(name)
    return DomainScore(f, bits, len(f.normalized), len(f.prefix), ScoreMode.CORPUS)


def scored(values):
    return [score(f"d{i}.example.com", v) for i, v in enumerate(values)]


def test_reference_threshold():
    mean, sd = 1.234978, 0.495585
    st_ = compute_stats(scored([mean - sd, mean + sd]), 2.0)
    assert st_.mean_entropy == pytest.approx(mean, abs=1e-12)
    assert st_.stddev_entropy == pytest.approx(sd, abs=1e-12)
    assert st_.threshold == pytest.approx(2.2261478529123662, abs=5e-7)


def test_single_score():
    st_ = compute_stats(scored([2.5]))
    assert (st_.mean_entropy, st_.stddev_entropy, st_.threshold) == (2.5, 0.0, 2.5)


def test_one_two_three():
    st_ = compute_stats(scored([1, 2, 3]), 2.0)
    assert st_.mean_entropy == 2
    assert st_.stddev_entropy == pytest.approx(0.8164966, abs=1e-7)
    assert st_.threshold == pytest.approx(statistics.mean([1, 2, 3]) + 2 * statistics.pstdev([1, 2, 3]), abs=1e-12)
    assert st_.threshold == pytest.approx(3.6329932, abs=1e-6)


def test_length_and_prefix_stats():
    st_ = compute_stats([score("a.b", 1.0), score("xyz.a.b", 2.0)])
    assert (st_.mean_length, st_.stddev_length) == (5.0, 2.0)
    assert (st_.mean_prefix_length, st_.stddev_prefix_length) == (1.5, 1.5)


def test_errors():
    with pytest.raises(EmptyScoreSet):
        compute_stats([])
    with pytest.raises(ValueError):
        compute_stats(scored([1.0]), 0)


def test_threshold_same_path():
    st_ = compute_stats(scored([0.3, 1.7, 2.9, 0.1]), 2.5)
    assert st_.threshold - (st_.mean_entropy + st_.sigma_k * st_.stddev_entropy) == 0


floats = st.floats(0, 20, allow_nan=False)


@given(st.lists(floats, min_size=1, max_size=1000))
def test_pstdev_matches_two_pass(xs):
    m, s = mean_pstdev(xs)
    rm, rs = oracles.pop_mean_std(xs)
    assert m == pytest.approx(rm, abs=1e-12)
    assert s == pytest.approx(rs, abs=1e-12)


def test_flag_examples():
    scores = [score("nr2ia9qfa349b0q20i68bou6iur02rn.appsync-api.us-east-1.avsvmcloud.com", 3.2868606871778412),
              score("xp.apple.com", 0.6)]
    st_ = CorpusStats(2, 1.234978, 0.495585, 0, 0, 0, 0, 2.0, waterline(1.234978, 0.495585, 2.0))
    rep = flag_suspects(scores, st_)
    assert [s.fqdn.normalized for s in rep.suspects] == [scores[0].fqdn.normalized]


def test_tie_at_threshold_not_flagged():
    st_ = compute_stats(scored([2.5]))
    assert flag_suspects(scored([2.5]), st_).suspects == []


def test_allowlist_suppression():
    scores = [score("4z9p5tjmcnbblehp4557z1d136.avqs.mcafee.com", 9.0), score("zz9.evil.com", 8.0),
              score("a.b", 1.0), score("c.d", 1.0)]
    st_ = compute_stats(scores, 0.5)
    rep = flag_suspects(scores, st_, Allowlist.from_patterns(["*.mcafee.com"]))
    assert [s.fqdn.normalized for s in rep.suspects] == ["zz9.evil.com"]
    assert [s.fqdn.normalized for s in rep.allowlisted] == ["4z9p5tjmcnbblehp4557z1d136.avqs.mcafee.com"]


def test_suspect_ordering():
    scores = [score("b.x.com", 5.0), score("a.x.com", 5.0), score("c.x.com", 4.0)] + scored([0.0] * 10)
    rep = flag_suspects(scores, compute_stats(scores, 1.0))
    assert [s.fqdn.normalized for s in rep.suspects] == ["c.x.com", "a.x.com", "b.x.com"]


def test_allowlist_patterns():
    al = Allowlist.from_patterns(["*.mcafee.com", "a.b", "# comment", "", "Example.ORG."])
    assert al.matches(validate_fqdn("4z9p5tjmcnbblehp4557z1d136.avqs.mcafee.com"))
    assert al.matches(validate_fqdn("mcafee.com"))
    assert not al.matches(validate_fqdn("notmcafee.com"))
    assert al.matches(validate_fqdn("a.b"))
    assert not al.matches(validate_fqdn("x.a.b"))
    assert al.matches(validate_fqdn("example.org"))
    assert len(al) == 3


@pytest.mark.parametrize("pat", ["ex*.com", "*.*.com", "*", "a.*.com", "*.", "**.com", "bad name.com"])
def test_invalid_patterns(pat):
    with pytest.raises(InvalidPattern):
        Allowlist.from_patterns([pat])


def test_load_allowlist(tmp_path, data_dir):
    al = load_allowlist(data_dir / "allowlist.txt")
    assert al.suffixes == {"mcafee.com"} and al.exact == {"xp.apple.com"}
    with pytest.raises(FileUnreadable):
        load_allowlist(tmp_path / "none.txt")


def suspect_names(rep):
    return [s.fqdn.normalized for s in rep.suspects]


def near_threshold(values, thr):
    return any(abs(v - thr) < 1e-9 for v in values)


values = st.lists(st.floats(0, 10, allow_nan=False), min_size=1, max_size=60)


@given(values, st.floats(-5, 5), st.floats(0.5, 3))
def test_shift_invariance(xs, c, k):
    base = compute_stats(scored(xs), k)
    assume(not near_threshold(xs, base.threshold))
    shifted_scores = scored([x + c for x in xs])
    shifted = compute_stats(shifted_scores, k)
    assert shifted.mean_entropy == pytest.approx(base.mean_entropy + c, abs=1e-9)
    assert shifted.threshold == pytest.approx(base.threshold + c, abs=1e-9)
    assume(not near_threshold([x + c for x in xs], shifted.threshold))
    assert suspect_names(flag_suspects(scored(xs), base)) == suspect_names(flag_suspects(shifted_scores, shifted))


@given(values, st.floats(0.01, 100), st.floats(0.5, 3))
def test_scale_invariance(xs, lam, k):
    base = compute_stats(scored(xs), k)
    assume(not near_threshold(xs, base.threshold))
    scaled_scores = scored([x * lam for x in xs])
    scaled = compute_stats(scaled_scores, k)
    assert scaled.mean_entropy == pytest.approx(base.mean_entropy * lam, rel=1e-9, abs=1e-12)
    assert scaled.stddev_entropy == pytest.approx(base.stddev_entropy * lam, rel=1e-9, abs=1e-12)
    assert scaled.threshold == pytest.approx(base.threshold * lam, rel=1e-9, abs=1e-12)
    assume(not any(abs(x * lam - scaled.threshold) < 1e-9 * max(1, lam) for x in xs))
    assert suspect_names(flag_suspects(scored(xs), base)) == suspect_names(flag_suspects(scaled_scores, scaled))


@given(values, st.floats(0.1, 3), st.lists(st.integers(0, 59), max_size=10))
def test_partition(xs, k, allowed_idx):
    scores = scored(xs)
    al = Allowlist.from_patterns([f"d{i}.example.com" for i in allowed_idx])
    stats = compute_stats(scores, k)
    rep = flag_suspects(scores, stats, al)
    sus = {id(s) for s in rep.suspects}
    alw = {id(s) for s in rep.allowlisted}
    ignored = {id(s) for s in scores if s.entropy_bits <= stats.threshold}
    assert not (sus & alw) and not (sus & ignored) and not (alw & ignored)
    assert sus | alw | ignored == {id(s) for s in scores}
    assert all(s.entropy_bits > stats.threshold for s in rep.suspects + rep.allowlisted)


@given(values)
def test_large_k_flags_nothing(xs):
    stats = compute_stats(scored(xs), 1e6)
    assume(stats.stddev_entropy > 1e-3)
    assert flag_suspects(scored(xs), stats).suspects == []
