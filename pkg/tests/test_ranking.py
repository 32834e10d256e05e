import pytest

from squadkit import (BATTING_CLUSTERS, DEFAULT_PROFILES, Cluster,
                      ClusterRanking, RankedPlayer, assign_labels,
                      experience_factors, final_rank_score, profile_score,
                      rank_cluster, rankings_to_csv, validate_profiles)


def test_profile_score_worked_example():
    features = {"strike_rate": 0.5, "average": 0.5, "hc_per_innings": 0.25,
                "run_wicket": 1.0, "hard_hitting": 0.8}
    assert profile_score(DEFAULT_PROFILES[Cluster.OPENER], features) == 53.0


def test_profile_score_upper_bound():
    features = {"strike_rate": 1.0, "average": 1.0, "hc_per_innings": 1.0,
                "run_wicket": 1.0, "hard_hitting": 1.0}
    assert profile_score(DEFAULT_PROFILES[Cluster.OPENER], features) == 100.0


def test_profile_score_zero_features():
    features = dict.fromkeys(
        ("strike_rate", "average", "hc_per_innings", "run_wicket",
         "hard_hitting", "not_out_fraction"), 0.0)
    for cluster in BATTING_CLUSTERS:
        assert profile_score(DEFAULT_PROFILES[cluster], features) == 0.0


def test_final_rank_score_worked_example():
    assert final_rank_score(50.0, 60.0, 0.5, 60.0) == 85.0


def test_final_rank_score_degenerate_mean_drops_career():
    assert final_rank_score(50.0, 60.0, 0.5, 0.0) == 60.0


def test_final_rank_score_zero_current_is_zero():
    assert final_rank_score(123.0, 0.0, 2.0, 40.0) == 0.0


def test_default_profiles_validate():
    validate_profiles(DEFAULT_PROFILES)


def test_batting_profile_must_sum_to_100():
    bad = dict(DEFAULT_PROFILES)
    bad[Cluster.MIDDLE] = {"strike_rate": 20.0, "average": 30.0}
    with pytest.raises(ValueError, match="sum to 100"):
        validate_profiles(bad)


def test_negative_weight_rejected():
    bad = dict(DEFAULT_PROFILES)
    bad[Cluster.OPENER] = {"strike_rate": 110.0, "average": -10.0}
    with pytest.raises(ValueError, match="negative"):
        validate_profiles(bad)


def test_unknown_feature_rejected():
    bad = dict(DEFAULT_PROFILES)
    bad[Cluster.BOWLER] = {"salary": 90.0}
    with pytest.raises(ValueError, match="unknown feature"):
        validate_profiles(bad)


def test_bowler_profile_total_is_free():
    # the default bowler weights add to 90 and that is deliberate
    assert sum(DEFAULT_PROFILES[Cluster.BOWLER].values()) == 90.0
    validate_profiles(DEFAULT_PROFILES)


def test_rankings_sorted_with_id_tiebreak(rankings):
    for ranking in rankings.values():
        entries = ranking.entries
        for a, b in zip(entries, entries[1:]):
            assert a.final_score >= b.final_score
            if a.final_score == b.final_score:
                assert a.player_id < b.player_id


def test_mean_current_matches_entries(rankings):
    for ranking in rankings.values():
        mean = sum(e.current_score for e in ranking.entries) / len(ranking.entries)
        assert ranking.mean_current == pytest.approx(mean, abs=1e-12)


def test_final_recomposes_from_parts(dataset, rankings):
    # the published pieces must reproduce every final score exactly
    for cluster, ranking in rankings.items():
        kind = "bowling" if cluster is Cluster.BOWLER else "batting"
        pool = [e.player_id for e in ranking.entries]
        experience = experience_factors(dataset, pool, kind)
        for e in ranking.entries:
            expected = final_rank_score(e.career_score, e.current_score,
                                        experience[e.player_id].cost_xfact,
                                        ranking.mean_current)
            assert e.final_score == pytest.approx(expected, abs=1e-12)


def test_position_lookup(rankings):
    opener = rankings[Cluster.OPENER]
    first = opener.entries[0]
    assert opener.position(first.player_id) == 1
    assert opener.entry(first.player_id) is first
    with pytest.raises(ValueError):
        opener.position("nobody")


def test_rank_cluster_respects_candidate_list(dataset):
    pool = dataset.batting_candidates()[:5]
    ranking = rank_cluster(dataset, Cluster.OPENER, pool)
    assert sorted(e.player_id for e in ranking.entries) == sorted(pool)


def _ranking(cluster, scored):
    entries = tuple(RankedPlayer(p, p.upper(), s, s, s) for p, s in scored)
    mean = sum(s for _, s in scored) / len(scored)
    return ClusterRanking(cluster, entries, mean)


def test_label_primary_takes_best_score():
    opener = _ranking(Cluster.OPENER, [("a", 90.0), ("b", 50.0)])
    middle = _ranking(Cluster.MIDDLE, [("a", 70.0), ("b", 60.0)])
    finisher = _ranking(Cluster.FINISHER, [("b", 80.0), ("a", 40.0)])
    out = assign_labels(opener, middle, finisher)
    assert out["a"].primary is Cluster.OPENER
    assert out["b"].primary is Cluster.FINISHER
    # a also tops the middle list, so both roles label a; b leads only finisher
    assert out["a"].labels == (Cluster.OPENER, Cluster.MIDDLE)
    assert out["b"].labels == (Cluster.FINISHER,)


def test_label_extra_for_equal_or_better_positions():
    # c tops every list, so all three labels apply to c
    opener = _ranking(Cluster.OPENER, [("c", 90.0), ("a", 80.0), ("b", 10.0)])
    middle = _ranking(Cluster.MIDDLE, [("c", 95.0), ("b", 85.0), ("a", 20.0)])
    finisher = _ranking(Cluster.FINISHER, [("c", 99.0), ("a", 30.0), ("b", 25.0)])
    out = assign_labels(opener, middle, finisher)
    assert out["c"].primary is Cluster.FINISHER
    assert out["c"].labels == (Cluster.OPENER, Cluster.MIDDLE, Cluster.FINISHER)


def test_label_score_tie_breaks_by_position_then_order():
    opener = _ranking(Cluster.OPENER, [("x", 85.0), ("a", 80.0)])
    middle = _ranking(Cluster.MIDDLE, [("a", 80.0), ("x", 10.0)])
    finisher = _ranking(Cluster.FINISHER, [("a", 5.0), ("x", 1.0)])
    out = assign_labels(opener, middle, finisher)
    # a scores 80 in two clusters but ranks first only in middle
    assert out["a"].primary is Cluster.MIDDLE
    # x has no ties and simply peaks as an opener
    assert out["x"].primary is Cluster.OPENER

    opener = _ranking(Cluster.OPENER, [("a", 80.0), ("x", 70.0)])
    middle = _ranking(Cluster.MIDDLE, [("a", 80.0), ("x", 75.0)])
    finisher = _ranking(Cluster.FINISHER, [("x", 90.0), ("a", 2.0)])
    out = assign_labels(opener, middle, finisher)
    # full tie between opener and middle falls to declaration order
    assert out["a"].primary is Cluster.OPENER


def test_labels_always_contain_primary(labels):
    for player_labels in labels.values():
        assert player_labels.primary in player_labels.labels


def test_assign_labels_requires_shared_pool():
    opener = _ranking(Cluster.OPENER, [("a", 90.0), ("b", 50.0)])
    middle = _ranking(Cluster.MIDDLE, [("a", 70.0), ("b", 60.0)])
    finisher = _ranking(Cluster.FINISHER, [("a", 40.0)])
    with pytest.raises(ValueError, match="same candidate pool"):
        assign_labels(opener, middle, finisher)


def test_rankings_to_csv_shape(rankings, labels):
    text = rankings_to_csv(rankings, labels)
    lines = text.strip().splitlines()
    assert lines[0] == ("cluster,rank,player_id,name,career_score,"
                        "current_score,final_score,labels")
    total = sum(len(r.entries) for r in rankings.values())
    assert len(lines) == total + 1
    assert lines[1].startswith("opener,1,")
