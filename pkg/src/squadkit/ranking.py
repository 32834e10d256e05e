"""Score and rank players for the four squad roles.

Each role has a weight profile over the feature set. Rate-style batting
features (strike rate, average, run-per-running-ball, hard hitting) are
cost-normalized over the whole candidate pool before weighting, so a
score reflects standing within the pool rather than absolute magnitude;
frequency features (half-century rate, not-out fraction) and all bowling
features enter raw.

A player's final score blends the career score, scaled by experience and
by current-season form relative to the pool mean, with the current-season
score itself. Ties in the final score break by player id so rankings are
deterministic.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum

from .features import (batting_features, bowling_features, cost_normalize,
                       experience_factors)
from .stats import Dataset


class Cluster(str, Enum):
    OPENER = "opener"
    MIDDLE = "middle"
    FINISHER = "finisher"
    BOWLER = "bowler"

    def __str__(self) -> str:  # so "%s" and f-strings print the bare value
        return self.value


BATTING_CLUSTERS = (Cluster.OPENER, Cluster.MIDDLE, Cluster.FINISHER)
ALL_CLUSTERS = BATTING_CLUSTERS + (Cluster.BOWLER,)

BATTING_FEATURE_NAMES = ("average", "strike_rate", "hard_hitting",
                         "run_wicket", "hc_per_innings", "not_out_fraction")
BOWLING_FEATURE_NAMES = ("wicket_per_ball", "consistency",
                         "inv_average", "inv_economy")

# Rate features compared across the pool; the rest are used as-is.
COST_NORMALIZED_FEATURES = frozenset(
    {"strike_rate", "average", "run_wicket", "hard_hitting"})

DEFAULT_PROFILES: dict[Cluster, dict[str, float]] = {
    Cluster.OPENER: {"strike_rate": 30.0, "average": 30.0,
                     "hc_per_innings": 20.0, "run_wicket": 10.0,
                     "hard_hitting": 10.0},
    Cluster.MIDDLE: {"strike_rate": 20.0, "average": 30.0,
                     "hc_per_innings": 10.0, "run_wicket": 25.0,
                     "hard_hitting": 15.0},
    Cluster.FINISHER: {"strike_rate": 40.0, "hard_hitting": 40.0,
                       "not_out_fraction": 5.0, "run_wicket": 15.0},
    Cluster.BOWLER: {"wicket_per_ball": 35.0, "consistency": 35.0,
                     "inv_average": 10.0, "inv_economy": 10.0},
}


def validate_profiles(profiles: dict[Cluster, dict[str, float]]) -> None:
    """Check feature names, non-negative weights, and that every batting
    profile allocates exactly 100 points. The bowler profile may use any
    positive total."""
    for cluster in ALL_CLUSTERS:
        if cluster not in profiles:
            raise ValueError("missing weight profile for %s" % cluster.value)
        profile = profiles[cluster]
        allowed = (BOWLING_FEATURE_NAMES if cluster is Cluster.BOWLER
                   else BATTING_FEATURE_NAMES)
        for name, weight in profile.items():
            if name not in allowed:
                raise ValueError("unknown feature %r in %s profile"
                                 % (name, cluster.value))
            if weight < 0:
                raise ValueError("negative weight for %r in %s profile"
                                 % (name, cluster.value))
        total = sum(profile.values())
        if cluster is Cluster.BOWLER:
            if total <= 0:
                raise ValueError("bowler profile weights must sum to a positive value")
        elif abs(total - 100.0) > 1e-9:
            raise ValueError("%s profile weights must sum to 100, got %g"
                             % (cluster.value, total))


@dataclass(frozen=True)
class RankedPlayer:
    player_id: str
    name: str
    career_score: float
    current_score: float
    final_score: float


@dataclass(frozen=True)
class ClusterRanking:
    cluster: Cluster
    entries: tuple[RankedPlayer, ...]
    mean_current: float

    def position(self, player_id: str) -> int:
        """1-based rank of the player; ValueError when not ranked."""
        for i, entry in enumerate(self.entries, start=1):
            if entry.player_id == player_id:
                return i
        raise ValueError("player %r is not in the %s ranking"
                         % (player_id, self.cluster.value))

    def entry(self, player_id: str) -> RankedPlayer:
        for e in self.entries:
            if e.player_id == player_id:
                return e
        raise ValueError("player %r is not in the %s ranking"
                         % (player_id, self.cluster.value))

    def player_ids(self) -> list[str]:
        return [e.player_id for e in self.entries]


def rank_cluster(dataset: Dataset, cluster: Cluster,
                 candidates: list[str] | None = None,
                 profiles: dict[Cluster, dict[str, float]] | None = None,
                 ) -> ClusterRanking:
    """Rank a candidate pool for one role.

    The pool defaults to every non-retired player with a record of the
    relevant kind. Cost normalization and the experience spread are taken
    over this pool, so the same player can score differently when ranked
    inside a different pool.
    """
    if profiles is None:
        profiles = DEFAULT_PROFILES
    validate_profiles(profiles)
    profile = profiles[cluster]

    if cluster is Cluster.BOWLER:
        pool = list(candidates) if candidates is not None else dataset.bowling_candidates()
        career = {p: bowling_features(dataset.career_bowling(p)).as_dict() for p in pool}
        current = {p: bowling_features(dataset.current_bowling(p)).as_dict() for p in pool}
        experience = experience_factors(dataset, pool, "bowling")
    else:
        pool = list(candidates) if candidates is not None else dataset.batting_candidates()
        career = {p: batting_features(dataset.career_batting(p)).as_dict() for p in pool}
        current = {p: batting_features(dataset.current_batting(p)).as_dict() for p in pool}
        experience = experience_factors(dataset, pool, "batting")
        _apply_cost_normalization(career, pool)
        _apply_cost_normalization(current, pool)

    career_scores = {p: profile_score(profile, career[p]) for p in pool}
    current_scores = {p: profile_score(profile, current[p]) for p in pool}
    mean_current = (sum(current_scores.values()) / len(pool)) if pool else 0.0

    finals = {p: final_rank_score(career_scores[p], current_scores[p],
                                  experience[p].cost_xfact, mean_current)
              for p in pool}

    order = sorted(pool, key=lambda p: (-finals[p], p))
    entries = tuple(RankedPlayer(p, dataset.player(p).name, career_scores[p],
                                 current_scores[p], finals[p])
                    for p in order)
    return ClusterRanking(cluster, entries, mean_current)


def rank_all(dataset: Dataset,
             profiles: dict[Cluster, dict[str, float]] | None = None,
             ) -> dict[Cluster, ClusterRanking]:
    """Rank all four roles; the three batting roles share one candidate pool."""
    batting_pool = dataset.batting_candidates()
    out = {c: rank_cluster(dataset, c, batting_pool, profiles)
           for c in BATTING_CLUSTERS}
    out[Cluster.BOWLER] = rank_cluster(dataset, Cluster.BOWLER, None, profiles)
    return out


def _apply_cost_normalization(feature_maps: dict[str, dict[str, float]],
                              pool: list[str]) -> None:
    if not pool:
        return
    for name in sorted(COST_NORMALIZED_FEATURES):
        scaled = cost_normalize({p: feature_maps[p][name] for p in pool})
        for p in pool:
            feature_maps[p][name] = scaled[p]


def profile_score(profile: dict[str, float], features: dict[str, float]) -> float:
    """Weighted dot product of a feature map with a role profile."""
    return sum(weight * features[name] for name, weight in profile.items())


def final_rank_score(career: float, current: float, cost_xfact: float,
                     mean_current: float) -> float:
    """Blend career and current-season scores into the ranking key.

    The career term is scaled by experience and by current form relative
    to the pool mean; a zero pool mean drops the career term entirely.
    """
    if mean_current == 0.0:
        return current
    return career * cost_xfact * (current / mean_current) + current


@dataclass(frozen=True)
class PlayerLabels:
    player_id: str
    primary: Cluster
    labels: tuple[Cluster, ...]


def assign_labels(opener: ClusterRanking, middle: ClusterRanking,
                  finisher: ClusterRanking) -> dict[str, PlayerLabels]:
    """Decide each batsman's primary role and any extra role labels.

    The primary role is the one with the highest final score, falling back
    to the better rank position and then to opener-middle-finisher order.
    A player also carries the label of any role where they rank at least
    as high as in their primary role.
    """
    rankings = {Cluster.OPENER: opener, Cluster.MIDDLE: middle,
                Cluster.FINISHER: finisher}
    base = set(opener.player_ids())
    for r in (middle, finisher):
        if set(r.player_ids()) != base:
            raise ValueError("label assignment needs the same candidate pool "
                             "in all three batting rankings")

    out: dict[str, PlayerLabels] = {}
    for player_id in sorted(base):
        best_key = None
        primary = None
        for cluster in BATTING_CLUSTERS:
            ranking = rankings[cluster]
            key = (-ranking.entry(player_id).final_score,
                   ranking.position(player_id))
            if best_key is None or key < best_key:
                best_key, primary = key, cluster
        primary_pos = rankings[primary].position(player_id)
        labels = tuple(c for c in BATTING_CLUSTERS
                       if rankings[c].position(player_id) <= primary_pos)
        out[player_id] = PlayerLabels(player_id, primary, labels)
    return out


def rankings_to_csv(rankings: dict[Cluster, ClusterRanking],
                    labels: dict[str, PlayerLabels]) -> str:
    """Render all rankings as one CSV table, labels joined with '|'."""
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["cluster", "rank", "player_id", "name",
                "career_score", "current_score", "final_score", "labels"])
    for cluster in ALL_CLUSTERS:
        if cluster not in rankings:
            continue
        for i, e in enumerate(rankings[cluster].entries, start=1):
            if cluster is Cluster.BOWLER:
                tag = Cluster.BOWLER.value
            else:
                tag = "|".join(c.value for c in labels[e.player_id].labels)
            w.writerow([cluster.value, i, e.player_id, e.name,
                        repr(e.career_score), repr(e.current_score),
                        repr(e.final_score), tag])
    return buf.getvalue()
