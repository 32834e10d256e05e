"""Turn raw batting and bowling counts into the per-player feature values.

Every ratio guards its denominator: a player with no balls faced, no
innings or no wickets simply scores zero on the affected feature instead
of raising. The two bowling inverses (average, economy) substitute one
run conceded when the player has conceded none, so a wicket taken at
zero cost still produces a finite value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .stats import BattingRecord, BowlingRecord, Dataset


@dataclass(frozen=True)
class BattingFeatures:
    average: float
    strike_rate: float
    hard_hitting: float
    run_wicket: float
    hc_per_innings: float
    not_out_fraction: float

    def as_dict(self) -> dict[str, float]:
        return {
            "average": self.average,
            "strike_rate": self.strike_rate,
            "hard_hitting": self.hard_hitting,
            "run_wicket": self.run_wicket,
            "hc_per_innings": self.hc_per_innings,
            "not_out_fraction": self.not_out_fraction,
        }


@dataclass(frozen=True)
class BowlingFeatures:
    wicket_per_ball: float
    consistency: float
    inv_average: float
    inv_economy: float

    def as_dict(self) -> dict[str, float]:
        return {
            "wicket_per_ball": self.wicket_per_ball,
            "consistency": self.consistency,
            "inv_average": self.inv_average,
            "inv_economy": self.inv_economy,
        }


def batting_features(record: BattingRecord) -> BattingFeatures:
    dismissals = record.innings - record.not_outs
    average = record.runs / max(1, dismissals)
    strike_rate = 100.0 * record.runs / record.balls if record.balls else 0.0
    boundary_runs = 4 * record.fours + 6 * record.sixes
    hard_hitting = boundary_runs / record.balls if record.balls else 0.0
    running_balls = record.balls - record.fours - record.sixes
    run_wicket = ((record.runs - boundary_runs) / running_balls
                  if running_balls > 0 else 0.0)
    hc_per_innings = ((record.fifties + record.hundreds) / record.innings
                      if record.innings else 0.0)
    not_out_fraction = (record.not_outs / record.innings
                        if record.innings else 0.0)
    return BattingFeatures(average, strike_rate, hard_hitting, run_wicket,
                           hc_per_innings, not_out_fraction)


def bowling_features(record: BowlingRecord) -> BowlingFeatures:
    wicket_per_ball = record.wickets / record.balls if record.balls else 0.0
    haul_wickets = 4 * record.four_hauls + 5 * record.five_hauls
    residual = record.wickets - haul_wickets
    consistency = ((haul_wickets + residual) * 6.0 / record.balls
                   if record.balls else 0.0)
    conceded = record.runs_conceded if record.runs_conceded else 1
    inv_average = record.wickets / conceded
    inv_economy = record.balls / (6.0 * conceded)
    return BowlingFeatures(wicket_per_ball, consistency, inv_average, inv_economy)


def cost_normalize(values: dict[str, float]) -> dict[str, float]:
    """Scale a feature column so the pool maximum maps to 1.

    An all-zero column stays all zero. Raises ValueError on an empty map
    because a maximum over nothing is undefined.
    """
    if not values:
        raise ValueError("cannot normalize an empty feature map")
    top = max(values.values())
    if top == 0:
        return {k: 0.0 for k in values}
    return {k: v / top for k, v in values.items()}


@dataclass(frozen=True)
class Experience:
    xfact: float
    cost_xfact: float


def experience_factors(dataset: Dataset, pool: list[str],
                       kind: str = "batting") -> dict[str, Experience]:
    """Experience per player: career innings over the league total, then
    spread-normalized across the pool.

    The spread divisor is (max - min) of the raw factors, so values may
    exceed 1. A pool with uniform experience gets 1.0 for everyone.
    """
    if kind == "batting":
        career = {p: dataset.career_batting(p).innings for p in pool}
    elif kind == "bowling":
        career = {p: dataset.career_bowling(p).innings for p in pool}
    else:
        raise ValueError("kind must be 'batting' or 'bowling', got %r" % kind)
    if not career:
        return {}
    xfact = {p: n / dataset.total_league_innings for p, n in career.items()}
    spread = max(xfact.values()) - min(xfact.values())
    if spread == 0:
        return {p: Experience(x, 1.0) for p, x in xfact.items()}
    return {p: Experience(x, x / spread) for p, x in xfact.items()}
