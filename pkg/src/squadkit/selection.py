"""Assemble an auction squad bucket by bucket under a credit budget.

The team value must split evenly across the squad, giving a per-player
unit; each bucket's cap is that unit times its size. Buckets fill in a
fixed order (keepers, openers, middle order, finishers, bowlers) and a
player chosen by one bucket is gone for the rest.

Within a bucket, each position takes the best-ranked player at the
highest credit the remaining budget allows. When the budget left cannot
cover even the cheapest remaining player, the algorithm sweeps backwards
over the positions already filled, downgrading each by one step on the
bucket's credit ladder (swapping in the best-ranked player at the lower
credit) until the budget recovers; sweeps repeat until they either free
enough credit or stop making progress, which means the cap is infeasible.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

from .credits import CreditConfig, CreditTable, build_credit_table
from .ranking import (BATTING_CLUSTERS, Cluster, ClusterRanking, PlayerLabels,
                      assign_labels, rank_all)
from .stats import Dataset


class Bucket(str, Enum):
    WICKETKEEPER = "wicketkeeper"
    OPENER = "opener"
    MIDDLE = "middle"
    FINISHER = "finisher"
    BOWLER = "bowler"

    def __str__(self) -> str:
        return self.value


BUCKET_ORDER = (Bucket.WICKETKEEPER, Bucket.OPENER, Bucket.MIDDLE,
                Bucket.FINISHER, Bucket.BOWLER)

_BUCKET_CLUSTER = {Bucket.OPENER: Cluster.OPENER, Bucket.MIDDLE: Cluster.MIDDLE,
                   Bucket.FINISHER: Cluster.FINISHER, Bucket.BOWLER: Cluster.BOWLER}


class SelectionError(ValueError):
    """Base for squad assembly failures."""


class ConfigError(SelectionError):
    """The team configuration itself is unusable."""


class InfeasibleError(SelectionError):
    """A bucket cannot be filled; kind is 'budget', 'supply' or 'diversity'."""

    def __init__(self, bucket: Bucket, kind: str, message: str):
        super().__init__(message)
        self.bucket = bucket
        self.kind = kind


@dataclass(frozen=True)
class KeeperRules:
    """Extra constraints for the wicketkeeper bucket.

    distinct_primary forbids two keepers sharing a primary role;
    required pins a 1-based keeper slot to a specific primary role.
    """

    distinct_primary: bool = True
    required: dict[int, Cluster] = field(default_factory=dict)


@dataclass(frozen=True)
class TeamConfig:
    size: int
    value: int
    bucket_sizes: dict[Bucket, int]
    keeper_rules: KeeperRules = field(default_factory=KeeperRules)

    def __post_init__(self):
        if self.size < 1:
            raise ConfigError("squad size must be at least 1")
        if self.value < 1:
            raise ConfigError("team value must be at least 1")
        for bucket, count in self.bucket_sizes.items():
            if not isinstance(bucket, Bucket):
                raise ConfigError("unknown bucket %r" % (bucket,))
            if count < 0:
                raise ConfigError("bucket %s size must be non-negative" % bucket.value)
        total = sum(self.bucket_sizes.values())
        if total != self.size:
            raise ConfigError("bucket sizes add up to %d but squad size is %d"
                              % (total, self.size))

    @classmethod
    def from_dict(cls, data: dict) -> "TeamConfig":
        if not isinstance(data, dict):
            raise ConfigError("team configuration must be an object")
        for key in ("size", "value", "buckets"):
            if key not in data:
                raise ConfigError("team configuration is missing %r" % key)
        size = _expect_int(data["size"], "size")
        value = _expect_int(data["value"], "value")
        raw_buckets = data["buckets"]
        if not isinstance(raw_buckets, dict):
            raise ConfigError("'buckets' must map bucket names to counts")
        bucket_sizes: dict[Bucket, int] = {}
        for name, count in raw_buckets.items():
            try:
                bucket = Bucket(name)
            except ValueError:
                raise ConfigError("unknown bucket %r; expected one of %s"
                                  % (name, ", ".join(b.value for b in BUCKET_ORDER))) from None
            bucket_sizes[bucket] = _expect_int(count, "buckets.%s" % name)
        rules = KeeperRules()
        if "keeper_rules" in data and data["keeper_rules"] is not None:
            raw_rules = data["keeper_rules"]
            if not isinstance(raw_rules, dict):
                raise ConfigError("'keeper_rules' must be an object")
            required: dict[int, Cluster] = {}
            for slot, cluster_name in (raw_rules.get("required") or {}).items():
                try:
                    position = int(slot)
                except (TypeError, ValueError):
                    raise ConfigError("keeper_rules.required keys must be slot "
                                      "numbers, got %r" % (slot,)) from None
                try:
                    required[position] = Cluster(cluster_name)
                except ValueError:
                    raise ConfigError("keeper_rules.required[%s] names unknown "
                                      "role %r" % (slot, cluster_name)) from None
            rules = KeeperRules(bool(raw_rules.get("distinct_primary", True)),
                                required)
        return cls(size, value, bucket_sizes, rules)

    def as_dict(self) -> dict:
        return {
            "size": self.size,
            "value": self.value,
            "buckets": {b.value: n for b, n in self.bucket_sizes.items()},
            "keeper_rules": {
                "distinct_primary": self.keeper_rules.distinct_primary,
                "required": {str(k): v.value
                             for k, v in self.keeper_rules.required.items()},
            },
        }


def _expect_int(value, label):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError("%s must be an integer, got %r" % (label, value))
    return value


def compute_caps(config: TeamConfig) -> tuple[int, dict[Bucket, int]]:
    """Per-player unit and per-bucket caps; the team value must divide
    evenly across the squad."""
    if config.value % config.size != 0:
        lower = (config.value // config.size) * config.size
        upper = lower + config.size
        feasible = ("%d and %d" % (lower, upper)) if lower >= config.size else str(upper)
        raise ConfigError("team value %d does not split evenly across %d "
                          "players; nearest feasible values: %s"
                          % (config.value, config.size, feasible))
    unit = config.value // config.size
    return unit, {b: unit * n for b, n in config.bucket_sizes.items()}


@dataclass(frozen=True)
class PoolEntry:
    player_id: str
    name: str
    credit: int
    primary: Cluster
    score: float


@dataclass(frozen=True)
class BucketPool:
    bucket: Bucket
    entries: tuple[PoolEntry, ...]


@dataclass(frozen=True)
class Slot:
    bucket: Bucket
    position: int
    player_id: str
    name: str
    credit: int


@dataclass(frozen=True)
class BucketFailure:
    bucket: Bucket
    position: int
    reason: str


@dataclass(frozen=True)
class TeamPlan:
    config: TeamConfig
    algorithm: str
    unit: int
    caps: dict[Bucket, int]
    slots: tuple[Slot, ...]
    failures: tuple[BucketFailure, ...] = ()

    def bucket_slots(self, bucket: Bucket) -> list[Slot]:
        return [s for s in self.slots if s.bucket is bucket]

    def spent(self, bucket: Bucket | None = None) -> int:
        return sum(s.credit for s in self.slots
                   if bucket is None or s.bucket is bucket)

    def remaining(self, bucket: Bucket) -> int:
        return self.caps.get(bucket, 0) - self.spent(bucket)

    def slot_of(self, player_id: str) -> Slot:
        for s in self.slots:
            if s.player_id == player_id:
                return s
        raise ValueError("player %r is not in the plan" % player_id)

    def player_ids(self) -> set[str]:
        return {s.player_id for s in self.slots}

    def as_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "config": self.config.as_dict(),
            "unit": self.unit,
            "caps": {b.value: c for b, c in self.caps.items()},
            "slots": [{"bucket": s.bucket.value, "position": s.position,
                       "player_id": s.player_id, "name": s.name,
                       "credit": s.credit} for s in self.slots],
            "spent": {b.value: self.spent(b) for b in self.caps},
            "total_spent": self.spent(),
            "failures": [{"bucket": f.bucket.value, "position": f.position,
                          "reason": f.reason} for f in self.failures],
        }


SlotConstraint = Callable[[int, PoolEntry, Sequence[PoolEntry]], bool]


def build_bucket_pools(dataset: Dataset,
                       rankings: dict[Cluster, ClusterRanking],
                       labels: dict[str, PlayerLabels],
                       credit_table: CreditTable) -> dict[Bucket, BucketPool]:
    """Candidate pool per bucket, in rank order, priced with cluster credits.

    The three batting buckets take the players labelled for that role, in
    that role's ranking order. The keeper bucket takes every wicketkeeper
    from the batting pool, ordered by their primary-role final score and
    priced at their primary-role credit.
    """
    pools: dict[Bucket, BucketPool] = {}
    for bucket, cluster in _BUCKET_CLUSTER.items():
        ranking = rankings[cluster]
        entries = []
        for e in ranking.entries:
            if cluster is not Cluster.BOWLER and cluster not in labels[e.player_id].labels:
                continue
            primary = (Cluster.BOWLER if cluster is Cluster.BOWLER
                       else labels[e.player_id].primary)
            entries.append(PoolEntry(e.player_id, e.name,
                                     credit_table.credit(cluster, e.player_id),
                                     primary, e.final_score))
        pools[bucket] = BucketPool(bucket, tuple(entries))

    keepers = []
    for player_id, player_labels in labels.items():
        meta = dataset.player(player_id)
        if not meta.is_wicketkeeper or meta.is_retired:
            continue
        primary = player_labels.primary
        entry = rankings[primary].entry(player_id)
        keepers.append(PoolEntry(player_id, meta.name,
                                 credit_table.credit(primary, player_id),
                                 primary, entry.final_score))
    keepers.sort(key=lambda e: (-e.score, e.player_id))
    pools[Bucket.WICKETKEEPER] = BucketPool(Bucket.WICKETKEEPER, tuple(keepers))
    return pools


def greedy_fill_bucket(pool: BucketPool, size: int, cap: int, *,
                       unavailable: frozenset[str] = frozenset(),
                       constraint: SlotConstraint | None = None,
                       ) -> list[PoolEntry]:
    """Fill one bucket's positions; see the module docstring for the sweep
    behaviour. Returns the chosen entries in position order."""
    if size <= 0:
        return []
    available = [e for e in pool.entries if e.player_id not in unavailable]
    if len(available) < size:
        raise InfeasibleError(pool.bucket, "supply",
                              "bucket %s needs %d players but only %d are available"
                              % (pool.bucket.value, size, len(available)))
    ladder = sorted({e.credit for e in available}, reverse=True)
    floor = min(e.credit for e in available)
    if size * floor > cap:
        raise InfeasibleError(pool.bucket, "budget",
                              "bucket %s cap %d cannot cover %d players at the "
                              "cheapest credit %d" % (pool.bucket.value, cap, size, floor))

    slots: list[PoolEntry] = []

    def remaining_entries(skip: int | None = None):
        taken = {e.player_id for i, e in enumerate(slots) if i != skip}
        return [e for e in available if e.player_id not in taken]

    def valid_for(position: int, entries: list[PoolEntry],
                  skip: int | None = None) -> list[PoolEntry]:
        if constraint is None:
            return entries
        others = [e for i, e in enumerate(slots) if i != skip]
        return [e for e in entries if constraint(position, e, others)]

    def budget_floor(position: int) -> int | None:
        candidates = valid_for(position, remaining_entries())
        return min((e.credit for e in candidates), default=None)

    for position in range(1, size + 1):
        pool_left = remaining_entries()
        if not pool_left:
            raise InfeasibleError(pool.bucket, "supply",
                                  "bucket %s ran out of players at position %d"
                                  % (pool.bucket.value, position))
        candidates = valid_for(position, pool_left)
        if not candidates:
            raise InfeasibleError(pool.bucket, "diversity",
                                  "no player satisfies the constraints for %s "
                                  "position %d" % (pool.bucket.value, position))
        spent = sum(e.credit for e in slots)
        if cap - spent < min(e.credit for e in candidates):
            _downgrade_until_affordable(pool, slots, cap, position,
                                        remaining_entries, valid_for,
                                        budget_floor, ladder)
            spent = sum(e.credit for e in slots)
            candidates = valid_for(position, remaining_entries())
            if not candidates:
                raise InfeasibleError(pool.bucket, "diversity",
                                      "no player satisfies the constraints for %s "
                                      "position %d" % (pool.bucket.value, position))
        affordable = [e for e in candidates if e.credit <= cap - spent]
        best_credit = max(e.credit for e in affordable)
        for entry in candidates:
            if entry.credit == best_credit:
                slots.append(entry)
                break
    return slots


def _downgrade_until_affordable(pool, slots, cap, position,
                                remaining_entries, valid_for, budget_floor,
                                ladder) -> None:
    """Backward sweeps over filled positions, one ladder step per visit,
    until the remaining budget covers the cheapest valid candidate."""
    while True:
        progressed = False
        for j in range(len(slots) - 1, -1, -1):
            floor = budget_floor(position)
            if floor is None:
                return
            if cap - sum(e.credit for e in slots) >= floor:
                return
            occupant = slots[j]
            target = next((c for c in ladder if c < occupant.credit), None)
            if target is None or target < floor:
                continue
            replacements = [e for e in valid_for(j + 1, remaining_entries(skip=j), skip=j)
                            if e.credit == target]
            if not replacements:
                raise InfeasibleError(pool.bucket, "supply",
                                      "no player left at credit %d to downgrade "
                                      "%s position %d" % (target, pool.bucket.value, j + 1))
            slots[j] = replacements[0]
            progressed = True
        floor = budget_floor(position)
        if floor is not None and cap - sum(e.credit for e in slots) >= floor:
            return
        if not progressed:
            raise InfeasibleError(pool.bucket, "budget",
                                  "bucket %s cap %d is too small even after "
                                  "downgrading earlier picks" % (pool.bucket.value, cap))


def bucket_constraint(config: TeamConfig, algorithm: str,
                      bucket: Bucket) -> SlotConstraint | None:
    """The slot constraint in force for one bucket under one algorithm."""
    if algorithm == "v2" and bucket is Bucket.WICKETKEEPER:
        return _keeper_constraint(config.keeper_rules)
    return None


def _keeper_constraint(rules: KeeperRules) -> SlotConstraint | None:
    if not rules.distinct_primary and not rules.required:
        return None

    def ok(position: int, entry: PoolEntry, others: Sequence[PoolEntry]) -> bool:
        wanted = rules.required.get(position)
        if wanted is not None and entry.primary != wanted:
            return False
        if rules.distinct_primary and any(o.primary == entry.primary for o in others):
            return False
        return True

    return ok


def select_team(dataset: Dataset, config: TeamConfig, algorithm: str = "v1", *,
                pools: dict[Bucket, BucketPool] | None = None,
                credit_config: CreditConfig | None = None,
                unavailable: frozenset[str] = frozenset()) -> TeamPlan:
    """Run the full pipeline and fill every bucket in order.

    v1 ignores keeper rules; v2 enforces them on the wicketkeeper bucket.
    """
    if algorithm not in ("v1", "v2"):
        raise ConfigError("algorithm must be 'v1' or 'v2', got %r" % algorithm)
    unit, caps = compute_caps(config)
    if pools is None:
        pools = default_pools(dataset, credit_config)

    chosen: set[str] = set(unavailable)
    slots: list[Slot] = []
    for bucket in BUCKET_ORDER:
        count = config.bucket_sizes.get(bucket, 0)
        if count == 0:
            continue
        constraint = bucket_constraint(config, algorithm, bucket)
        picks = greedy_fill_bucket(pools[bucket], count, caps[bucket],
                                   unavailable=frozenset(chosen),
                                   constraint=constraint)
        for i, entry in enumerate(picks, start=1):
            slots.append(Slot(bucket, i, entry.player_id, entry.name, entry.credit))
            chosen.add(entry.player_id)
    return TeamPlan(config, algorithm, unit, dict(caps), tuple(slots))


def select_team_v1(dataset: Dataset, config: TeamConfig, **kwargs) -> TeamPlan:
    return select_team(dataset, config, "v1", **kwargs)


def select_team_v2(dataset: Dataset, config: TeamConfig, **kwargs) -> TeamPlan:
    return select_team(dataset, config, "v2", **kwargs)


def default_pools(dataset: Dataset,
                  credit_config: CreditConfig | None = None,
                  ) -> dict[Bucket, BucketPool]:
    rankings = rank_all(dataset)
    labels = assign_labels(*(rankings[c] for c in BATTING_CLUSTERS))
    table = build_credit_table(rankings, credit_config)
    return build_bucket_pools(dataset, rankings, labels, table)


def recommend_alternates(plan: TeamPlan, player_id: str,
                         pools: dict[Bucket, BucketPool], *,
                         unavailable: frozenset[str] = frozenset(),
                         limit: int | None = 5) -> list[PoolEntry]:
    """Stand-in suggestions for one slot: unselected players from the same
    bucket pool, nearest in credit first (richer side winning ties), then
    by pool rank. limit=None returns the whole ordered list."""
    slot = plan.slot_of(player_id)
    taken = plan.player_ids()
    pool = pools[slot.bucket]
    candidates = [(abs(e.credit - slot.credit), -e.credit, i, e)
                  for i, e in enumerate(pool.entries)
                  if e.player_id not in taken and e.player_id not in unavailable]
    candidates.sort(key=lambda item: item[:3])
    return [e for _, _, _, e in candidates[:limit]]


def plan_to_csv(plan: TeamPlan) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["bucket", "position", "player_id", "name", "credit"])
    for bucket in BUCKET_ORDER:
        for s in plan.bucket_slots(bucket):
            w.writerow([s.bucket.value, s.position, s.player_id, s.name, s.credit])
    return buf.getvalue()
