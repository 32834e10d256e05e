"""Rank T20 players, price them into credit tiers, and build auction squads."""

from .credits import (CreditAssignment, CreditConfig, CreditTable,
                      assign_credits, build_credit_table, credits_to_csv)
from .features import (BattingFeatures, BowlingFeatures, Experience,
                       batting_features, bowling_features, cost_normalize,
                       experience_factors)
from .ranking import (ALL_CLUSTERS, BATTING_CLUSTERS, DEFAULT_PROFILES,
                      Cluster, ClusterRanking, PlayerLabels, RankedPlayer,
                      assign_labels, final_rank_score, profile_score, rank_all,
                      rank_cluster, rankings_to_csv, validate_profiles)
from .selection import (BUCKET_ORDER, Bucket, BucketFailure, BucketPool,
                        ConfigError, InfeasibleError, KeeperRules, PoolEntry,
                        SelectionError, Slot, TeamConfig, TeamPlan,
                        build_bucket_pools, compute_caps, default_pools,
                        greedy_fill_bucket, plan_to_csv, recommend_alternates,
                        select_team, select_team_v1, select_team_v2)
from .session import (AuctionSession, MarkResult, SessionError, SessionStore,
                      Substitution, UnknownSessionError)
from .stats import (BattingRecord, BowlingRecord, Dataset, DatasetError,
                    PlayerMeta, UnknownPlayerError, load_dataset,
                    load_dataset_dir, save_dataset)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
