from pathlib import Path

import pytest

from squadkit import (BATTING_CLUSTERS, Bucket, TeamConfig, assign_labels,
                      build_bucket_pools, build_credit_table, load_dataset_dir,
                      rank_all)

ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = ROOT / "data"
GOLDEN_DIR = ROOT / "tests" / "golden"


@pytest.fixture(scope="session")
def dataset():
    return load_dataset_dir(DATA_DIR)


@pytest.fixture(scope="session")
def rankings(dataset):
    return rank_all(dataset)


@pytest.fixture(scope="session")
def labels(rankings):
    return assign_labels(*(rankings[c] for c in BATTING_CLUSTERS))


@pytest.fixture(scope="session")
def credit_table(rankings):
    return build_credit_table(rankings)


@pytest.fixture(scope="session")
def pools(dataset, rankings, labels, credit_table):
    return build_bucket_pools(dataset, rankings, labels, credit_table)


@pytest.fixture
def team_config():
    return TeamConfig(15, 135, {Bucket.WICKETKEEPER: 2, Bucket.OPENER: 2,
                                Bucket.MIDDLE: 3, Bucket.FINISHER: 2,
                                Bucket.BOWLER: 6})
