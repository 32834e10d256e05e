"""Builders for synthetic bucket pools and a tiny brute-force
feasibility oracle, shared by the selection and acceptance tests."""

from itertools import combinations_with_replacement

from squadkit import Bucket, BucketPool, Cluster, PoolEntry

BUCKET_PRIMARY = {Bucket.WICKETKEEPER: Cluster.FINISHER,
                  Bucket.OPENER: Cluster.OPENER,
                  Bucket.MIDDLE: Cluster.MIDDLE,
                  Bucket.FINISHER: Cluster.FINISHER,
                  Bucket.BOWLER: Cluster.BOWLER}


def make_pool(bucket, credits, prefix=None, primaries=None):
    """A bucket pool from a list of credits in rank order; ids are
    <prefix>01, <prefix>02, ... and scores fall with rank."""
    prefix = prefix or bucket.value[0]
    entries = []
    for i, credit in enumerate(credits, start=1):
        primary = (primaries[i - 1] if primaries is not None
                   else BUCKET_PRIMARY[bucket])
        entries.append(PoolEntry("%s%02d" % (prefix, i),
                                 "%s%02d" % (prefix.upper(), i),
                                 credit, primary, 1000.0 - i))
    return BucketPool(bucket, tuple(entries))


def ample_credits(per_tier, tiers=(10, 9, 8, 7)):
    """Credits for a pool holding per_tier players at every tier value."""
    out = []
    for tier in tiers:
        out.extend([tier] * per_tier)
    return out


def ample_pools(per_tier=6, tiers=(10, 9, 8, 7)):
    """One ample pool per bucket, distinct id namespaces."""
    prefixes = {Bucket.WICKETKEEPER: "wk", Bucket.OPENER: "op",
                Bucket.MIDDLE: "mi", Bucket.FINISHER: "fi",
                Bucket.BOWLER: "bo"}
    return {b: make_pool(b, ample_credits(per_tier, tiers), prefixes[b])
            for b in prefixes}


def lex_max_vector(size, cap, tiers=(10, 9, 8, 7)):
    """Best feasible credit multiset: the lexicographically greatest
    non-increasing vector of `size` tier values with sum <= cap, or None.
    Assumes supply is ample (any tier can repeat up to `size` times)."""
    best = None
    values = sorted(tiers, reverse=True)
    for combo in combinations_with_replacement(values, size):
        if sum(combo) <= cap and (best is None or combo > best):
            best = combo
    return best
