"""Render rankings, credit tiers and plan budgets to CSV files and charts."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .credits import CreditConfig, build_credit_table, credits_to_csv
from .ranking import BATTING_CLUSTERS, Cluster, assign_labels, rank_all, rankings_to_csv
from .selection import (BUCKET_ORDER, TeamConfig, build_bucket_pools,
                        plan_to_csv, select_team)


def render_report(dataset, out_dir: str | Path, *,
                  config: TeamConfig | None = None,
                  algorithm: str = "v1",
                  credit_config: CreditConfig | None = None,
                  top: int = 12) -> list[Path]:
    """Write the report files into out_dir and return their paths.

    Without a team configuration the report covers rankings and credit
    tiers; with one it adds the squad plan and its budget usage chart.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    rankings = rank_all(dataset)
    labels = assign_labels(*(rankings[c] for c in BATTING_CLUSTERS))
    table = build_credit_table(rankings, credit_config)

    path = out / "rankings.csv"
    path.write_text(rankings_to_csv(rankings, labels), encoding="utf-8")
    written.append(path)
    path = out / "credits.csv"
    path.write_text(credits_to_csv(table), encoding="utf-8")
    written.append(path)

    written.append(_plot_final_scores(rankings, out / "final_scores.png", top))
    written.append(_plot_credit_tiers(table, out / "credit_tiers.png"))

    if config is not None:
        pools = build_bucket_pools(dataset, rankings, labels, table)
        plan = select_team(dataset, config, algorithm, pools=pools)
        path = out / ("plan_%s.csv" % algorithm)
        path.write_text(plan_to_csv(plan), encoding="utf-8")
        written.append(path)
        written.append(_plot_budget_usage(plan, out / "budget_usage.png"))
    return written


def _plot_final_scores(rankings, path: Path, top: int) -> Path:
    fig, axes = plt.subplots(2, 2, figsize=(11, 8))
    order = (Cluster.OPENER, Cluster.MIDDLE, Cluster.FINISHER, Cluster.BOWLER)
    for ax, cluster in zip(axes.flat, order):
        entries = rankings[cluster].entries[:top]
        names = [e.name for e in entries][::-1]
        scores = [e.final_score for e in entries][::-1]
        ax.barh(names, scores, color="#3b6ea5")
        ax.set_title("%s: top %d by final score" % (cluster.value, len(entries)))
        ax.tick_params(labelsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _plot_credit_tiers(table, path: Path) -> Path:
    clusters = [c.value for c in
                (Cluster.OPENER, Cluster.MIDDLE, Cluster.FINISHER, Cluster.BOWLER)]
    tiers = sorted({a.credit for a in table.assignments}, reverse=True)
    counts = {c: Counter() for c in clusters}
    for a in table.assignments:
        counts[a.cluster.value][a.credit] += 1

    fig, ax = plt.subplots(figsize=(8, 5))
    width = 0.8 / max(1, len(tiers))
    for i, tier in enumerate(tiers):
        xs = [j + i * width for j in range(len(clusters))]
        ys = [counts[c][tier] for c in clusters]
        ax.bar(xs, ys, width=width, label="credit %d" % tier)
    ax.set_xticks([j + width * (len(tiers) - 1) / 2 for j in range(len(clusters))])
    ax.set_xticklabels(clusters)
    ax.set_ylabel("players")
    ax.set_title("credit tier sizes per role")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _plot_budget_usage(plan, path: Path) -> Path:
    buckets = [b for b in BUCKET_ORDER if b in plan.caps]
    names = [b.value for b in buckets]
    caps = [plan.caps[b] for b in buckets]
    spent = [plan.spent(b) for b in buckets]

    fig, ax = plt.subplots(figsize=(8, 5))
    xs = range(len(buckets))
    ax.bar(xs, caps, width=0.6, color="#d0d7de", label="cap")
    ax.bar(xs, spent, width=0.6, color="#2f8f4e", label="spent")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(names)
    ax.set_ylabel("credits")
    ax.set_title("budget usage per bucket (%s)" % plan.algorithm)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
