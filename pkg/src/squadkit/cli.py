"""Command line entry points.

Every command reads the dataset from --data (or the SQUADKIT_DATA
environment variable) and fails with a clean message on invalid files
or configurations.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .credits import build_credit_table, credits_to_csv
from .ranking import BATTING_CLUSTERS, Cluster, assign_labels, rank_all, rankings_to_csv
from .selection import (SelectionError, TeamConfig, build_bucket_pools,
                        plan_to_csv, recommend_alternates, select_team)
from .stats import DatasetError, load_dataset_dir, save_dataset


@click.group()
@click.option("--data", "data_dir", envvar="SQUADKIT_DATA", default="data",
              show_default=True, metavar="DIR",
              help="Directory holding players.csv, batting.csv and bowling.csv "
                   "(also read from SQUADKIT_DATA).")
@click.pass_context
def cli(ctx, data_dir):
    """Rank players, price them into credits and build auction squads."""
    ctx.obj = data_dir


def _load(ctx):
    try:
        return load_dataset_dir(ctx.obj)
    except (DatasetError, OSError) as exc:
        raise click.ClickException(str(exc)) from None


def _load_config(path):
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise click.ClickException("cannot read team config %s: %s" % (path, exc)) from None
    try:
        return TeamConfig.from_dict(raw)
    except SelectionError as exc:
        raise click.ClickException(str(exc)) from None


def _emit(text, out):
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")
        click.echo("wrote %s" % out, err=True)


@cli.command()
@click.option("--save", "save_dir", default=None, metavar="DIR",
              help="Write a normalized copy of the dataset to DIR.")
@click.pass_context
def ingest(ctx, save_dir):
    """Validate the dataset and print a summary."""
    d = _load(ctx)
    click.echo("players: %d (%d retired, %d wicketkeepers)"
               % (len(d.players), sum(p.is_retired for p in d.players),
                  sum(p.is_wicketkeeper for p in d.players)))
    click.echo("batting rows: %d, bowling rows: %d" % (len(d.batting), len(d.bowling)))
    click.echo("current season: %d" % d.current_season)
    click.echo("batting candidates: %d, bowling candidates: %d"
               % (len(d.batting_candidates()), len(d.bowling_candidates())))
    if save_dir is not None:
        save_dataset(d, save_dir)
        click.echo("saved normalized copy to %s" % save_dir)


@cli.command()
@click.option("--cluster", "cluster_name", default=None,
              type=click.Choice([c.value for c in Cluster]),
              help="Limit output to one role.")
@click.option("--out", default=None, metavar="FILE", help="Write CSV to FILE.")
@click.pass_context
def rank(ctx, cluster_name, out):
    """Print the role rankings as CSV."""
    d = _load(ctx)
    rankings = rank_all(d)
    labels = assign_labels(*(rankings[c] for c in BATTING_CLUSTERS))
    if cluster_name is not None:
        rankings = {Cluster(cluster_name): rankings[Cluster(cluster_name)]}
    _emit(rankings_to_csv(rankings, labels), out)


@cli.command()
@click.option("--out", default=None, metavar="FILE", help="Write CSV to FILE.")
@click.pass_context
def credits(ctx, out):
    """Print the credit assignment for every role as CSV."""
    d = _load(ctx)
    table = build_credit_table(rank_all(d))
    _emit(credits_to_csv(table), out)


@cli.command()
@click.option("--config", "config_path", required=True, metavar="FILE",
              help="Team configuration JSON.")
@click.option("--algorithm", default="v1", type=click.Choice(["v1", "v2"]),
              show_default=True)
@click.option("--unavailable", multiple=True, metavar="PLAYER_ID",
              help="Exclude a player before selecting (repeatable).")
@click.option("--out", default=None, metavar="FILE", help="Write CSV to FILE.")
@click.pass_context
def select(ctx, config_path, algorithm, unavailable, out):
    """Build a squad plan and print it as CSV."""
    d = _load(ctx)
    config = _load_config(config_path)
    try:
        plan = select_team(d, config, algorithm,
                           unavailable=frozenset(unavailable))
    except SelectionError as exc:
        raise click.ClickException(str(exc)) from None
    _emit(plan_to_csv(plan), out)
    click.echo("spent %d of %d credits" % (plan.spent(), config.value), err=True)


@cli.command()
@click.option("--config", "config_path", required=True, metavar="FILE",
              help="Team configuration JSON.")
@click.option("--player", "player_id", required=True, metavar="PLAYER_ID",
              help="Planned player to find stand-ins for.")
@click.option("--algorithm", default="v1", type=click.Choice(["v1", "v2"]),
              show_default=True)
@click.option("--limit", default=5, show_default=True)
@click.pass_context
def alternate(ctx, config_path, player_id, algorithm, limit):
    """List stand-ins for one planned player."""
    d = _load(ctx)
    config = _load_config(config_path)
    rankings = rank_all(d)
    labels = assign_labels(*(rankings[c] for c in BATTING_CLUSTERS))
    pools = build_bucket_pools(d, rankings, labels, build_credit_table(rankings))
    try:
        plan = select_team(d, config, algorithm, pools=pools)
        options = recommend_alternates(plan, player_id, pools, limit=limit)
    except (SelectionError, ValueError) as exc:
        raise click.ClickException(str(exc)) from None
    slot = plan.slot_of(player_id)
    click.echo("%s holds %s position %d at credit %d"
               % (player_id, slot.bucket.value, slot.position, slot.credit))
    for e in options:
        click.echo("%s,%s,%d" % (e.player_id, e.name, e.credit))


@cli.command()
@click.option("--out", "out_dir", required=True, metavar="DIR",
              help="Directory for the CSV files and charts.")
@click.option("--config", "config_path", default=None, metavar="FILE",
              help="Team configuration JSON; adds the plan and budget chart.")
@click.option("--algorithm", default="v1", type=click.Choice(["v1", "v2"]),
              show_default=True)
@click.pass_context
def report(ctx, out_dir, config_path, algorithm):
    """Write ranking and credit CSVs plus PNG charts to a directory."""
    from .report import render_report

    d = _load(ctx)
    config = _load_config(config_path) if config_path else None
    try:
        written = render_report(d, out_dir, config=config, algorithm=algorithm)
    except SelectionError as exc:
        raise click.ClickException(str(exc)) from None
    for path in written:
        click.echo(str(path))


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@click.option("--sessions", "session_dir", default=None, metavar="DIR",
              help="Persist session event logs to DIR and reload them on start.")
@click.option("--static", "static_dir", default=None, metavar="DIR",
              help="Serve a built web console from DIR at /.")
@click.pass_context
def serve(ctx, host, port, session_dir, static_dir):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    d = _load(ctx)
    app = create_app(d, session_dir=session_dir, static_dir=static_dir)
    click.echo("serving on http://%s:%d" % (host, port), err=True)
    uvicorn.run(app, host=host, port=port, log_level="warning")


def main():
    cli(prog_name="squadkit")


if __name__ == "__main__":
    sys.exit(main())
