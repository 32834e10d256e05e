"""Reference computation for the bundled dataset, kept independent of squadkit.

This script re-derives every feature, cluster score, rank, label and credit
for data/ using only the csv module and inline arithmetic. Its output under
tests/golden/ is committed; the test suite compares the library against these
files. Regenerate with:

    python tests/golden_oracle.py [--summary]
"""

from __future__ import annotations

import csv
import json
import math
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
GOLDEN = ROOT / "tests" / "golden"

CREDIT_VALUES = (10, 9, 8, 7)


def read_rows(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def load():
    players = {}
    for row in read_rows(DATA / "players.csv"):
        players[row["id"]] = {
            "name": row["name"],
            "keeper": row["is_wicketkeeper"] == "true",
            "retired": row["is_retired"] == "true",
        }
    batting = []
    for row in read_rows(DATA / "batting.csv"):
        batting.append({k: (row[k] if k == "id" else int(row[k])) for k in row})
    bowling = []
    for row in read_rows(DATA / "bowling.csv"):
        bowling.append({k: (row[k] if k == "id" else int(row[k])) for k in row})
    return players, batting, bowling


BAT_FIELDS = ("innings", "not_outs", "runs", "balls", "hundreds", "fifties", "fours", "sixes")
BOWL_FIELDS = ("innings", "balls", "runs_conceded", "wickets", "four_hauls", "five_hauls")


def sum_rows(rows, fields):
    out = {f: 0 for f in fields}
    for r in rows:
        for f in fields:
            out[f] += r[f]
    return out


def batting_feats(r):
    avg = r["runs"] / max(1, r["innings"] - r["not_outs"])
    sr = 100.0 * r["runs"] / r["balls"] if r["balls"] > 0 else 0.0
    boundary = 4 * r["fours"] + 6 * r["sixes"]
    hh = boundary / r["balls"] if r["balls"] > 0 else 0.0
    rw_den = r["balls"] - r["fours"] - r["sixes"]
    rw = (r["runs"] - boundary) / rw_den if rw_den > 0 else 0.0
    hc = (r["fifties"] + r["hundreds"]) / r["innings"] if r["innings"] > 0 else 0.0
    nof = r["not_outs"] / r["innings"] if r["innings"] > 0 else 0.0
    return {"average": avg, "strike_rate": sr, "hard_hitting": hh,
            "run_wicket": rw, "hc_per_innings": hc, "not_out_fraction": nof}


def bowling_feats(r):
    wpb = r["wickets"] / r["balls"] if r["balls"] > 0 else 0.0
    rc = r["runs_conceded"] if r["runs_conceded"] > 0 else 1
    inv_avg = r["wickets"] / rc
    inv_eco = r["balls"] / (6.0 * rc)
    residual = r["wickets"] - 4 * r["four_hauls"] - 5 * r["five_hauls"]
    cons = ((4 * r["four_hauls"] + 5 * r["five_hauls"] + residual) * 6.0 / r["balls"]
            if r["balls"] > 0 else 0.0)
    return {"wicket_per_ball": wpb, "consistency": cons,
            "inv_average": inv_avg, "inv_economy": inv_eco}


def cost(values):
    top = max(values.values())
    if top == 0:
        return {k: 0.0 for k in values}
    return {k: v / top for k, v in values.items()}


def main():
    players, batting, bowling = load()

    seasons = [r["season"] for r in batting] + [r["season"] for r in bowling]
    current = max(seasons)

    bat_by_player = {}
    for r in batting:
        bat_by_player.setdefault(r["id"], []).append(r)
    bowl_by_player = {}
    for r in bowling:
        bowl_by_player.setdefault(r["id"], []).append(r)

    bat_pool = sorted(p for p in bat_by_player if not players[p]["retired"])
    bowl_pool = sorted(p for p in bowl_by_player if not players[p]["retired"])

    career_bat, current_bat = {}, {}
    for p in bat_pool:
        rows = bat_by_player[p]
        career_bat[p] = sum_rows(rows, BAT_FIELDS)
        cur = [r for r in rows if r["season"] == current]
        current_bat[p] = sum_rows(cur, BAT_FIELDS) if cur else {f: 0 for f in BAT_FIELDS}
    career_bowl, current_bowl = {}, {}
    for p in bowl_pool:
        rows = bowl_by_player[p]
        career_bowl[p] = sum_rows(rows, BOWL_FIELDS)
        cur = [r for r in rows if r["season"] == current]
        current_bowl[p] = sum_rows(cur, BOWL_FIELDS) if cur else {f: 0 for f in BOWL_FIELDS}

    n_total = 1
    for p in bat_by_player:
        n_total = max(n_total, sum_rows(bat_by_player[p], BAT_FIELDS)["innings"])
    for p in bowl_by_player:
        n_total = max(n_total, sum_rows(bowl_by_player[p], BOWL_FIELDS)["innings"])

    feats_career = {p: batting_feats(career_bat[p]) for p in bat_pool}
    feats_current = {p: batting_feats(current_bat[p]) for p in bat_pool}
    bfeats_career = {p: bowling_feats(career_bowl[p]) for p in bowl_pool}
    bfeats_current = {p: bowling_feats(current_bowl[p]) for p in bowl_pool}

    # cost-normalised batting features, per view, over the shared batsman pool
    cost_career, cost_current = {}, {}
    for name in ("strike_rate", "average", "run_wicket", "hard_hitting"):
        cc = cost({p: feats_career[p][name] for p in bat_pool})
        cu = cost({p: feats_current[p][name] for p in bat_pool})
        for p in bat_pool:
            cost_career.setdefault(p, {})[name] = cc[p]
            cost_current.setdefault(p, {})[name] = cu[p]

    def batting_score(kind, p, costs, feats):
        c, f = costs[p], feats[p]
        if kind == "opener":
            return (30.0 * c["strike_rate"] + 30.0 * c["average"]
                    + 20.0 * f["hc_per_innings"] + 10.0 * c["run_wicket"]
                    + 10.0 * c["hard_hitting"])
        if kind == "middle":
            return (20.0 * c["strike_rate"] + 30.0 * c["average"]
                    + 10.0 * f["hc_per_innings"] + 25.0 * c["run_wicket"]
                    + 15.0 * c["hard_hitting"])
        return (40.0 * c["strike_rate"] + 40.0 * c["hard_hitting"]
                + 5.0 * f["not_out_fraction"] + 15.0 * c["run_wicket"])

    def bowling_score(p, feats):
        f = feats[p]
        return (35.0 * f["wicket_per_ball"] + 35.0 * f["consistency"]
                + 10.0 * f["inv_average"] + 10.0 * f["inv_economy"])

    def cost_xfact(pool, career):
        xf = {p: career[p]["innings"] / n_total for p in pool}
        rng = max(xf.values()) - min(xf.values()) if xf else 0.0
        if rng == 0.0:
            return {p: 1.0 for p in pool}
        return {p: xf[p] / rng for p in pool}

    cx_bat = cost_xfact(bat_pool, career_bat)
    cx_bowl = cost_xfact(bowl_pool, career_bowl)

    rankings = {}
    meta = {"current_season": current, "total_league_innings": n_total,
            "batting_candidates": len(bat_pool), "bowling_candidates": len(bowl_pool),
            "mean_current": {}}
    for kind in ("opener", "middle", "finisher"):
        career_scores = {p: batting_score(kind, p, cost_career, feats_career) for p in bat_pool}
        current_scores = {p: batting_score(kind, p, cost_current, feats_current) for p in bat_pool}
        mean_cur = sum(current_scores.values()) / len(bat_pool) if bat_pool else 0.0
        final = {}
        for p in bat_pool:
            if mean_cur == 0.0:
                final[p] = current_scores[p]
            else:
                final[p] = (career_scores[p] * cx_bat[p] * (current_scores[p] / mean_cur)
                            + current_scores[p])
        order = sorted(bat_pool, key=lambda p: (-final[p], p))
        rankings[kind] = [(p, career_scores[p], current_scores[p], final[p]) for p in order]
        meta["mean_current"][kind] = mean_cur

    career_scores = {p: bowling_score(p, bfeats_career) for p in bowl_pool}
    current_scores = {p: bowling_score(p, bfeats_current) for p in bowl_pool}
    mean_cur = sum(current_scores.values()) / len(bowl_pool) if bowl_pool else 0.0
    final = {}
    for p in bowl_pool:
        if mean_cur == 0.0:
            final[p] = current_scores[p]
        else:
            final[p] = (career_scores[p] * cx_bowl[p] * (current_scores[p] / mean_cur)
                        + current_scores[p])
    order = sorted(bowl_pool, key=lambda p: (-final[p], p))
    rankings["bowler"] = [(p, career_scores[p], current_scores[p], final[p]) for p in order]
    meta["mean_current"]["bowler"] = mean_cur

    # labels over the three batting rankings
    pos = {kind: {p: i + 1 for i, (p, _, _, _) in enumerate(rankings[kind])}
           for kind in ("opener", "middle", "finisher")}
    score = {kind: {p: f for (p, _, _, f) in rankings[kind]}
             for kind in ("opener", "middle", "finisher")}
    labels = {}
    for p in bat_pool:
        best = None
        for kind in ("opener", "middle", "finisher"):
            cand = (-score[kind][p], pos[kind][p])
            if best is None or cand < best[0]:
                best = (cand, kind)
        primary = best[1]
        lab = sorted(k for k in ("opener", "middle", "finisher")
                     if pos[k][p] <= pos[primary][p])
        labels[p] = {"primary": primary, "labels": lab}

    credits = {}
    for kind in ("opener", "middle", "finisher", "bowler"):
        n = len(rankings[kind])
        g = math.ceil(n / len(CREDIT_VALUES))
        credits[kind] = [(p, CREDIT_VALUES[(i) // g]) for i, (p, _, _, _) in enumerate(rankings[kind])]

    GOLDEN.mkdir(parents=True, exist_ok=True)
    with open(GOLDEN / "batting_features.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["player_id", "view", "average", "strike_rate", "hard_hitting",
                    "run_wicket", "hc_per_innings", "not_out_fraction"])
        for p in bat_pool:
            for view, feats in (("career", feats_career), ("current", feats_current)):
                f = feats[p]
                w.writerow([p, view] + [repr(f[k]) for k in
                           ("average", "strike_rate", "hard_hitting",
                            "run_wicket", "hc_per_innings", "not_out_fraction")])
    with open(GOLDEN / "bowling_features.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["player_id", "view", "wicket_per_ball", "consistency",
                    "inv_average", "inv_economy"])
        for p in bowl_pool:
            for view, feats in (("career", bfeats_career), ("current", bfeats_current)):
                f = feats[p]
                w.writerow([p, view] + [repr(f[k]) for k in
                           ("wicket_per_ball", "consistency", "inv_average", "inv_economy")])
    with open(GOLDEN / "rankings.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["cluster", "rank", "player_id", "career_score", "current_score", "final_score"])
        for kind in ("opener", "middle", "finisher", "bowler"):
            for i, (p, ca, cu, fi) in enumerate(rankings[kind], start=1):
                w.writerow([kind, i, p, repr(ca), repr(cu), repr(fi)])
    with open(GOLDEN / "labels.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["player_id", "primary", "labels"])
        for p in bat_pool:
            w.writerow([p, labels[p]["primary"], "|".join(labels[p]["labels"])])
    with open(GOLDEN / "credits.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["cluster", "rank", "player_id", "credit"])
        for kind in ("opener", "middle", "finisher", "bowler"):
            for i, (p, c) in enumerate(credits[kind], start=1):
                w.writerow([kind, i, p, c])
    with open(GOLDEN / "meta.json", "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")

    if "--summary" in sys.argv:
        summarise(players, rankings, labels, credits)
    print("golden files written to %s" % GOLDEN)


def summarise(players, rankings, labels, credits):
    credit_of = {kind: dict(credits[kind]) for kind in credits}
    print("== keepers (primary, primary credit, primary final) ==")
    keeper_rows = []
    for kind in ("opener", "middle", "finisher"):
        for p, _, _, fi in rankings[kind]:
            if players[p]["keeper"] and labels[p]["primary"] == kind:
                keeper_rows.append((fi, p, kind, credit_of[kind][p]))
    for fi, p, kind, cr in sorted(keeper_rows, reverse=True):
        print("  %-14s %-8s credit=%d final=%.3f" % (p, kind, cr, fi))
    for kind in ("opener", "middle", "finisher"):
        pool = [(p, credit_of[kind][p]) for p, _, _, _ in rankings[kind]
                if kind in labels[p]["labels"]]
        tally = {}
        for _, c in pool:
            tally[c] = tally.get(c, 0) + 1
        print("%s pool: %d players, tiers %s" % (kind, len(pool), sorted(tally.items(), reverse=True)))
        print("   top: %s" % [(p, c) for p, c in pool[:6]])
    tally = {}
    for p, c in credits["bowler"]:
        tally[c] = tally.get(c, 0) + 1
    print("bowler pool: %d players, tiers %s" % (len(credits["bowler"]), sorted(tally.items(), reverse=True)))
    print("== rank heads ==")
    for kind in ("opener", "middle", "finisher", "bowler"):
        head = [(p, round(fi, 2)) for p, _, _, fi in rankings[kind][:8]]
        print("  %-8s %s" % (kind, head))


if __name__ == "__main__":
    main()
