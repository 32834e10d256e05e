"""Generate the bundled synthetic T20 dataset under data/.

Players are fictional. Each archetype fixes a target batting average,
strike rate, boundary share, innings count and not-out count (or bowling
workload), and per-season rows are derived from those targets with a small
deterministic jitter. Regenerating with the same seed reproduces the files
byte for byte.
"""

from __future__ import annotations

import csv
import random
from pathlib import Path

SEED = 20180527
SEASONS = (2016, 2017, 2018)
SEASON_SCALE = {2016: 0.90, 2017: 0.95, 2018: 1.00}

OUT_DIR = Path(__file__).resolve().parent.parent / "data"

FIRST = ["A", "B", "C", "D", "G", "H", "J", "K", "L", "M", "N", "P", "R", "S", "T", "V", "Y"]
SURNAMES = [
    "Rathod", "Pillai", "Bairav", "Chandra", "Deshmukh", "Ekanath", "Phadke", "Gokhale",
    "Hegde", "Inamdar", "Jadhav", "Kale", "Lamba", "Mhatre", "Naik", "Oza", "Pawar",
    "Qureshi", "Raut", "Sawant", "Tambe", "Udeshi", "Verma", "Wagh", "Yadav", "Zore",
    "Awale", "Bhosale", "Chavan", "Dalvi", "Edke", "Fulmali", "Gavit", "Holkar",
    "Ingale", "Joshi", "Kadam", "Lokhande", "More", "Nalawade", "Ovhal", "Patole",
    "Rane", "Shelar", "Thorat", "Ugale", "Vichare", "Wadkar", "Yelve", "Zagade",
    "Ambre", "Borkar", "Chitale", "Dighe", "Erande", "Phule", "Ghatge", "Humne", "Irkar",
]

# (avg, strike_rate, hard_hitting, innings, not_outs) per batting archetype
BATTING = {
    "o1": (58, 142, 0.62, 14, 1), "o2": (55, 138, 0.60, 14, 1), "o3": (52, 136, 0.58, 14, 2),
    "o4": (44, 130, 0.55, 13, 1), "o5": (42, 128, 0.54, 13, 1), "o6": (40, 126, 0.52, 13, 1),
    "o7": (30, 118, 0.46, 12, 1), "o8": (28, 116, 0.45, 12, 1), "o9": (26, 114, 0.44, 12, 1),
    "m1": (54, 128, 0.38, 13, 3), "m2": (52, 126, 0.37, 13, 3), "m3": (50, 124, 0.36, 13, 2),
    "m4": (42, 120, 0.34, 13, 2), "m5": (40, 118, 0.33, 13, 2), "m6": (38, 117, 0.33, 12, 2),
    "m7": (28, 110, 0.30, 12, 1), "m8": (26, 108, 0.30, 12, 1), "m9": (24, 106, 0.29, 11, 1),
    "f1": (38, 168, 0.75, 13, 6), "f2": (36, 164, 0.73, 13, 5), "f3": (34, 160, 0.71, 13, 5),
    "f4": (30, 152, 0.66, 12, 4), "f5": (28, 150, 0.65, 12, 4), "f6": (27, 148, 0.64, 12, 4),
    "f7": (20, 138, 0.58, 11, 3), "f8": (19, 136, 0.57, 11, 3), "f9": (18, 134, 0.56, 11, 3),
    "x1": (36, 125, 0.45, 12, 2), "x2": (34, 130, 0.50, 12, 2), "x3": (32, 127, 0.48, 12, 2),
    "kf1": (40, 172, 0.78, 14, 7),
    "kf2": (15.5, 119, 0.49, 11, 3),
    "ko1": (34, 110, 0.28, 12, 2),
    "km1": (39, 117, 0.33, 13, 2),
    "kx1": (16, 104, 0.30, 10, 1),
    "z1": (32, 120, 0.40, 12, 2),
    "z2": (30, 118, 0.40, 12, 2),
    "p19": (12, 95, 0.30, 8, 2),
    "p20": (10, 92, 0.28, 7, 1),
    "r1": (60, 145, 0.60, 14, 1),
}

# (wickets, economy, balls, innings) per bowling archetype
BOWLING = {
    "p01": (26, 6.8, 420, 14), "p02": (24, 7.0, 408, 14), "p03": (23, 7.1, 400, 14),
    "p04": (22, 7.2, 396, 14), "p05": (21, 7.3, 390, 13), "p06": (20, 7.4, 384, 13),
    "p07": (19, 7.5, 372, 13), "p08": (18, 7.6, 366, 13), "p09": (17, 7.7, 360, 12),
    "p10": (16, 7.8, 352, 12), "p11": (15, 7.9, 344, 12), "p12": (14, 8.0, 336, 12),
    "p13": (13, 8.1, 328, 11), "p14": (12, 8.2, 320, 11), "p15": (11, 8.3, 312, 11),
    "p16": (10, 8.4, 300, 10), "p17": (9, 8.5, 288, 10), "p18": (8, 8.6, 276, 10),
    "p19": (7, 8.7, 264, 9), "p20": (6, 8.8, 252, 9),
    "x3": (9, 8.4, 240, 9),
    "r2": (27, 6.6, 430, 14),
}

KEEPERS = {"kf1", "kf2", "ko1", "km1", "kx1"}
RETIRED = {"r1", "r2"}
# z1/z2 stopped playing after 2017; x2 debuted in 2018
PLAYER_SEASONS = {"z1": (2016, 2017), "z2": (2016, 2017), "x2": (2018,)}

ROLE_ORDER = [
    "o1", "o2", "o3", "o4", "o5", "o6", "o7", "o8", "o9",
    "m1", "m2", "m3", "m4", "m5", "m6", "m7", "m8", "m9",
    "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9",
    "x1", "x2", "x3",
    "kf1", "kf2", "ko1", "km1", "kx1",
    "z1", "z2",
    "p01", "p02", "p03", "p04", "p05", "p06", "p07", "p08", "p09", "p10",
    "p11", "p12", "p13", "p14", "p15", "p16", "p17", "p18", "p19", "p20",
    "r1", "r2",
]


def make_names() -> dict:
    rng = random.Random(SEED)
    names = {}
    used = set()
    for tag in ROLE_ORDER:
        while True:
            name = "%s. %s" % (rng.choice(FIRST), rng.choice(SURNAMES))
            if name not in used:
                used.add(name)
                break
        names[tag] = name
    return names


def player_id(name: str) -> str:
    return name.replace(". ", "_").replace(" ", "_").lower()


def batting_row(tag, season, rng):
    avg, sr, hh, innings, not_outs = BATTING[tag]
    scale = SEASON_SCALE[season]
    jitter = 1.0 + rng.uniform(-0.04, 0.04)
    dismissals = max(1, innings - not_outs)
    runs = int(round(avg * dismissals * scale * jitter))
    balls = max(1, int(round(runs * 100.0 / (sr * (1.0 + rng.uniform(-0.02, 0.02))))))
    boundary_runs = int(round(hh * balls))
    boundary_runs = min(boundary_runs, runs)
    sixes = int(round(boundary_runs * 0.35 / 6.0))
    fours = (boundary_runs - 6 * sixes) // 4
    while fours + sixes > balls:
        fours -= 1
    fifties = min(innings, int(runs // 135))
    hundreds = 1 if avg >= 52 and season == 2018 and tag.startswith("o") else 0
    fifties = max(0, fifties - hundreds)
    if hundreds + fifties > innings:
        fifties = innings - hundreds
    row = {
        "id": tag, "season": season, "innings": innings, "not_outs": not_outs,
        "runs": runs, "balls": balls, "hundreds": hundreds, "fifties": fifties,
        "fours": fours, "sixes": sixes,
    }
    assert row["not_outs"] <= row["innings"]
    assert 4 * fours + 6 * sixes <= runs
    assert fours + sixes <= balls
    assert hundreds + fifties <= innings
    return row


def bowling_row(tag, season, rng):
    wickets, econ, balls, innings = BOWLING[tag]
    scale = SEASON_SCALE[season]
    jitter = 1.0 + rng.uniform(-0.04, 0.04)
    w = max(0, int(round(wickets * scale * jitter)))
    b = max(6, int(round(balls * scale * jitter)))
    rc = int(round(econ * b / 6.0 * (1.0 + rng.uniform(-0.03, 0.03))))
    four_hauls = min(w // 4, int(round(w / 12.0)))
    five_hauls = 1 if w >= 24 else 0
    if 4 * four_hauls + 5 * five_hauls > w:
        four_hauls = max(0, (w - 5 * five_hauls) // 4)
    row = {
        "id": tag, "season": season, "innings": innings, "balls": b,
        "runs_conceded": rc, "wickets": w,
        "four_hauls": four_hauls, "five_hauls": five_hauls,
    }
    assert 4 * row["four_hauls"] + 5 * row["five_hauls"] <= row["wickets"]
    return row


def main() -> None:
    rng = random.Random(SEED + 1)
    names = make_names()
    ids = {tag: player_id(names[tag]) for tag in ROLE_ORDER}

    players = []
    for tag in ROLE_ORDER:
        players.append({
            "id": ids[tag],
            "name": names[tag],
            "is_wicketkeeper": "true" if tag in KEEPERS else "false",
            "is_retired": "true" if tag in RETIRED else "false",
        })

    batting = []
    for tag in ROLE_ORDER:
        if tag not in BATTING:
            continue
        for season in PLAYER_SEASONS.get(tag, SEASONS):
            row = batting_row(tag, season, rng)
            row["id"] = ids[tag]
            batting.append(row)

    bowling = []
    for tag in ROLE_ORDER:
        if tag not in BOWLING:
            continue
        for season in PLAYER_SEASONS.get(tag, SEASONS):
            row = bowling_row(tag, season, rng)
            row["id"] = ids[tag]
            bowling.append(row)

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    write_csv(OUT_DIR / "players.csv", ["id", "name", "is_wicketkeeper", "is_retired"], players)
    write_csv(OUT_DIR / "batting.csv",
              ["id", "season", "innings", "not_outs", "runs", "balls",
               "hundreds", "fifties", "fours", "sixes"], batting)
    write_csv(OUT_DIR / "bowling.csv",
              ["id", "season", "innings", "balls", "runs_conceded", "wickets",
               "four_hauls", "five_hauls"], bowling)
    mapping = OUT_DIR / "archetypes.txt"
    mapping.write_text(
        "".join("%s %s\n" % (tag, ids[tag]) for tag in ROLE_ORDER), encoding="utf-8")
    print("wrote %d players, %d batting rows, %d bowling rows" %
          (len(players), len(batting), len(bowling)))


def write_csv(path, columns, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


if __name__ == "__main__":
    main()
