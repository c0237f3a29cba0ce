#!/usr/bin/env python3
"""Regenerates fixtures/knots.jsonl.

PD codes come from the KnotInfo database (pip package `database_knotinfo`).
Non-alternating knots have no definite Goeritz form on their tabulated
diagrams, so they ship as reduced negative-definite matrices built by hand:
star-shaped plumbings for Montesinos knots, and bordered twist-region
matrices (Goeritz form of the alternating part plus one row for a chain of
same-sign crossings) for the rest.
"""
import csv
import json
import os
import sys

import database_knotinfo

csv.field_size_limit(10**9)

# name: (det, {q: D}) for knots with a nonzero D invariant
ALTERNATING = {
    "9_30": (53, {53: 4}), "9_33": (61, {61: 4}), "10_58": (65, {13: 4}),
    "10_60": (85, {17: 4}), "10_102": (73, {73: -12}), "10_119": (101, {101: -16}),
    "11a_4": (97, {97: -24}), "11a_8": (117, {13: -4}), "11a_11": (113, {113: 12}),
    "11a_24": (157, {157: 12}), "11a_26": (157, {157: 12}), "11a_30": (149, {149: 12}),
    "11a_52": (137, {137: 16}), "11a_56": (109, {109: -8}), "11a_67": (125, {25: -4}),
    "11a_76": (145, {29: -4}), "11a_80": (137, {137: -12}), "11a_88": (101, {101: -8}),
    "11a_126": (145, {5: 4, 29: 4}), "11a_160": (145, {29: -4}), "11a_167": (113, {113: 12}),
    "11a_170": (185, {37: -4}), "11a_189": (149, {149: -12}), "11a_233": (173, {173: 16}),
    "11a_249": (117, {13: -4}), "11a_257": (97, {97: -8}), "11a_265": (109, {109: 24}),
    "11a_270": (137, {137: 12}), "11a_272": (149, {149: 12}), "11a_287": (181, {181: -12}),
    "11a_288": (205, {5: 4, 41: 4}), "11a_289": (145, {29: 4}), "11a_300": (153, {17: -4}),
    "11a_303": (149, {149: 36}), "11a_315": (157, {157: 12}), "11a_350": (185, {5: 4, 37: 4}),
}

NONALTERNATING = {
    "9_44": (17, {17: 4}, "plumbing K(2/5;2/3;-1/2)",
             [[-2,1,0,1,1],[1,-2,1,0,0],[0,1,-3,0,0],[1,0,0,-3,0],[1,0,0,0,-2]]),
    "10_135": (37, {37: 4}, "plumbing",
               [[-2,1,0,1,1],[1,-4,1,0,0],[0,1,-2,0,0],[1,0,0,-3,0],[1,0,0,0,-2]]),
    "11n_12": (13, {13: -8}, "plumbing K(1/2;-3/5;2/7)",
               [[-2,1,1,0,1,0,0],[1,-2,0,0,0,0,0],[1,0,-2,1,0,0,0],[0,0,1,-3,0,0,0],
                [1,0,0,0,-2,1,0],[0,0,0,0,1,-2,1],[0,0,0,0,0,1,-3]]),
    "11n_48": (29, {29: -8}, "plumbing",
               [[-2,1,0,1,0,1],[1,-2,1,0,0,0],[0,1,-2,0,0,0],[1,0,0,-2,1,0],
                [0,0,0,1,-3,0],[1,0,0,0,0,-4]]),
    "11n_53": (37, {37: -8}, "plumbing",
               [[-2,1,1,0,1,0],[1,-2,0,0,0,0],[1,0,-2,1,0,0],[0,0,1,-2,0,0],
                [1,0,0,0,-4,1],[0,0,0,0,1,-3]]),
    "11n_55": (61, {61: 12}, "plumbing",
               [[-2,1,1,1,0,0],[1,-2,0,0,0,0],[1,0,-3,0,0,0],[1,0,0,-3,1,0],
                [0,0,0,1,-3,1],[0,0,0,0,1,-2]]),
    "11n_110": (41, {41: -12}, "twist region",
                [[-3,1,0,0,1,0],[1,-2,0,0,1,1],[0,0,-3,1,0,-1],[0,0,1,-2,1,0],
                 [1,1,0,1,-3,0],[0,1,-1,0,0,-3]]),
    "11n_114": (53, {53: -4}, "twist region",
                [[-3,1,0,1,0],[1,-5,3,1,0],[0,3,-5,0,1],[1,1,0,-2,-1],[0,0,1,-1,-2]]),
    "11n_130": (53, {53: 12}, "twist region",
                [[-2,1,0,0,0,0],[1,-3,1,0,1,0],[0,1,-4,2,1,1],[0,0,2,-4,1,0],
                 [0,1,1,1,-3,0],[0,0,1,0,0,-2]]),
    "11n_165": (85, {17: -4}, "twist region",
                [[-3,1,1,0,0],[1,-4,2,0,1],[1,2,-5,2,0],[0,0,2,-3,-1],[0,1,0,-1,-2]]),
}

# every D invariant vanishes
VANISHING_ALTERNATING = ["10_91", "11a_5", "11a_38", "11a_44", "11a_47", "11a_72", "11a_98",
                         "11a_104", "11a_109", "11a_112", "11a_135", "11a_168", "11a_187"]
VANISHING_MATRICES = {
    "10_158": (45, "twist region", [[-2,1,1,-1],[1,-4,1,0],[1,1,-4,0],[-1,0,0,-3]]),
    "11n_45": (25, "twist region",
               [[-6,0,1,1,1,2,0],[0,-4,1,1,0,0,-1],[1,1,-2,0,0,0,0],[1,1,0,-3,1,0,0],
                [1,0,0,1,-3,1,0],[2,0,0,0,1,-3,1],[0,-1,0,0,0,1,-1]]),
    "11n_85": (None, "plumbing",
               [[-2,1,1,0,1,0],[1,-3,0,0,0,0],[1,0,-2,1,0,0],[0,0,1,-2,0,0],
                [1,0,0,0,-3,1],[0,0,0,0,1,-3]]),
    "11n_100": (None, "plumbing",
                [[-2,1,1,0,1,0],[1,-3,0,0,0,0],[1,0,-2,1,0,0],[0,0,1,-2,0,0],
                 [1,0,0,0,-4,1],[0,0,0,0,1,-2]]),
    "11n_145": (9, "twist region",
                [[-4,3,0,0,1,-1],[3,-5,1,1,0,0],[0,1,-5,1,1,0],[0,1,1,-3,0,0],
                 [1,0,1,0,-2,0],[-1,0,0,0,0,-1]]),
    "11n_157": (65, "twist region",
                [[-2,1,0,0,0,1],[1,-3,1,1,0,0],[0,1,-3,1,1,0],[0,1,1,-3,0,0],
                 [0,0,1,0,-2,-1],[1,0,0,0,-1,-3]]),
}


def knotinfo():
    path = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data",
                        "knotinfo_data_complete.csv")
    with open(path) as f:
        rows = csv.reader(f, delimiter="|")
        header = next(rows)
        col = {c: i for i, c in enumerate(header)}
        return {r[col["name"]]: {"pd": r[col["pd_notation"]], "det": int(r[col["determinant"]])}
                for r in rows if len(r) == len(header) and r[col["determinant"]].isdigit()}


def main(out):
    db = knotinfo()
    records = [
        {"name": "0_1", "pd": "[]", "expected": {"det": 1, "D": {}}, "meta": {"group": "control"}},
        {"name": "3_1", "pd": db["3_1"]["pd"], "expected": {"det": 3, "D": {"1": "-1/2", "3": "-1/6"}},
         "meta": {"group": "control", "source": "knotinfo"}},
        {"name": "4_1", "pd": db["4_1"]["pd"], "expected": {"det": 5, "D": {}},
         "meta": {"group": "control", "source": "knotinfo"}},
    ]
    for name, (det, d) in ALTERNATING.items():
        assert db[name]["det"] == det, name
        records.append({"name": name, "pd": db[name]["pd"],
                        "expected": {"det": det, "D": {str(q): v for q, v in d.items()}},
                        "meta": {"group": "alternating", "source": "knotinfo"}})
    for name, (det, d, how, m) in NONALTERNATING.items():
        assert db[name]["det"] == det, name
        records.append({"name": name, "goeritz": m,
                        "expected": {"det": det, "D": {str(q): v for q, v in d.items()}},
                        "meta": {"group": "nonalternating", "source": "external-matrix",
                                 "construction": how}})
    for name in VANISHING_ALTERNATING:
        records.append({"name": name, "pd": db[name]["pd"],
                        "expected": {"det": db[name]["det"], "D": {}},
                        "meta": {"group": "vanishing", "source": "knotinfo"}})
    for name, (det, how, m) in VANISHING_MATRICES.items():
        records.append({"name": name, "goeritz": m,
                        "expected": {"det": db[name]["det"], "D": {}},
                        "meta": {"group": "vanishing", "source": "external-matrix",
                                 "construction": how}})
    with open(out, "w") as f:
        for r in records:
            f.write(json.dumps(r, separators=(",", ":")) + "\n")
    with open(os.path.join(os.path.dirname(out), "9_30.pd"), "w") as f:
        f.write(db["9_30"]["pd"] + "\n")
    with open(os.path.join(os.path.dirname(out), "unknot.jsonl"), "w") as f:
        f.write(json.dumps(records[0], separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures/knots.jsonl")
