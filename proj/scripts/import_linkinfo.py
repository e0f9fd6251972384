#!/usr/bin/env python3
"""Regenerate data/catalog.json from the LinkInfo/KnotInfo CSV dumps.

Needs the `database_knotinfo` package (pip install database_knotinfo).
Orientation and mirror pins below were certified against the batch
golden tables; change them only together with those tables.
"""
import csv
import json
import os
import sys

import database_knotinfo

CSV_DIR = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data")

LINKS = ["L2a1", "L4a1", "L5a1", "L6a1", "L6a2", "L6a3", "L6a4", "L6a5", "L6n1",
         "L7a1", "L7a2", "L7a3", "L7a4", "L7a5", "L7a6", "L7a7", "L7n1", "L7n2"]

# component index (ordered by smallest PD label) -> reversed
REVERSE = {"L6n1": [2], "L7a6": [1], "L7n1": [1]}
MIRROR = {"L5a1"}

KNOTS = ["3_1", "4_1"]

# signed oriented Gauss codes, Green's virtual knot table numbering
VIRTUAL = [
    ("2.1", "O1-O2-U1-U2-"),
    ("4.93", "O1-O2-O3-O4+U1-U3-U2-U4+"),
    ("4.103", "O1-O2-U3-O4+U2-U1-O3-U4+"),
]


def read(name):
    with open(os.path.join(CSV_DIR, name), newline="") as f:
        return list(csv.DictReader(f, delimiter="|"))


def pd_text(vec):
    vec = vec.strip().replace("{", "[").replace("}", "]")
    tuples = json.loads(vec)
    return "\n".join("X[%s]" % ",".join(str(v) for v in t) for t in tuples)


def components(vec):
    tuples = json.loads(vec.strip().replace("{", "[").replace("}", "]"))
    parent = {}

    def find(a):
        while parent.setdefault(a, a) != a:
            a = parent[a]
        return a

    for a, b, c, d in tuples:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    groups = {}
    for v in list(parent):
        groups.setdefault(find(v), []).append(v)
    return sorted(min(g) for g in groups.values())


def main(out):
    links = {r["name"]: r for r in read("linkinfo_data_complete.csv")}
    knots = {r["name"]: r for r in read("knotinfo_data_complete.csv")}
    records = []
    for name in LINKS:
        row = next(r for k, r in links.items() if k.startswith(name + "{0"))
        vec = row["pd_notation_vector"]
        mins = components(vec)
        rec = {"name": name, "format": "pd", "code": pd_text(vec),
               "source": "LinkInfo " + row["name"]}
        if name in REVERSE:
            rec["reverse_labels"] = [mins[i] for i in REVERSE[name]]
        if name in MIRROR:
            rec["mirror"] = True
        records.append(rec)
    for name in KNOTS:
        row = knots[name]
        records.append({"name": name, "format": "pd",
                        "code": pd_text(row["pd_notation"]),
                        "source": "KnotInfo " + name})
    for name, code in VIRTUAL:
        records.append({"name": name, "format": "gauss", "code": code,
                        "source": "virtual knot table " + name,
                        "virtual": True})
    with open(out, "w") as f:
        json.dump(records, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/catalog.json")
