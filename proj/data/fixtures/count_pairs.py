#!/usr/bin/env python3
"""One-off audit counter for the bundled fixture.

Enumerates treaty member pairs and bilaterals directly from the CSV files and
prints the counts the `audit` subcommand must reproduce. Kept deliberately
separate from the C++ implementation so the two can be compared.
"""
import csv
import itertools
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def rows(name):
    with open(os.path.join(HERE, name), newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        return list(reader)


def main():
    countries = rows("countries.csv")
    deal_pairs = {"political": 0, "economic": 0}
    distinct = {"political": set(), "economic": set()}

    def add(layer, a, b):
        deal_pairs[layer] += 1
        distinct[layer].add(tuple(sorted((a, b))))

    for treaty in rows("treaties.csv"):
        members = [m for m in treaty["members"].split(";") if m]
        layers = (
            ["political", "economic"]
            if treaty["layer"] == "both"
            else [treaty["layer"]]
        )
        for layer in layers:
            for a, b in itertools.combinations(sorted(set(members)), 2):
                add(layer, a, b)

    for pair in rows("bilaterals.csv"):
        add(pair["layer"], pair["iso3_a"], pair["iso3_b"])

    political_only = len(distinct["political"] - distinct["economic"])

    print(f"countries                {len(countries)}")
    print(f"political deal pairs     {deal_pairs['political']}")
    print(f"economic deal pairs      {deal_pairs['economic']}")
    print(f"political distinct edges {len(distinct['political'])}")
    print(f"economic distinct edges  {len(distinct['economic'])}")
    print(f"political-only pairs     {political_only}")


if __name__ == "__main__":
    main()
