"""Regenerate the graph6 enumeration fixtures under data/ using networkx.

    python3 scripts/gen_fixtures.py

graphs_upto7.g6  every graph on 1..7 vertices up to isomorphism (networkx atlas)
trees_2_12.g6    every tree on 2..12 vertices up to isomorphism

Lines are grouped by vertex count and sorted by graph6 string within a group.
"""
import os
import networkx as nx

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    by_n = {}
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        by_n.setdefault(g.number_of_nodes(), []).append(g6(g))
    with open(os.path.join(ROOT, "graphs_upto7.g6"), "w") as f:
        for n in sorted(by_n):
            for line in sorted(by_n[n]):
                f.write(line + "\n")

    with open(os.path.join(ROOT, "trees_2_12.g6"), "w") as f:
        for n in range(2, 13):
            for line in sorted(g6(t) for t in nx.nonisomorphic_trees(n)):
                f.write(line + "\n")


if __name__ == "__main__":
    main()
