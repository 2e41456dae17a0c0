#!/usr/bin/env python3
"""Regenerate the graph6 test fixtures under data/.

Uses networkx as an independent reference implementation: its graph atlas
provides every graph on at most 7 vertices up to isomorphism, and its
graph6 encoder is unrelated to the C++ one, so round-trip tests against
these files cross-check both the encoder and the decoder.

Run from the repository root:  python3 scripts/gen_fixtures.py
"""

import pathlib

import networkx as nx

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def g6(graph: nx.Graph) -> str:
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def main() -> None:
    DATA.mkdir(exist_ok=True)

    # Atlas entry 0 is the order-0 graph; skip it (smallest supported n is 1).
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1]
    assert len(atlas) == 1252
    with open(DATA / "census_le7.g6", "w") as fh:
        for graph in atlas:
            fh.write(g6(graph) + "\n")

    trees = []
    for n in range(1, 10):
        if n <= 2:
            trees.append(nx.path_graph(n))
        else:
            trees.extend(nx.nonisomorphic_trees(n))
    assert len(trees) == 95
    with open(DATA / "trees_le9.g6", "w") as fh:
        for tree in trees:
            fh.write(g6(tree) + "\n")

    print(f"wrote {len(atlas)} census graphs, {len(trees)} trees")


if __name__ == "__main__":
    main()
