import networkx as nx

from curvaplane.core.errors import InvalidSpec


def regular_tree(degree: int, depth: int) -> nx.Graph:
    """Truncated ``degree``-regular tree rooted at node 0.

    Every internal node has ``degree`` neighbors; the leaves at ``depth``
    carry ``window_boundary=True`` so balls around the root know where the
    window ends.
    """
    if degree < 2 or depth < 1:
        raise InvalidSpec(f"regular tree needs degree >= 2 and depth >= 1, got {degree}, {depth}")
    g = nx.Graph()
    g.add_node(0, window_boundary=False, depth=0)
    frontier = [0]
    next_id = 1
    for level in range(1, depth + 1):
        grown = []
        for parent in frontier:
            children = degree if parent == 0 else degree - 1
            for _ in range(children):
                g.add_node(next_id, window_boundary=level == depth, depth=level)
                g.add_edge(parent, next_id)
                grown.append(next_id)
                next_id += 1
        frontier = grown
    return g
