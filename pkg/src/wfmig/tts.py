"""Trace transition sets (TTSs).

For a reachability-graph node, the family of TTSs is the set of distinct
transition-label sets over all firing traces from the initial node to it.
Traces may be infinite in number (loops), but the family is finite: it is
generated from the elementary seed paths by repeatedly absorbing any
elementary cycle that touches a node already covered, until a fixpoint.
"""

from dataclasses import dataclass

from .reachability import RGEdge


@dataclass(frozen=True)
class Cycle:
    """An elementary circuit, stored in canonical rotation: the first edge
    leaves the lexicographically smallest node on the cycle."""

    edges: tuple

    @property
    def node_set(self):
        return frozenset(e.src for e in self.edges)

    def label_set(self):
        return frozenset(e.label for e in self.edges)

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class EdgeSet:
    """A seed path's edges unioned with zero or more absorbed cycles.

    ``nodes`` carries every node the set covers; for the empty seed path it
    still holds the path's single node, which is what cycles attach to.
    """

    edges: frozenset
    nodes: frozenset

    @classmethod
    def from_path(cls, path, start):
        nodes = {start}
        for e in path:
            nodes.add(e.src)
            nodes.add(e.dst)
        return cls(frozenset(path), frozenset(nodes))

    def absorb(self, cycle):
        return EdgeSet(self.edges | frozenset(cycle.edges),
                       self.nodes | cycle.node_set)

    def label_set(self):
        return frozenset(e.label for e in self.edges)


def find_simple_paths(graph, src, dst):
    """All elementary (node-repetition-free) directed paths from src to dst.

    Deterministic order: depth-first, successors taken in sorted
    (label, destination) order.  ``src == dst`` yields exactly the empty path.
    """
    paths = []
    if src == dst:
        paths.append(())
        return paths

    path = []
    on_path = {src}

    def walk(node):
        for edge in sorted(graph.succ[node], key=lambda e: (e.label, e.dst)):
            if edge.dst in on_path:
                continue
            path.append(edge)
            if edge.dst == dst:
                paths.append(tuple(path))
            else:
                on_path.add(edge.dst)
                walk(edge.dst)
                on_path.discard(edge.dst)
            path.pop()

    walk(src)
    return paths


def find_cycles(graph):
    """All elementary circuits of the graph, each in canonical rotation.

    Path-extension enumeration: for each node in sorted order, grow
    elementary paths through strictly larger nodes only, closing back to the
    start node.  Parallel edges with different labels yield distinct cycles;
    a self-loop edge is a length-1 cycle.
    """
    cycles = set()
    for start in sorted(graph.nodes):
        path = []
        on_path = {start}

        def walk(node):
            for edge in sorted(graph.succ[node], key=lambda e: (e.label, e.dst)):
                if edge.dst == start:
                    cycles.add(Cycle(tuple(path) + (edge,)))
                elif edge.dst > start and edge.dst not in on_path:
                    path.append(edge)
                    on_path.add(edge.dst)
                    walk(edge.dst)
                    on_path.discard(edge.dst)
                    path.pop()

        walk(start)
    return frozenset(cycles)


def attachable_cycles(edge_set, cycles):
    """Cycles sharing at least one node with the covered node set."""
    return {c for c in cycles if c.node_set & edge_set.nodes}


def expand_with_cycles(seeds, cycles):
    """Least fixpoint of cycle absorption over the seed edge sets.

    Worklist over EdgeSets; every attachable cycle produces a candidate
    union, and candidates already seen are never re-enqueued, so the run
    terminates inside the finite powerset of edges.
    """
    ordered_cycles = sorted(
        cycles, key=lambda c: [(e.src, e.label, e.dst) for e in c.edges])
    seen = set(seeds)
    worklist = list(seeds)
    while worklist:
        current = worklist.pop()
        for cycle in ordered_cycles:
            if not cycle.node_set & current.nodes:
                continue
            candidate = current.absorb(cycle)
            if candidate not in seen:
                seen.add(candidate)
                worklist.append(candidate)
    return seen


def tts_for_node(graph, node, cycles=None):
    """The complete TTS family of one node, as a frozenset of frozensets."""
    if cycles is None:
        cycles = find_cycles(graph)
    seeds = [EdgeSet.from_path(p, graph.initial)
             for p in find_simple_paths(graph, graph.initial, node)]
    expanded = expand_with_cycles(seeds, cycles)
    return frozenset(es.label_set() for es in expanded)


def tts_all(graph):
    """TTS families for every node; cycles are enumerated once and shared."""
    cycles = find_cycles(graph)
    return {node: tts_for_node(graph, node, cycles) for node in graph.nodes}
