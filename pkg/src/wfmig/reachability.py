"""Reachability graph of a 1-bounded workflow net, plus behavioral checks.

Node identity is the canonical marking key: the comma-joined sorted list of
marked place names.  Construction is breadth-first with successors expanded
in sorted transition-label order, so equal nets always produce identical
graphs.
"""

from collections import deque
from dataclasses import dataclass, field

from . import net as wfnet
from .errors import StateLimitError, UnsafeFiringError, UnsafeNetError
from .net import ValidationReport, Violation

DEFAULT_MAX_STATES = 100000


def marking_key(marking):
    """Canonical node key for a marking (sorted, comma-joined place names)."""
    return ",".join(sorted(marking))


def key_label(key):
    """Human-readable form of a node key, e.g. ``{p2,p6}``."""
    return "{%s}" % key


@dataclass(frozen=True)
class RGEdge:
    """One labeled marking transition; identity is the full triple."""

    src: str
    label: str
    dst: str


@dataclass(frozen=True)
class ReachGraph:
    nodes: tuple            # node keys in first-discovered order
    edges: tuple            # RGEdge in discovery order
    initial: str
    terminal: str           # key of the {sink} marking, or None
    marking: dict = field(compare=False)   # key -> frozenset of places
    succ: dict = field(compare=False)      # key -> tuple of outgoing RGEdge

    def pred(self):
        """Reverse adjacency, computed on demand."""
        back = {n: [] for n in self.nodes}
        for e in self.edges:
            back[e.dst].append(e)
        return back


def build_reachability(net, max_states=DEFAULT_MAX_STATES):
    """Breadth-first exploration of all reachable markings.

    Raises StateLimitError if more than ``max_states`` markings are found and
    UnsafeNetError if any firing violates 1-boundedness.
    """
    if max_states < 1:
        raise ValueError("max_states must be >= 1")
    init = net.initial_marking
    init_key = marking_key(init)
    marking = {init_key: init}
    order = [init_key]
    edges = []
    succ = {}
    queue = deque([init_key])
    while queue:
        key = queue.popleft()
        m = marking[key]
        out = []
        for label in sorted(wfnet.enabled(net, m)):
            try:
                nxt = wfnet.fire(net, m, label)
            except UnsafeFiringError as exc:
                raise UnsafeNetError("net is not 1-bounded: %s" % exc) from exc
            nxt_key = marking_key(nxt)
            if nxt_key not in marking:
                if len(order) + 1 > max_states:
                    raise StateLimitError(
                        "reachability exceeds %d states" % max_states)
                marking[nxt_key] = nxt
                order.append(nxt_key)
                queue.append(nxt_key)
            edge = RGEdge(key, label, nxt_key)
            edges.append(edge)
            out.append(edge)
        succ[key] = tuple(out)

    sinks = net.sink_places()
    terminal = None
    if len(sinks) == 1:
        term_key = marking_key(frozenset(sinks))
        if term_key in marking:
            terminal = term_key
    return ReachGraph(nodes=tuple(order), edges=tuple(edges),
                      initial=init_key, terminal=terminal,
                      marking=marking, succ=succ)


def validate_behavioral(net, graph):
    """Soundness checks on the finished graph.

    DEAD_TRANSITION: transition labels no edge.  NO_PROPER_COMPLETION: the
    terminal marking is unreachable from a node (deadlocks included; if there
    is no terminal node at all, every node is flagged).
    """
    violations = []
    fired = {e.label for e in graph.edges}
    for t in net.transitions:
        if t.label not in fired:
            violations.append(Violation(
                "DEAD_TRANSITION", "never enabled in any reachable marking",
                t.label))

    can_finish = set()
    if graph.terminal is not None:
        back = graph.pred()
        can_finish.add(graph.terminal)
        queue = deque([graph.terminal])
        while queue:
            key = queue.popleft()
            for e in back[key]:
                if e.src not in can_finish:
                    can_finish.add(e.src)
                    queue.append(e.src)
    for key in graph.nodes:
        if key not in can_finish:
            violations.append(Violation(
                "NO_PROPER_COMPLETION",
                "terminal marking is unreachable from this marking",
                key_label(key)))
    return ValidationReport(tuple(violations))


def to_dot(graph):
    """Render the graph as DOT text, byte-deterministic (canonical order)."""
    lines = ["digraph reachability {"]
    for key in sorted(graph.nodes):
        lines.append('  "%s";' % key_label(key))
    for e in sorted(graph.edges, key=lambda e: (e.src, e.label, e.dst)):
        lines.append('  "%s" -> "%s" [label="%s"];'
                     % (key_label(e.src), key_label(e.dst), e.label))
    lines.append("}")
    return "\n".join(lines) + "\n"
