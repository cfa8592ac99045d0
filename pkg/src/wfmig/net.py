"""Workflow-net core: net structure, markings, the token game, structural checks.

A marking is a plain ``frozenset`` of place names; nets are 1-bounded so a
place either holds a token or it does not.  All types are immutable after
construction and every operation here is a pure function.
"""

from collections import deque
from dataclasses import dataclass

from .errors import NetFormatError, NotEnabledError, UnsafeFiringError


@dataclass(frozen=True)
class Transition:
    """A labeled transition.  ``is_empty`` marks helper transitions that are
    ignored when trace transition sets are compared across nets; they fire
    exactly like ordinary transitions."""

    label: str
    is_empty: bool = False


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    element: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self):
        return not self.violations

    def codes(self):
        return {v.code for v in self.violations}


class WFNet:
    """A workflow-net candidate: places, transitions, bipartite arcs.

    The constructor enforces well-formedness (known arc endpoints, bipartite
    arcs, unique names); workflow-net structure (unique source/sink, every
    node on a source-to-sink path) is checked by :func:`validate_structural`
    and reported, not raised.
    """

    def __init__(self, places, transitions, arcs, initial_marking=None, name=""):
        self.name = name
        self.places = frozenset(places)
        trans = []
        for t in transitions:
            trans.append(t if isinstance(t, Transition) else Transition(str(t)))
        self.transitions = tuple(sorted(trans, key=lambda t: t.label))

        seen = set()
        for p in places:
            if not p:
                raise NetFormatError("empty place name", code="PARSE_ERROR")
            if p in seen:
                raise NetFormatError("duplicate place name: %r" % p,
                                     code="DUPLICATE_NAME")
            seen.add(p)
        for t in self.transitions:
            if not t.label:
                raise NetFormatError("empty transition label", code="PARSE_ERROR")
            if t.label in seen:
                raise NetFormatError("duplicate name: %r" % t.label,
                                     code="DUPLICATE_NAME")
            seen.add(t.label)

        self.labels = frozenset(t.label for t in self.transitions)
        self.empty_labels = frozenset(t.label for t in self.transitions if t.is_empty)

        self.arcs = frozenset(tuple(a) for a in arcs)
        inputs = {t.label: set() for t in self.transitions}
        outputs = {t.label: set() for t in self.transitions}
        place_in = {p: set() for p in self.places}
        place_out = {p: set() for p in self.places}
        for src, dst in sorted(self.arcs):
            for end in (src, dst):
                if end not in self.places and end not in self.labels:
                    raise NetFormatError("arc endpoint %r is not a declared "
                                         "place or transition" % end,
                                         code="UNKNOWN_ENDPOINT")
            if src in self.places and dst in self.labels:
                inputs[dst].add(src)
                place_out[src].add(dst)
            elif src in self.labels and dst in self.places:
                outputs[src].add(dst)
                place_in[dst].add(src)
            else:
                raise NetFormatError("arc %r -> %r does not connect a place "
                                     "with a transition" % (src, dst),
                                     code="NON_BIPARTITE_ARC")
        self._inputs = {t: frozenset(s) for t, s in inputs.items()}
        self._outputs = {t: frozenset(s) for t, s in outputs.items()}
        self._place_in = {p: frozenset(s) for p, s in place_in.items()}
        self._place_out = {p: frozenset(s) for p, s in place_out.items()}

        self.explicit_initial = initial_marking is not None
        if initial_marking is not None:
            self.initial_marking = frozenset(initial_marking)
        else:
            src = self.source_places()
            self.initial_marking = frozenset(src) if len(src) == 1 else frozenset()

    def inputs(self, label):
        """Input places of a transition."""
        return self._inputs[label]

    def outputs(self, label):
        """Output places of a transition."""
        return self._outputs[label]

    def is_empty(self, label):
        return label in self.empty_labels

    def source_places(self):
        return {p for p in self.places if not self._place_in[p]}

    def sink_places(self):
        return {p for p in self.places if not self._place_out[p]}

    def __eq__(self, other):
        if not isinstance(other, WFNet):
            return NotImplemented
        return (self.places == other.places
                and self.transitions == other.transitions
                and self.arcs == other.arcs
                and self.initial_marking == other.initial_marking)

    def __hash__(self):
        return hash((self.places, self.transitions, self.arcs,
                     self.initial_marking))

    def __repr__(self):
        return "WFNet(%r, |P|=%d, |T|=%d, |F|=%d)" % (
            self.name, len(self.places), len(self.transitions), len(self.arcs))


def enabled(net, marking):
    """Transitions whose every input place is marked."""
    return {t.label for t in net.transitions if net.inputs(t.label) <= marking}


def fire(net, marking, label):
    """Fire a transition: consume input tokens, produce output tokens.

    Raises NotEnabledError if some input place is unmarked, and
    UnsafeFiringError if an output place would receive a second token
    (1-boundedness violation).  Self-loop places are consumed and re-produced.
    """
    ins = net.inputs(label)
    if not ins <= marking:
        raise NotEnabledError("transition %r is not enabled in {%s}"
                              % (label, ",".join(sorted(marking))))
    outs = net.outputs(label)
    clash = outs & (marking - ins)
    if clash:
        raise UnsafeFiringError(
            "firing %r would put a second token in %s"
            % (label, ",".join(sorted(clash))))
    return (marking - ins) | outs


def _forward_reach(net, start_places):
    """Places/transitions reachable from the given places in the arc digraph."""
    seen = set(start_places)
    queue = deque(start_places)
    while queue:
        node = queue.popleft()
        succ = net._place_out[node] if node in net.places else net.outputs(node)
        for nxt in succ:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def _backward_reach(net, start_places):
    seen = set(start_places)
    queue = deque(start_places)
    while queue:
        node = queue.popleft()
        pred = net._place_in[node] if node in net.places else net.inputs(node)
        for nxt in pred:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def validate_structural(net):
    """Check workflow-net structure; every problem becomes a report entry.

    Codes: MULTIPLE_SOURCES, NO_SOURCE, MULTIPLE_SINKS, NO_SINK, NOT_ON_PATH,
    BAD_INITIAL_MARKING.
    """
    violations = []
    sources = sorted(net.source_places())
    sinks = sorted(net.sink_places())
    if not sources:
        violations.append(Violation("NO_SOURCE", "no place without incoming arcs", ""))
    elif len(sources) > 1:
        for p in sources:
            violations.append(Violation(
                "MULTIPLE_SOURCES", "more than one source place", p))
    if not sinks:
        violations.append(Violation("NO_SINK", "no place without outgoing arcs", ""))
    elif len(sinks) > 1:
        for p in sinks:
            violations.append(Violation(
                "MULTIPLE_SINKS", "more than one sink place", p))

    if len(sources) == 1 and len(sinks) == 1:
        source, sink = sources[0], sinks[0]
        on_path = _forward_reach(net, {source}) & _backward_reach(net, {sink})
        for elem in sorted(net.places | net.labels):
            if elem in (source, sink):
                continue
            if elem not in on_path:
                violations.append(Violation(
                    "NOT_ON_PATH",
                    "not on any directed path from %r to %r" % (source, sink),
                    elem))
        if net.explicit_initial and net.initial_marking != frozenset({source}):
            violations.append(Violation(
                "BAD_INITIAL_MARKING",
                "explicit initial marking differs from {%s}" % source,
                ",".join(sorted(net.initial_marking))))
    return ValidationReport(tuple(violations))
