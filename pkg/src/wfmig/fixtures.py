"""Reference nets used by the test suite and shipped as JSON fixtures.

``fig4`` and ``fig6`` are state-machine nets (one token, one place per
graph node) whose reachability graphs realize the two reference cycle
structures exactly.  Both end in an AND-join that is structurally on the
path to the sink but never enabled, which keeps the graph's node and edge
counts at their reference values while the net stays structurally valid.

``fig8_old`` / ``fig8_new`` are the migration pair: the old process forks
two parallel branches and joins into a sequential tail; the new process
uses empty fork/join helpers and shares the labels T1, T2 and T5 with the
old one, so only four old markings keep a history-equivalent image.
"""

from .net import Transition, WFNet


def sequence_net():
    """p1 -T0-> p2 -T1-> p3, the minimal valid workflow net."""
    return WFNet(
        places=["p1", "p2", "p3"],
        transitions=["T0", "T1"],
        arcs=[("p1", "T0"), ("T0", "p2"), ("p2", "T1"), ("T1", "p3")],
        name="sequence")


def fig2b_net():
    """Structurally broken net: place P1 (and its self-loop transition C)
    lie on no directed path from source to sink."""
    return WFNet(
        places=["init", "p2", "end", "P1"],
        transitions=["A", "B", "C"],
        arcs=[("init", "A"), ("A", "p2"), ("p2", "B"), ("B", "end"),
              ("P1", "C"), ("C", "P1")],
        name="fig2b")


def fig4_net():
    """Two overlapping loops; the reachability graph has 6 nodes, 7 edges.

    Marking {P2} has exactly four TTSs: {T0}, {T0,T1,T2,T3,T4},
    {T0,T1,T5,T6,T4} and {T0,T1,T2,T5,T3,T6,T4}.
    """
    return WFNet(
        places=["P1", "P2", "P3", "P4", "P5", "P6", "P7"],
        transitions=["T0", "T1", "T2", "T3", "T4", "T5", "T6", "T7"],
        arcs=[
            ("P1", "T0"), ("T0", "P2"),
            ("P2", "T1"), ("T1", "P3"),
            ("P3", "T2"), ("T2", "P4"),
            ("P4", "T3"), ("T3", "P5"),
            ("P5", "T4"), ("T4", "P2"),
            ("P3", "T5"), ("T5", "P6"),
            ("P6", "T6"), ("T6", "P5"),
            # closing join, never enabled (P5 and P6 are never both marked)
            ("P5", "T7"), ("P6", "T7"), ("T7", "P7"),
        ],
        name="fig4")


def fig6_net():
    """Four interlocking loops; node {P1} has an 11-member TTS family.

    Elementary cycles of the reachability graph, by label set:
      C1 = {T1,T3,T4,T5,T6,T7}        through {P1}
      C2 = {T12,T13}                  on C4's private segment
      C3 = {T4,T8,T9}                 on the segment shared by C1 and C4
      C4 = {T1,T3,T4,T5,T10,T11,T14,T7} through {P1}
    """
    return WFNet(
        places=["P0", "P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8",
                "P9", "P10", "P11"],
        transitions=["T0", "T1", "T3", "T4", "T5", "T6", "T7", "T8", "T9",
                     "T10", "T11", "T12", "T13", "T14", "T15"],
        arcs=[
            ("P0", "T0"), ("T0", "P1"),
            ("P1", "T1"), ("T1", "P2"),
            ("P2", "T3"), ("T3", "P3"),
            ("P3", "T4"), ("T4", "P4"),
            ("P4", "T5"), ("T5", "P5"),
            ("P5", "T6"), ("T6", "P6"),
            ("P6", "T7"), ("T7", "P1"),
            ("P5", "T10"), ("T10", "P7"),
            ("P7", "T11"), ("T11", "P8"),
            ("P8", "T14"), ("T14", "P6"),
            ("P4", "T8"), ("T8", "P9"),
            ("P9", "T9"), ("T9", "P3"),
            ("P7", "T12"), ("T12", "P10"),
            ("P10", "T13"), ("T13", "P7"),
            # closing join, never enabled
            ("P5", "T15"), ("P6", "T15"), ("T15", "P11"),
        ],
        name="fig6")


def fig8_old_net():
    """Old migration process: T1 forks branches p2..p5 and p6..p7, T6 joins
    into the sequential tail p8..p11.  13 reachable markings."""
    return WFNet(
        places=["p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8", "p9",
                "p10", "p11"],
        transitions=["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9"],
        arcs=[
            ("p1", "T1"), ("T1", "p2"), ("T1", "p6"),
            ("p2", "T2"), ("T2", "p3"),
            ("p3", "T3"), ("T3", "p4"),
            ("p4", "T4"), ("T4", "p5"),
            ("p6", "T5"), ("T5", "p7"),
            ("p5", "T6"), ("p7", "T6"), ("T6", "p8"),
            ("p8", "T7"), ("T7", "p9"),
            ("p9", "T8"), ("T8", "p10"),
            ("p10", "T9"), ("T9", "p11"),
        ],
        name="fig8_old")


def fig8_new_net():
    """New migration process.  The empty helpers e1/e2/e3 implement the
    fork and joins; T1, T2 and T5 are the tasks shared with the old net,
    T10 is new."""
    return WFNet(
        places=["p1", "p2", "p3", "p4", "p6", "p7", "p12", "p13", "p14",
                "p15"],
        transitions=[
            Transition("e1", is_empty=True),
            Transition("T1"),
            Transition("T2"),
            Transition("e2", is_empty=True),
            Transition("T5"),
            Transition("T10"),
            Transition("e3", is_empty=True),
        ],
        arcs=[
            ("p1", "e1"), ("e1", "p12"), ("e1", "p2"),
            ("p12", "T1"), ("T1", "p13"),
            ("p2", "T2"), ("T2", "p3"),
            ("p13", "e2"), ("p3", "e2"), ("e2", "p4"), ("e2", "p6"),
            ("p6", "T5"), ("T5", "p7"),
            ("p4", "T10"), ("T10", "p14"),
            ("p14", "e3"), ("p7", "e3"), ("e3", "p15"),
        ],
        name="fig8_new")


ALL = {
    "sequence": sequence_net,
    "fig2b": fig2b_net,
    "fig4": fig4_net,
    "fig6": fig6_net,
    "fig8_old": fig8_old_net,
    "fig8_new": fig8_new_net,
}
