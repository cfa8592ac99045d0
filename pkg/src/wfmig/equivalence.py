"""History-equivalence mapping between an old and a new workflow net.

Two markings are history equivalent when some trace to each yields the same
transition set.  Empty helper transitions carry no business meaning, so each
net's TTS families are purged of its own empty labels before comparison; a
TTS that becomes empty after purging matches another empty purged TTS (this
makes markings reached only through helper transitions equivalent to the
initial marking).
"""

from dataclasses import dataclass

from .reachability import DEFAULT_MAX_STATES, build_reachability
from .tts import tts_all


@dataclass(frozen=True)
class MappingTable:
    """Rows (old node key, sorted tuple of equivalent new node keys), sorted
    by old key.  An empty equivalents tuple puts the row in the change
    region."""

    rows: tuple

    def equivalents(self, old_key):
        for key, eq in self.rows:
            if key == old_key:
                return eq
        raise KeyError(old_key)


def purge(family, empty_labels):
    """Remove empty-transition labels from every member set; deduplicate."""
    empty = frozenset(empty_labels)
    return frozenset(tts - empty for tts in family)


def find_equivalence_mapping(old_net, new_net, max_states=DEFAULT_MAX_STATES):
    """Build both reachability graphs, compare purged TTS families, and list
    for every old marking all new markings sharing at least one purged TTS."""
    old_graph = build_reachability(old_net, max_states)
    new_graph = build_reachability(new_net, max_states)

    old_fams = {n: purge(f, old_net.empty_labels)
                for n, f in tts_all(old_graph).items()}
    new_fams = {n: purge(f, new_net.empty_labels)
                for n, f in tts_all(new_graph).items()}

    rows = []
    for old_key in sorted(old_graph.nodes):
        matches = tuple(sorted(
            new_key for new_key in new_graph.nodes
            if new_fams[new_key] & old_fams[old_key]))
        rows.append((old_key, matches))
    return MappingTable(tuple(rows))


def change_region(table):
    """Old markings with no history-equivalent new marking."""
    return {key for key, eq in table.rows if not eq}
