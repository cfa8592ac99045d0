"""Net input format and mapping-table emitters.

A net document is a single JSON object:

    {
      "name": "example",
      "places": ["p1", "p2", "p3"],
      "transitions": ["T0", {"id": "e1", "label": "e1", "empty": true}],
      "arcs": [["p1", "T0"], ["T0", "p2"]],
      "initial_marking": ["p1"]          // optional; must equal {source}
    }

A transition given as a bare string is a regular transition whose label is
its id.  Arc endpoints name a declared place or transition id; weighted arcs
(any third element) are rejected.  Serialization is canonical (sorted,
two-space indent), so parse -> serialize -> parse is the identity.
"""

import csv
import io
import json
from dataclasses import dataclass

from .errors import NetFormatError
from .net import Transition, WFNet
from .reachability import key_label


@dataclass(frozen=True)
class TransitionDecl:
    id: str
    label: str
    empty: bool = False


@dataclass(frozen=True)
class NetDocument:
    name: str
    places: tuple
    transitions: tuple      # TransitionDecl
    arcs: tuple             # (from, to) pairs of ids
    initial_marking: tuple = None

    def to_net(self):
        """Build the WFNet, resolving transition ids to labels in arcs."""
        label_of = {t.id: t.label for t in self.transitions}
        arcs = [(label_of.get(a, a), label_of.get(b, b)) for a, b in self.arcs]
        initial = set(self.initial_marking) if self.initial_marking is not None else None
        if initial is not None:
            for p in initial:
                if p not in self.places:
                    raise NetFormatError(
                        "initial marking names unknown place %r" % p,
                        code="UNKNOWN_ENDPOINT")
        return WFNet(self.places,
                     [Transition(t.label, t.empty) for t in self.transitions],
                     arcs, initial_marking=initial, name=self.name)


def _expect(cond, message):
    if not cond:
        raise NetFormatError(message, code="PARSE_ERROR")


def parse_document(text):
    """Parse a net document; structural validation is not implied."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetFormatError("line %d column %d: %s"
                             % (exc.lineno, exc.colno, exc.msg),
                             code="PARSE_ERROR") from exc
    _expect(isinstance(raw, dict), "top-level value must be an object")
    unknown = set(raw) - {"name", "places", "transitions", "arcs",
                          "initial_marking"}
    _expect(not unknown, "unknown keys: %s" % ", ".join(sorted(unknown)))
    _expect(isinstance(raw.get("places"), list), "'places' must be a list")
    _expect(isinstance(raw.get("transitions"), list),
            "'transitions' must be a list")
    _expect(isinstance(raw.get("arcs"), list), "'arcs' must be a list")

    places = []
    for p in raw["places"]:
        _expect(isinstance(p, str) and p, "place names must be non-empty strings")
        places.append(p)

    decls = []
    seen_ids = set()
    for entry in raw["transitions"]:
        if isinstance(entry, str):
            entry = {"id": entry}
        _expect(isinstance(entry, dict), "transition entries must be strings "
                                         "or objects")
        _expect(not set(entry) - {"id", "label", "empty"},
                "transition entry keys are id, label, empty")
        tid = entry.get("id")
        _expect(isinstance(tid, str) and tid,
                "transition id must be a non-empty string")
        if tid in seen_ids:
            raise NetFormatError("duplicate transition id %r" % tid,
                                 code="DUPLICATE_NAME")
        seen_ids.add(tid)
        label = entry.get("label", tid)
        _expect(isinstance(label, str) and label,
                "transition label must be a non-empty string")
        empty = entry.get("empty", False)
        _expect(isinstance(empty, bool), "'empty' must be a boolean")
        decls.append(TransitionDecl(tid, label, empty))

    arcs = []
    for arc in raw["arcs"]:
        _expect(isinstance(arc, list) and len(arc) == 2
                and all(isinstance(x, str) for x in arc),
                "arcs must be [from, to] name pairs (weighted arcs are not "
                "supported)")
        arcs.append(tuple(arc))

    initial = raw.get("initial_marking")
    if initial is not None:
        _expect(isinstance(initial, list)
                and all(isinstance(p, str) for p in initial),
                "'initial_marking' must be a list of place names")
        initial = tuple(initial)

    name = raw.get("name", "")
    _expect(isinstance(name, str), "'name' must be a string")
    return NetDocument(name=name, places=tuple(places),
                       transitions=tuple(decls), arcs=tuple(arcs),
                       initial_marking=initial)


def parse_net(text):
    """Parse a net document and build the net (well-formedness enforced,
    workflow-structure validation left to the caller)."""
    return parse_document(text).to_net()


def serialize_document(doc):
    """Canonical JSON text for a document; byte-deterministic."""
    trans = []
    for t in sorted(doc.transitions, key=lambda t: t.id):
        if t.label == t.id and not t.empty:
            trans.append(t.id)
        else:
            entry = {"id": t.id, "label": t.label}
            if t.empty:
                entry["empty"] = True
            trans.append(entry)
    obj = {
        "name": doc.name,
        "places": sorted(doc.places),
        "transitions": trans,
        "arcs": [list(a) for a in sorted(doc.arcs)],
    }
    if doc.initial_marking is not None:
        obj["initial_marking"] = sorted(doc.initial_marking)
    return json.dumps(obj, indent=2) + "\n"


def document_for_net(net):
    return NetDocument(
        name=net.name,
        places=tuple(sorted(net.places)),
        transitions=tuple(TransitionDecl(t.label, t.label, t.is_empty)
                          for t in net.transitions),
        arcs=tuple(sorted(net.arcs)),
        initial_marking=tuple(sorted(net.initial_marking))
        if net.explicit_initial else None)


def serialize_net(net):
    return serialize_document(document_for_net(net))


# ---------------------------------------------------------------------------
# Mapping output

def mapping_document(old_net, new_net, table):
    """The mapping table as a plain dict (the JSON wire shape)."""
    rows = []
    for old_key, equivalents in table.rows:
        rows.append({
            "old_marking": old_key.split(",") if old_key else [],
            "equivalents": [k.split(",") if k else [] for k in equivalents],
            "change_region": not equivalents,
        })
    return {"old_net": old_net.name, "new_net": new_net.name, "rows": rows}


def emit_json(doc):
    return json.dumps(doc, indent=2) + "\n"


def _marking_str(places):
    return key_label(",".join(places))


def emit_csv(doc):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["old_marking", "equivalents", "change_region"])
    for row in doc["rows"]:
        writer.writerow([
            _marking_str(row["old_marking"]),
            ";".join(_marking_str(eq) for eq in row["equivalents"]),
            "true" if row["change_region"] else "false",
        ])
    return out.getvalue()


def emit_table(doc):
    left = ["old marking"] + [_marking_str(r["old_marking"])
                              for r in doc["rows"]]
    width = max(len(s) for s in left)
    lines = ["%-*s  %s" % (width, left[0], "new equivalent markings")]
    for label, row in zip(left[1:], doc["rows"]):
        if row["change_region"]:
            right = "(change region)"
        else:
            right = ", ".join(_marking_str(eq) for eq in row["equivalents"])
        lines.append("%-*s  %s" % (width, label, right))
    return "\n".join(lines) + "\n"
