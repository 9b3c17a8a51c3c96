"""Treatment-path property graph: model, JSON interchange, validation, traversal.

A path is a rooted graph of typed nodes.  Navigation follows NEXT/JUMP edges
and labelled decision branches; INFO edges attach background material without
being part of the walk.  Graphs are immutable after loading and safe to share
across threads.
"""

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import jsonschema

NODE_ID_RE = re.compile(r"^[a-z0-9_-]{1,64}$")

_SCHEMA_PATH = Path(__file__).parent / "data" / "graph.schema.json"
_SCHEMA = json.loads(_SCHEMA_PATH.read_text(encoding="utf-8"))


class NodeKind(str, Enum):
    START = "start"
    ACTION = "action"
    DECISION = "decision"
    JUMP = "jump"
    INFO = "info"
    END = "end"


class Relation(str, Enum):
    NEXT = "next"
    YES = "yes"
    NO = "no"
    OPTION = "option"
    INFO = "info"
    JUMP = "jump"


class Comparator(str, Enum):
    GT = "gt"
    GE = "ge"
    LT = "lt"
    LE = "le"
    EQ = "eq"

    def evaluate(self, value: float, threshold: float) -> bool:
        if self is Comparator.GT:
            return value > threshold
        if self is Comparator.GE:
            return value >= threshold
        if self is Comparator.LT:
            return value < threshold
        if self is Comparator.LE:
            return value <= threshold
        return value == threshold


@dataclass(frozen=True)
class DecisionSpec:
    question: str
    branch_labels: tuple[str, ...]
    auto_fact: str | None = None
    comparator: Comparator | None = None
    threshold: float | None = None


@dataclass(frozen=True)
class TreatmentNode:
    id: str
    kind: NodeKind
    text: str
    info_text: str | None = None
    timer_seconds: int | None = None
    warning_text: str | None = None
    decision: DecisionSpec | None = None


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    relation: Relation
    label: str | None = None  # only OPTION edges carry one

    def branch_label(self, spec: DecisionSpec) -> str | None:
        """Branch label this edge answers, given the decision it leaves."""
        if self.relation is Relation.YES:
            return spec.branch_labels[0] if spec.branch_labels else None
        if self.relation is Relation.NO:
            return spec.branch_labels[1] if len(spec.branch_labels) > 1 else None
        if self.relation is Relation.OPTION:
            return self.label
        return None


@dataclass(frozen=True)
class Violation:
    rule: str
    locator: str
    message: str

    def __str__(self):
        return f"[{self.rule}] {self.locator}: {self.message}"


class ParseError(ValueError):
    """Document is not well-formed interchange JSON."""


class GraphValidationError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


class UnknownNode(KeyError):
    pass


class MissingAnswer(ValueError):
    pass


class UnknownBranchLabel(ValueError):
    pass


NAV_RELATIONS = (Relation.NEXT, Relation.YES, Relation.NO, Relation.OPTION, Relation.JUMP)


@dataclass(frozen=True)
class TreatmentGraph:
    path_id: str
    title: str
    nodes: tuple[TreatmentNode, ...]
    edges: tuple[Edge, ...]
    _by_id: dict[str, TreatmentNode] = field(repr=False, default_factory=dict)
    _out: dict[str, tuple[Edge, ...]] = field(repr=False, default_factory=dict)

    @staticmethod
    def build(path_id: str, title: str, nodes: list[TreatmentNode],
              edges: list[Edge]) -> "TreatmentGraph":
        by_id = {n.id: n for n in nodes}
        out: dict[str, list[Edge]] = {n.id: [] for n in nodes}
        for e in edges:
            if e.src in out:
                out[e.src].append(e)
        return TreatmentGraph(path_id, title, tuple(nodes), tuple(edges), by_id,
                              {k: tuple(v) for k, v in out.items()})

    def node(self, node_id: str) -> TreatmentNode:
        try:
            return self._by_id[node_id]
        except KeyError:
            raise UnknownNode(node_id) from None

    def has_node(self, node_id: str) -> bool:
        return node_id in self._by_id

    def out_edges(self, node_id: str) -> tuple[Edge, ...]:
        self.node(node_id)
        return self._out.get(node_id, ())

    @property
    def start(self) -> TreatmentNode:
        for n in self.nodes:
            if n.kind is NodeKind.START:
                return n
        raise GraphValidationError([Violation("no-start", self.path_id, "graph has no start node")])


# --- validation -------------------------------------------------------------

def validate(graph: TreatmentGraph) -> list[Violation]:
    """Check every structural invariant; empty list means the graph is sound."""
    v: list[Violation] = []
    ids = [n.id for n in graph.nodes]
    seen: set[str] = set()
    for i in ids:
        if i in seen:
            v.append(Violation("duplicate-id", i, "node id appears more than once"))
        seen.add(i)
    for n in graph.nodes:
        if not NODE_ID_RE.match(n.id):
            v.append(Violation("bad-id", n.id, "id must match [a-z0-9_-]{1,64}"))
        if n.timer_seconds is not None and n.timer_seconds <= 0:
            v.append(Violation("bad-timer", n.id, "timer_seconds must be positive"))
        if n.kind is NodeKind.DECISION and n.decision is None:
            v.append(Violation("decision-spec-missing", n.id, "decision node without a decision block"))
        if n.kind is not NodeKind.DECISION and n.decision is not None:
            v.append(Violation("decision-spec-unexpected", n.id, f"{n.kind.value} node carries a decision block"))
        if n.decision is not None:
            spec = n.decision
            if not 1 <= len(spec.branch_labels) <= 4:
                v.append(Violation("bad-branch-count", n.id, "decisions carry 1 to 4 branch labels"))
            if len(set(spec.branch_labels)) != len(spec.branch_labels):
                v.append(Violation("duplicate-branch-label", n.id, "branch labels must be distinct"))
            if spec.auto_fact is not None:
                if spec.comparator is None or spec.threshold is None:
                    v.append(Violation("auto-fact-incomplete", n.id,
                                       "auto_fact requires comparator and threshold"))
                if len(spec.branch_labels) != 2:
                    v.append(Violation("auto-fact-not-binary", n.id,
                                       "auto-resolved decisions must have exactly two branches"))

    starts = [n.id for n in graph.nodes if n.kind is NodeKind.START]
    if not starts:
        v.append(Violation("no-start", graph.path_id, "graph has no start node"))
    elif len(starts) > 1:
        v.append(Violation("multiple-start", ", ".join(starts), "graph has more than one start node"))

    for e in graph.edges:
        loc = f"{e.src}->{e.dst}"
        if not graph.has_node(e.src) or not graph.has_node(e.dst):
            v.append(Violation("unknown-endpoint", loc, "edge endpoint is not a node"))
            continue
        if e.relation is Relation.OPTION and not e.label:
            v.append(Violation("option-without-label", loc, "option edge needs a label"))
        if e.relation is not Relation.OPTION and e.label:
            v.append(Violation("label-on-non-option", loc, "only option edges carry labels"))
        if e.relation is Relation.INFO and graph.node(e.dst).kind is not NodeKind.INFO:
            v.append(Violation("info-target-kind", loc, "info edge must point at an info node"))

    for n in graph.nodes:
        if not graph.has_node(n.id):
            continue
        out = [e for e in graph._out.get(n.id, ()) if graph.has_node(e.dst)]
        nav = [e for e in out if e.relation in (Relation.NEXT, Relation.JUMP)]
        branch = [e for e in out if e.relation in (Relation.YES, Relation.NO, Relation.OPTION)]
        if n.kind is NodeKind.END:
            if branch or any(e.relation is Relation.NEXT for e in out):
                v.append(Violation("end-not-terminal", n.id, "end node has outgoing walk edges"))
        elif n.kind is NodeKind.DECISION:
            if nav:
                v.append(Violation("decision-extra-edge", n.id, "decision node has a next/jump edge"))
            if n.decision is not None:
                want = list(n.decision.branch_labels)
                got: list[str] = []
                for e in branch:
                    lbl = e.branch_label(n.decision)
                    if lbl is None or lbl not in want:
                        v.append(Violation("unknown-branch-edge", f"{n.id}->{e.dst}",
                                           f"edge does not match any branch label ({lbl!r})"))
                    else:
                        got.append(lbl)
                for lbl in want:
                    k = got.count(lbl)
                    if k == 0:
                        v.append(Violation("missing-branch-edge", n.id, f"no edge for branch {lbl!r}"))
                    elif k > 1:
                        v.append(Violation("duplicate-branch-edge", n.id, f"{k} edges for branch {lbl!r}"))
        else:
            if branch:
                v.append(Violation("branch-on-non-decision", n.id, "yes/no/option edge on a non-decision node"))
            if len(nav) != 1:
                v.append(Violation("bad-out-degree", n.id,
                                   f"needs exactly one next/jump edge, has {len(nav)}"))

    if len(starts) == 1 and not any(x.rule in ("unknown-endpoint", "duplicate-id") for x in v):
        reachable = _reach(graph, starts[0])
        for n in graph.nodes:
            if n.id not in reachable:
                v.append(Violation("unreachable", n.id, "not reachable from start"))
        v.extend(_cycles_without_decision(graph))
    return v


def _reach(graph: TreatmentGraph, root: str) -> set[str]:
    seen = {root}
    frontier = [root]
    while frontier:
        nid = frontier.pop()
        for e in graph._out.get(nid, ()):
            if graph.has_node(e.dst) and e.dst not in seen:
                seen.add(e.dst)
                frontier.append(e.dst)
    return seen


def _cycles_without_decision(graph: TreatmentGraph) -> list[Violation]:
    """Cycles over NEXT/YES/NO/OPTION edges must pass a decision node.

    JUMP edges are the sanctioned way to close reassessment loops, so they are
    excluded from the cycle check.  Tarjan SCC over the remaining edges; any
    cyclic component made only of non-decision nodes is flagged.
    """
    adj: dict[str, list[str]] = {n.id: [] for n in graph.nodes}
    for e in graph.edges:
        if e.relation in (Relation.NEXT, Relation.YES, Relation.NO, Relation.OPTION):
            if graph.has_node(e.src) and graph.has_node(e.dst):
                adj[e.src].append(e.dst)

    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    sccs: list[list[str]] = []
    counter = [0]

    def strongconnect(root: str):
        work = [(root, iter(adj[root]))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter[0]
                    counter[0] += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
                elif nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                sccs.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])

    for nid in adj:
        if nid not in index:
            strongconnect(nid)

    out = []
    for comp in sccs:
        cyclic = len(comp) > 1 or any(nid in adj[nid] for nid in comp)
        if cyclic and not any(graph.node(nid).kind is NodeKind.DECISION for nid in comp):
            out.append(Violation("cycle-without-decision", ", ".join(sorted(comp)),
                                 "walk cycle contains no decision node"))
    return out


# --- interchange ------------------------------------------------------------

def load_graph(document: str) -> TreatmentGraph:
    """Parse interchange JSON and return a validated graph.

    Raises ParseError for malformed documents and GraphValidationError with
    the full violation list for well-formed but inconsistent ones.
    """
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        jsonschema.validate(doc, _SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise ParseError(f"schema violation at /{path}: {exc.message}") from exc

    nodes = []
    for nd in doc["nodes"]:
        spec = None
        if "decision" in nd:
            d = nd["decision"]
            spec = DecisionSpec(
                question=d["question"],
                branch_labels=tuple(d["branch_labels"]),
                auto_fact=d.get("auto_fact"),
                comparator=Comparator(d["comparator"]) if "comparator" in d else None,
                threshold=d.get("threshold"),
            )
        nodes.append(TreatmentNode(
            id=nd["id"], kind=NodeKind(nd["kind"]), text=nd["text"],
            info_text=nd.get("info_text"), timer_seconds=nd.get("timer_seconds"),
            warning_text=nd.get("warning_text"), decision=spec,
        ))
    edges = [Edge(src=ed["from"], dst=ed["to"], relation=Relation(ed["relation"]),
                  label=ed.get("label"))
             for ed in doc["edges"]]
    graph = TreatmentGraph.build(doc["path_id"], doc["title"], nodes, edges)
    violations = validate(graph)
    if violations:
        raise GraphValidationError(violations)
    return graph


def load_graph_file(path: Path) -> TreatmentGraph:
    return load_graph(path.read_text(encoding="utf-8"))


def serialize(graph: TreatmentGraph) -> str:
    """Interchange JSON for a graph; load_graph(serialize(g)) is isomorphic to g."""
    doc: dict = {"path_id": graph.path_id, "title": graph.title, "nodes": [], "edges": []}
    for n in graph.nodes:
        nd: dict = {"id": n.id, "kind": n.kind.value, "text": n.text}
        if n.info_text is not None:
            nd["info_text"] = n.info_text
        if n.timer_seconds is not None:
            nd["timer_seconds"] = n.timer_seconds
        if n.warning_text is not None:
            nd["warning_text"] = n.warning_text
        if n.decision is not None:
            d: dict = {"question": n.decision.question,
                       "branch_labels": list(n.decision.branch_labels)}
            if n.decision.auto_fact is not None:
                d["auto_fact"] = n.decision.auto_fact
            if n.decision.comparator is not None:
                d["comparator"] = n.decision.comparator.value
            if n.decision.threshold is not None:
                d["threshold"] = n.decision.threshold
            nd["decision"] = d
        doc["nodes"].append(nd)
    for e in graph.edges:
        ed = {"from": e.src, "to": e.dst, "relation": e.relation.value}
        if e.label is not None:
            ed["label"] = e.label
        doc["edges"].append(ed)
    return json.dumps(doc, ensure_ascii=False, indent=2)


# --- traversal --------------------------------------------------------------

def successors(graph: TreatmentGraph, node_id: str, answer: str | None = None) -> list[TreatmentNode]:
    """Walk targets from a node; decisions need the chosen branch label."""
    node = graph.node(node_id)
    if node.kind is NodeKind.END:
        return []
    if node.kind is NodeKind.DECISION:
        if answer is None:
            raise MissingAnswer(f"decision {node_id} needs an answer")
        spec = node.decision
        assert spec is not None
        if answer not in spec.branch_labels:
            raise UnknownBranchLabel(f"{answer!r} is not a branch of {node_id}")
        for e in graph.out_edges(node_id):
            if e.branch_label(spec) == answer:
                return [graph.node(e.dst)]
        raise UnknownBranchLabel(f"no edge for branch {answer!r} at {node_id}")
    for e in graph.out_edges(node_id):
        if e.relation in (Relation.NEXT, Relation.JUMP):
            return [graph.node(e.dst)]
    return []


def attached_info(graph: TreatmentGraph, node_id: str) -> str | None:
    """Long-form text for a node: its own info_text or an INFO neighbour's text."""
    node = graph.node(node_id)
    if node.info_text is not None:
        return node.info_text
    for e in graph.out_edges(node_id):
        if e.relation is Relation.INFO:
            return graph.node(e.dst).text
    return None
