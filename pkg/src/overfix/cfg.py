"""Per-function control flow graphs and the branch-decision cursor.

Each function gets one CFG with a single entry and exit.  ``for`` loops are
desugared to while form during construction (init node, header branch, body,
step, back edge).  Branch nodes carry their condition expression and, for loop
headers, a loop id used to enforce the unroll bound.

Path enumeration is depth-first over branch decisions.  The interpreter asks
the cursor which side to take at each branch; infeasible verdicts flip the
most recent unexplored decision, completed paths advance to the next leaf, and
``checkpoint`` tells the caller how much per-path state survives so constraint
prefixes are reused instead of re-interpreted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .frontend.ast import AstNode, NodeKind, SourceUnit


class CfgNodeKind(Enum):
    ENTRY = "entry"
    EXIT = "exit"
    STMT = "stmt"
    BRANCH = "branch"
    JOIN = "join"


@dataclass
class CfgNode:
    id: int
    kind: CfgNodeKind
    ast: AstNode | None = None    # statement payload
    cond: AstNode | None = None   # branch condition (None = constant true)
    loop_id: int | None = None    # set on loop-header branches


@dataclass
class Cfg:
    function_name: str
    nodes: list[CfgNode] = field(default_factory=list)
    entry: int = 0
    exit: int = 0
    edges: list[tuple[int, int, str]] = field(default_factory=list)  # (src, dst, label)
    _succ: dict[int, list[tuple[str, int]]] = field(default_factory=dict)

    def node(self, node_id: int) -> CfgNode:
        return self.nodes[node_id]

    def successors(self, node_id: int) -> list[tuple[str, int]]:
        return self._succ.get(node_id, [])

    def successor(self, node_id: int, label: str = "none") -> int:
        for lab, dst in self.successors(node_id):
            if lab == label:
                return dst
        raise KeyError(f"node {node_id} has no {label!r} successor")

    def add_edge(self, src: int, dst: int, label: str = "none") -> None:
        self.edges.append((src, dst, label))
        self._succ.setdefault(src, []).append((label, dst))


# A "port" is a node plus the pending edge label to use when wiring the next
# node after it; branch sides start as (branch, "true"/"false").
_Port = tuple[int, str]


class _Builder:
    def __init__(self, fn: AstNode):
        self.cfg = Cfg(fn.name)
        self.fn = fn

    def new_node(self, kind: CfgNodeKind, ast: AstNode | None = None,
                 cond: AstNode | None = None) -> int:
        node = CfgNode(len(self.cfg.nodes), kind, ast=ast, cond=cond)
        self.cfg.nodes.append(node)
        return node.id

    def connect(self, port: _Port, dst: int) -> None:
        self.cfg.add_edge(port[0], dst, port[1])

    def build(self) -> Cfg:
        entry = self.new_node(CfgNodeKind.ENTRY)
        exit_ = self.new_node(CfgNodeKind.EXIT)
        self.cfg.entry, self.cfg.exit = entry, exit_
        tail = self.stmt_seq(self.fn.body.children, (entry, "none"))
        if tail is not None:
            self.connect(tail, exit_)
        return self.cfg

    def stmt_seq(self, stmts: list[AstNode], port: _Port | None) -> _Port | None:
        for stmt in stmts:
            port = self.statement(stmt, port)
        return port

    def statement(self, stmt: AstNode, port: _Port | None) -> _Port | None:
        """Wire one statement after ``port``; returns the fall-through port
        (None when control cannot continue)."""
        if port is None:
            return None  # unreachable code after return
        k = stmt.kind
        if k in (NodeKind.EMPTY, NodeKind.EXTERN_DECL):
            return port
        if k is NodeKind.BLOCK:
            return self.stmt_seq(stmt.children, port)
        if k in (NodeKind.VAR_DECL, NodeKind.ASSIGN, NodeKind.CALL):
            node = self.new_node(CfgNodeKind.STMT, ast=stmt)
            self.connect(port, node)
            return (node, "none")
        if k is NodeKind.RETURN:
            node = self.new_node(CfgNodeKind.STMT, ast=stmt)
            self.connect(port, node)
            self.cfg.add_edge(node, self.cfg.exit)
            return None
        if k is NodeKind.IF:
            branch = self.new_node(CfgNodeKind.BRANCH, ast=stmt, cond=stmt.cond)
            self.connect(port, branch)
            join = self.new_node(CfgNodeKind.JOIN)
            reachable = False
            then_tail = self.statement(stmt.then_stmt, (branch, "true"))
            if then_tail is not None:
                self.connect(then_tail, join)
                reachable = True
            if stmt.else_stmt is not None:
                else_tail = self.statement(stmt.else_stmt, (branch, "false"))
            else:
                else_tail = (branch, "false")
            if else_tail is not None:
                self.connect(else_tail, join)
                reachable = True
            return (join, "none") if reachable else None
        if k is NodeKind.WHILE:
            return self.loop(port, cond=stmt.cond, body=[stmt.body], step=None, ast=stmt)
        if k is NodeKind.FOR:
            init, cond, step, body = stmt.children
            if init.kind is not NodeKind.EMPTY:
                port = self.statement(init, port)
            cond_expr = None if cond.kind is NodeKind.EMPTY else cond
            step_stmt = None if step.kind is NodeKind.EMPTY else step
            return self.loop(port, cond=cond_expr, body=[body], step=step_stmt, ast=stmt)
        raise AssertionError(f"unexpected statement kind {k}")

    def loop(self, port: _Port | None, cond: AstNode | None, body: list[AstNode],
             step: AstNode | None, ast: AstNode) -> _Port | None:
        if port is None:
            return None
        header = self.new_node(CfgNodeKind.BRANCH, ast=ast, cond=cond)
        self.cfg.nodes[header].loop_id = header
        self.connect(port, header)
        exit_join = self.new_node(CfgNodeKind.JOIN)
        self.cfg.add_edge(header, exit_join, "false")
        tail = self.stmt_seq(body, (header, "true"))
        if step is not None and tail is not None:
            tail = self.statement(step, tail)
        if tail is not None:
            self.connect(tail, header)  # back edge
        return (exit_join, "none")


def build_cfg(fn: AstNode) -> Cfg:
    """CFG for one typed FunctionDef."""
    assert fn.kind is NodeKind.FUNCTION_DEF
    return _Builder(fn).build()


def build_all(unit: SourceUnit) -> dict[str, Cfg]:
    return {name: build_cfg(fn) for name, fn in unit.functions.items()}


def to_dot(cfg: Cfg) -> str:
    lines = [f'digraph "{cfg.function_name}" {{']
    for node in cfg.nodes:
        label = node.kind.value
        if node.kind is CfgNodeKind.STMT and node.ast is not None:
            label = f"{node.id}: {node.ast.kind.value}"
        elif node.kind is CfgNodeKind.BRANCH:
            label = f"{node.id}: branch" + (" (loop)" if node.loop_id is not None else "")
        else:
            label = f"{node.id}: {label}"
        lines.append(f'  n{node.id} [label="{label}"];')
    for src, dst, lab in cfg.edges:
        attr = f' [label="{lab}"]' if lab != "none" else ""
        lines.append(f"  n{src} -> n{dst}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Depth-first path cursor


class Exhausted:
    """Sentinel: no unexplored paths remain."""

    def __repr__(self) -> str:
        return "Exhausted"


EXHAUSTED = Exhausted()

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"


@dataclass
class Decision:
    node_id: int
    taken: bool
    forced: bool = False     # no alternative (unroll bound hit)
    flipped: bool = False    # both polarities have been attempted


@dataclass
class PathCursor:
    """Replayable record of branch decisions along the current path prefix.

    ``checkpoint`` is the decision depth at which traversal resumes after a
    flip; state snapshots deeper than it are discarded, everything shallower
    is reused.
    """

    decisions: list[Decision] = field(default_factory=list)
    checkpoint: int = 0

    def decide(self, depth: int, node_id: int, forced: bool | None = None) -> bool:
        """Polarity to take at branch occurrence ``depth`` (appends if new)."""
        if depth < len(self.decisions):
            return self.decisions[depth].taken
        assert depth == len(self.decisions), "non-contiguous branch depth"
        if forced is not None:
            self.decisions.append(Decision(node_id, forced, forced=True))
            return forced
        self.decisions.append(Decision(node_id, True))
        return True

    @property
    def depth(self) -> int:
        return len(self.decisions)


def next_path(cursor: PathCursor, verdict: str) -> PathCursor | Exhausted:
    """Advance after a branch verdict or a completed path.

    INFEASIBLE flips the deepest unexplored decision and truncates deeper
    state; FEASIBLE (a completed path) moves to the next unexplored leaf in
    DFS order.  Returns EXHAUSTED when no unexplored decision remains.
    """
    decisions = cursor.decisions
    if verdict == INFEASIBLE and decisions:
        tip = decisions[-1]
        if not tip.forced and not tip.flipped:
            tip.taken = not tip.taken
            tip.flipped = True
            cursor.checkpoint = len(decisions) - 1
            return cursor
        decisions.pop()
    while decisions:
        top = decisions[-1]
        if top.forced or top.flipped:
            decisions.pop()
            continue
        top.taken = not top.taken
        top.flipped = True
        cursor.checkpoint = len(decisions) - 1
        return cursor
    return EXHAUSTED
