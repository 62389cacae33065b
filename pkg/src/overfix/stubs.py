"""Models for library calls: each known external resolves to one stub effect.

Sources (rand, fscanf) produce fresh symbolic values, sinks and memory helpers
are no-ops over the integer environment, abort-style calls terminate the path,
and ``sqrt`` is a pure intrinsic folded at the formula level.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .bounds import CType


class UnknownExtern(Exception):
    def __init__(self, name: str):
        super().__init__(f"call to unknown external function: {name}")
        self.name = name


class StubEffect(Enum):
    FRESH_RETURN = "freshSymbolicReturn"   # new unconstrained value (maybe ranged)
    HAVOC_ARGS = "havocTarget"             # &x arguments get fresh values
    NOOP = "noop"
    TERMINATE = "terminate"                # path ends here
    INTRINSIC = "intrinsic"                # pure math, folded in formulas
    HANDLER = "handler"                    # repair handler; noop or terminate


@dataclass(frozen=True)
class StubModel:
    name: str
    effect: StubEffect
    return_type: CType
    # FRESH_RETURN range policy: "rand" clamps to [0, max of return type],
    # "typed" clamps to the full range of the destination type, None is
    # unconstrained.  Clamping can be disabled per run.
    range_policy: str | None = None


STUB_TABLE: dict[str, StubModel] = {
    "rand": StubModel("rand", StubEffect.FRESH_RETURN, CType.INT, range_policy="rand"),
    "fscanf": StubModel("fscanf", StubEffect.HAVOC_ARGS, CType.INT, range_policy="typed"),
    "scanf": StubModel("scanf", StubEffect.HAVOC_ARGS, CType.INT, range_policy="typed"),
    "malloc": StubModel("malloc", StubEffect.NOOP, CType.PTR),
    "memset": StubModel("memset", StubEffect.NOOP, CType.PTR),
    "memcpy": StubModel("memcpy", StubEffect.NOOP, CType.PTR),
    "free": StubModel("free", StubEffect.NOOP, CType.VOID),
    "printf": StubModel("printf", StubEffect.NOOP, CType.INT),
    "fprintf": StubModel("fprintf", StubEffect.NOOP, CType.INT),
    "puts": StubModel("puts", StubEffect.NOOP, CType.INT),
    "abort": StubModel("abort", StubEffect.TERMINATE, CType.VOID),
    "exit": StubModel("exit", StubEffect.TERMINATE, CType.VOID),
    "sqrt": StubModel("sqrt", StubEffect.INTRINSIC, CType.INT64),
    "log_or_die": StubModel("log_or_die", StubEffect.HANDLER, CType.VOID),
}

# Opaque stream handles accepted as ordinary call arguments.
STREAM_IDENTS = frozenset({"stdin", "stdout", "stderr"})


def stub_for(name: str) -> StubModel:
    model = STUB_TABLE.get(name)
    if model is None:
        raise UnknownExtern(name)
    return model
