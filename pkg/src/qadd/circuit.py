"""Core reversible-circuit IR: wires, gates, stats, and layout span.

A circuit is an ordered list of gates over ``wire_count`` wires, with a
declared set of ancilla wires (required to start and end in 0) and an
optional role map labeling wires (``B3``, ``A0``, ``Z``, ...).  Depth is
never stored; it is derived from the wire-sharing dependency DAG, so the
reported statistics are always consistent with the gate list.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping


class GateKind(Enum):
    """The five supported elementary gate kinds.

    Every kind permutes computational basis states and is its own inverse,
    which is what makes circuits classically simulable and reversible by
    plain gate-list reversal.
    """

    NOT = "x"
    CNOT = "cx"
    TOFFOLI = "ccx"
    FANOUT = "fo"
    GEN_TOFFOLI = "tg"


#: Gate kinds that count toward the Toffoli-weighted depth.
TOFFOLI_KINDS = frozenset((GateKind.TOFFOLI, GateKind.GEN_TOFFOLI))

# (min controls, max controls or None, min targets, max targets or None)
_ARITY = {
    GateKind.NOT: (0, 0, 1, 1),
    GateKind.CNOT: (1, 1, 1, 1),
    GateKind.TOFFOLI: (2, 2, 1, 1),
    GateKind.FANOUT: (1, 1, 1, None),
    GateKind.GEN_TOFFOLI: (1, None, 1, 1),
}


@dataclass(frozen=True)
class Gate:
    """One elementary gate.

    ``controls`` holds the control wires; for FANOUT it holds the single
    source wire.  ``targets`` is exactly one wire for every kind except
    FANOUT, where it lists the t >= 1 fan-out targets (t is the gate's
    "length").  All operand wires of one gate must be pairwise distinct.
    """

    kind: GateKind
    controls: tuple[int, ...]
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        lo_c, hi_c, lo_t, hi_t = _ARITY[self.kind]
        if len(self.controls) < lo_c or (hi_c is not None and len(self.controls) > hi_c):
            raise ValueError(f"{self.kind.value}: bad control count {len(self.controls)}")
        if len(self.targets) < lo_t or (hi_t is not None and len(self.targets) > hi_t):
            raise ValueError(f"{self.kind.value}: bad target count {len(self.targets)}")
        ops = self.operands
        if any(w < 0 for w in ops):
            raise ValueError(f"{self.kind.value}: negative wire id in {ops}")
        if len(set(ops)) != len(ops):
            raise ValueError(f"{self.kind.value}: duplicate operand wire in {ops}")

    @property
    def operands(self) -> tuple[int, ...]:
        return self.controls + self.targets

    @property
    def fanout_length(self) -> int:
        """Number of fan-out targets; 0 for non-FANOUT gates."""
        return len(self.targets) if self.kind is GateKind.FANOUT else 0


def x(target: int) -> Gate:
    return Gate(GateKind.NOT, (), (target,))


def cx(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, (control,), (target,))


def ccx(c1: int, c2: int, target: int) -> Gate:
    return Gate(GateKind.TOFFOLI, (c1, c2), (target,))


def fo(source: int, targets: Iterable[int]) -> Gate:
    return Gate(GateKind.FANOUT, (source,), tuple(targets))


def tg(controls: Iterable[int], target: int) -> Gate:
    return Gate(GateKind.GEN_TOFFOLI, tuple(controls), (target,))


@dataclass(frozen=True)
class CircuitStats:
    """Exact complexity record for one circuit.

    ``depth`` treats every gate (Fanout and GenToffoli of any arity
    included) as one layer.  ``toffoli_depth`` is the maximum-weight path
    through the same dependency DAG with Toffoli-kind gates weighted 1 and
    everything else 0.
    """

    depth: int
    toffoli_depth: int
    size: int
    count_not: int
    count_cnot: int
    count_toffoli: int
    count_fanout: int
    count_gen_toffoli: int
    ancilla_count: int
    max_fanout_length: int

    @property
    def count_toffoli_like(self) -> int:
        return self.count_toffoli + self.count_gen_toffoli

    def to_json_dict(self) -> dict:
        return {
            "depth": self.depth,
            "toffoli_depth": self.toffoli_depth,
            "size": self.size,
            "count_not": self.count_not,
            "count_cnot": self.count_cnot,
            "count_toffoli": self.count_toffoli,
            "count_fanout": self.count_fanout,
            "count_gen_toffoli": self.count_gen_toffoli,
            "ancilla_count": self.ancilla_count,
            "max_fanout_length": self.max_fanout_length,
        }


class Circuit:
    """Ordered gate list over a fixed wire set with ancilla bookkeeping.

    Circuits are meant to be immutable once synthesis is finished;
    ``append``/``extend`` are the only mutators and validate every gate
    against the wire count.
    """

    __slots__ = ("wire_count", "ancilla", "role_map", "gates")

    def __init__(
        self,
        wire_count: int,
        ancilla: Iterable[int] = (),
        role_map: Mapping[int, str] | None = None,
        gates: Iterable[Gate] = (),
    ) -> None:
        if wire_count <= 0:
            raise ValueError(f"wire_count must be positive, got {wire_count}")
        self.wire_count = int(wire_count)
        anc = frozenset(int(w) for w in ancilla)
        for w in anc:
            if not 0 <= w < wire_count:
                raise ValueError(f"ancilla wire {w} out of range for {wire_count} wires")
        self.ancilla = anc
        if role_map is not None:
            roles = {int(w): str(label) for w, label in role_map.items()}
            for w in roles:
                if not 0 <= w < wire_count:
                    raise ValueError(f"role wire {w} out of range")
            if len(set(roles.values())) != len(roles):
                raise ValueError("role labels must be unique")
            self.role_map: dict[int, str] | None = roles
        else:
            self.role_map = None
        self.gates: list[Gate] = []
        self.extend(gates)

    def append(self, gate: Gate) -> "Circuit":
        for w in gate.operands:
            if w >= self.wire_count:
                raise ValueError(
                    f"gate operand {w} out of range for {self.wire_count} wires"
                )
        self.gates.append(gate)
        return self

    def extend(self, gates: Iterable[Gate]) -> "Circuit":
        for g in gates:
            self.append(g)
        return self

    def inverse(self) -> "Circuit":
        """Reversed gate list; every supported gate is an involution."""
        return Circuit(self.wire_count, self.ancilla, self.role_map, reversed(self.gates))

    def stats(self) -> CircuitStats:
        return compute_stats(self)

    def wires_by_role(self) -> dict[str, int]:
        """Invert the role map (label -> wire)."""
        if self.role_map is None:
            return {}
        return {label: w for w, label in self.role_map.items()}

    def __len__(self) -> int:
        return len(self.gates)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return (
            self.wire_count == other.wire_count
            and self.ancilla == other.ancilla
            and (self.role_map or {}) == (other.role_map or {})
            and self.gates == other.gates
        )

    def __repr__(self) -> str:
        return (
            f"Circuit(wires={self.wire_count}, gates={len(self.gates)}, "
            f"ancilla={len(self.ancilla)})"
        )


def build_circuit(wire_count: int, ancilla: Iterable[int] = ()) -> Circuit:
    """Empty circuit over ``wire_count`` wires with the given ancilla set."""
    return Circuit(wire_count, ancilla)


def compute_stats(circuit: Circuit) -> CircuitStats:
    """Depth, Toffoli-weighted depth, and exact gate counts.

    A gate depends on the most recent earlier gate touching any of its
    operand wires; inputs have depth 0 and every gate adds one layer.
    """
    depth_at = [0] * circuit.wire_count
    tdepth_at = [0] * circuit.wire_count
    n_not = n_cnot = n_toffoli = n_fanout = n_gen = 0
    max_fanout = 0
    for gate in circuit.gates:
        kind = gate.kind
        ops = gate.controls + gate.targets
        d = 0
        td = 0
        for w in ops:
            if depth_at[w] > d:
                d = depth_at[w]
            if tdepth_at[w] > td:
                td = tdepth_at[w]
        d += 1
        if kind is GateKind.CNOT:
            n_cnot += 1
        elif kind is GateKind.TOFFOLI:
            n_toffoli += 1
            td += 1
        elif kind is GateKind.NOT:
            n_not += 1
        elif kind is GateKind.FANOUT:
            n_fanout += 1
            if len(gate.targets) > max_fanout:
                max_fanout = len(gate.targets)
        else:
            n_gen += 1
            td += 1
        for w in ops:
            depth_at[w] = d
            tdepth_at[w] = td
    return CircuitStats(
        depth=max(depth_at, default=0),
        toffoli_depth=max(tdepth_at, default=0),
        size=len(circuit.gates),
        count_not=n_not,
        count_cnot=n_cnot,
        count_toffoli=n_toffoli,
        count_fanout=n_fanout,
        count_gen_toffoli=n_gen,
        ancilla_count=len(circuit.ancilla),
        max_fanout_length=max_fanout,
    )


def max_window_span(circuit: Circuit, layout: Mapping[int, int]) -> int:
    """Largest distance any single gate spans under a line layout.

    ``layout`` must map every wire to a distinct non-negative line
    position.  Returns max over gates of (max operand position - min
    operand position); 0 for an empty circuit.
    """
    positions = {int(w): int(p) for w, p in layout.items()}
    missing = [w for w in range(circuit.wire_count) if w not in positions]
    if missing:
        raise ValueError(f"layout missing wires {missing}")
    if len(set(positions.values())) != circuit.wire_count:
        raise ValueError("layout positions must be distinct")
    if any(p < 0 for p in positions.values()):
        raise ValueError("layout positions must be non-negative")
    pos = [positions[w] for w in range(circuit.wire_count)]
    span = 0
    for gate in circuit.gates:
        lo = hi = pos[gate.targets[0]]
        for w in gate.controls + gate.targets:
            p = pos[w]
            if p < lo:
                lo = p
            elif p > hi:
                hi = p
        if hi - lo > span:
            span = hi - lo
    return span
