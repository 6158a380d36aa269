"""Classical bit-vector semantics and verification harnesses.

Every supported gate permutes computational basis states, so a circuit is
fully characterized by its action on classical bit assignments.  The
public ``apply_gate``/``run`` functions operate on one state (a list of
0/1 ints, one per wire).  The verification harnesses internally pack many
independent cases into Python integers, one column per wire with bit ``c``
holding that wire's value in case ``c``, so a single pass over the gate
list simulates every case at once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .circuit import Circuit, Gate, GateKind

#: One classical bit per wire.
BitState = list[int]

#: Per-case oracle: full-width input bits -> full-width expected bits.
Oracle = Callable[[BitState], BitState]

#: Packed oracle: (input columns, case count) -> expected columns.
PackedOracle = Callable[[list[int], int], list[int]]

#: Hard cap on exhaustive enumeration (2**24 cases).
EXHAUSTIVE_WIRE_CAP = 24

#: At most this many failing cases are recorded in a report.
MAX_RECORDED_FAILURES = 32

_MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    """Infinite stream of 64-bit words from the splitmix64 generator.

    Fixed algorithm so that identical seeds yield identical trial
    sequences across implementations.
    """
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def apply_gate(state: Sequence[int], gate: Gate) -> BitState:
    """Apply one gate to a bit state; returns a new state."""
    out = list(state)
    for w in gate.operands:
        if w >= len(out):
            raise ValueError(f"gate operand {w} out of range for state of {len(out)} wires")
    kind = gate.kind
    if kind is GateKind.NOT:
        out[gate.targets[0]] ^= 1
    elif kind is GateKind.CNOT:
        out[gate.targets[0]] ^= out[gate.controls[0]]
    elif kind is GateKind.TOFFOLI:
        c1, c2 = gate.controls
        out[gate.targets[0]] ^= out[c1] & out[c2]
    elif kind is GateKind.FANOUT:
        src = out[gate.controls[0]]
        for t in gate.targets:
            out[t] ^= src
    else:  # GEN_TOFFOLI
        acc = 1
        for c in gate.controls:
            acc &= out[c]
        out[gate.targets[0]] ^= acc
    return out


def run(circuit: Circuit, state: Sequence[int]) -> BitState:
    """Run a circuit on one bit state.

    Rejects inputs whose ancilla wires are nonzero rather than silently
    accepting them.
    """
    if len(state) != circuit.wire_count:
        raise ValueError(
            f"state has {len(state)} wires, circuit has {circuit.wire_count}"
        )
    bad = [w for w in circuit.ancilla if state[w]]
    if bad:
        raise ValueError(f"ancilla wires {sorted(bad)} must be 0 on input")
    out = list(state)
    for gate in circuit.gates:
        kind = gate.kind
        if kind is GateKind.NOT:
            out[gate.targets[0]] ^= 1
        elif kind is GateKind.CNOT:
            out[gate.targets[0]] ^= out[gate.controls[0]]
        elif kind is GateKind.TOFFOLI:
            c1, c2 = gate.controls
            out[gate.targets[0]] ^= out[c1] & out[c2]
        elif kind is GateKind.FANOUT:
            src = out[gate.controls[0]]
            for t in gate.targets:
                out[t] ^= src
        else:
            acc = 1
            for c in gate.controls:
                acc &= out[c]
            out[gate.targets[0]] ^= acc
    return out


def run_packed(circuit: Circuit, columns: Sequence[int], n_cases: int) -> list[int]:
    """Run a circuit on ``n_cases`` packed cases (one int column per wire)."""
    if len(columns) != circuit.wire_count:
        raise ValueError("column count must equal wire count")
    mask = (1 << n_cases) - 1
    cols = list(columns)
    for gate in circuit.gates:
        kind = gate.kind
        if kind is GateKind.CNOT:
            cols[gate.targets[0]] ^= cols[gate.controls[0]]
        elif kind is GateKind.TOFFOLI:
            c1, c2 = gate.controls
            cols[gate.targets[0]] ^= cols[c1] & cols[c2]
        elif kind is GateKind.NOT:
            cols[gate.targets[0]] ^= mask
        elif kind is GateKind.FANOUT:
            src = cols[gate.controls[0]]
            for t in gate.targets:
                cols[t] ^= src
        else:
            acc = mask
            for c in gate.controls:
                acc &= cols[c]
            cols[gate.targets[0]] ^= acc
    return cols


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one verification run.

    ``failures`` holds (input, expected, actual) full-width bit vectors and
    ``ancilla_violations`` the inputs whose run left an ancilla wire
    nonzero; both are capped at ``MAX_RECORDED_FAILURES`` entries (the
    earliest case indices are kept).  Verification passed iff both lists
    are empty.
    """

    total_cases: int
    failures: tuple = field(default_factory=tuple)
    ancilla_violations: tuple = field(default_factory=tuple)
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures and not self.ancilla_violations

    def to_json_dict(self) -> dict:
        return {
            "total_cases": self.total_cases,
            "failures": [
                {"input": list(i), "expected": list(e), "actual": list(a)}
                for (i, e, a) in self.failures
            ],
            "ancilla_violations": [list(v) for v in self.ancilla_violations],
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _enumeration_columns(circuit: Circuit, free: Sequence[int]) -> list[int]:
    """Truth-table columns: bit c of free wire i's column is (c >> i) & 1."""
    total = 1 << len(free)
    cols = [0] * circuit.wire_count
    for i, w in enumerate(free):
        half = 1 << i
        pattern = ((1 << half) - 1) << half
        length = half << 1
        while length < total:
            pattern |= pattern << length
            length <<= 1
        cols[w] = pattern
    return cols


def _random_columns(
    circuit: Circuit, free: Sequence[int], trials: int, seed: int
) -> list[int]:
    """Seeded input columns: bit ``trial*len(free) + j`` of the splitmix64
    bit stream (words flattened LSB-first) drives free wire ``free[j]`` in
    that trial."""
    cols = [0] * circuit.wire_count
    gen = splitmix64(seed)
    word = 0
    have = 0
    for trial in range(trials):
        bit_pos = 1 << trial
        for w in free:
            if have == 0:
                word = next(gen)
                have = 64
            if word & 1:
                cols[w] |= bit_pos
            word >>= 1
            have -= 1
    return cols


def _column_bytes(col: int, n_cases: int) -> bytes:
    return col.to_bytes((n_cases + 7) // 8, "little")


def _case_bits(bufs: list[bytes], case: int, width: int) -> list[int]:
    byte, shift = case >> 3, case & 7
    return [(bufs[w][byte] >> shift) & 1 for w in range(width)]


def _iter_set_bits(mask: int, limit: int) -> list[int]:
    out = []
    while mask and len(out) < limit:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_columns(
    circuit: Circuit,
    in_cols: list[int],
    n_cases: int,
    oracle: Oracle | None,
    packed_oracle: PackedOracle | None,
    seed: int | None,
) -> VerifyReport:
    if oracle is None and packed_oracle is None:
        raise ValueError("need an oracle or a packed oracle")
    wc = circuit.wire_count
    out_cols = run_packed(circuit, in_cols, n_cases)
    data_wires = [w for w in range(wc) if w not in circuit.ancilla]

    if packed_oracle is not None:
        exp_cols = packed_oracle(list(in_cols), n_cases)
    else:
        exp_cols = [0] * wc
        in_bufs = [_column_bytes(c, n_cases) for c in in_cols]
        for case in range(n_cases):
            bit_pos = 1 << case
            expected = oracle(_case_bits(in_bufs, case, wc))
            for w in data_wires:
                if expected[w]:
                    exp_cols[w] |= bit_pos

    diff = 0
    for w in data_wires:
        diff |= exp_cols[w] ^ out_cols[w]
    viol = 0
    for w in circuit.ancilla:
        viol |= out_cols[w]

    failures: list[tuple] = []
    violations: list[tuple] = []
    if diff or viol:
        in_bufs = [_column_bytes(c, n_cases) for c in in_cols]
        out_bufs = [_column_bytes(c, n_cases) for c in out_cols]
        exp_bufs = [_column_bytes(c, n_cases) for c in exp_cols]
        for case in _iter_set_bits(diff, MAX_RECORDED_FAILURES):
            inp = _case_bits(in_bufs, case, wc)
            exp = _case_bits(exp_bufs, case, wc)
            for w in circuit.ancilla:
                exp[w] = 0
            failures.append((tuple(inp), tuple(exp), tuple(_case_bits(out_bufs, case, wc))))
        for case in _iter_set_bits(viol, MAX_RECORDED_FAILURES):
            violations.append(tuple(_case_bits(in_bufs, case, wc)))
    return VerifyReport(
        total_cases=n_cases,
        failures=tuple(failures),
        ancilla_violations=tuple(violations),
        seed=seed,
    )


def _resolve_free(circuit: Circuit, free_wires: Iterable[int] | None) -> list[int]:
    if free_wires is None:
        return [w for w in range(circuit.wire_count) if w not in circuit.ancilla]
    free = sorted(int(w) for w in free_wires)
    for w in free:
        if not 0 <= w < circuit.wire_count:
            raise ValueError(f"free wire {w} out of range")
        if w in circuit.ancilla:
            raise ValueError(f"ancilla wire {w} cannot be enumerated")
    if len(set(free)) != len(free):
        raise ValueError("free wires must be distinct")
    return free


def verify_exhaustive(
    circuit: Circuit,
    oracle: Oracle | None = None,
    free_wires: Iterable[int] | None = None,
    packed_oracle: PackedOracle | None = None,
) -> VerifyReport:
    """Check a circuit against an oracle on every assignment of the free wires.

    Free wires default to all non-ancilla wires; ancilla wires are fixed to
    0 and checked to end at 0.  Non-free data wires are also fixed to 0.
    Capped at ``EXHAUSTIVE_WIRE_CAP`` free wires.
    """
    free = _resolve_free(circuit, free_wires)
    if len(free) > EXHAUSTIVE_WIRE_CAP:
        raise ValueError(
            f"{len(free)} free wires exceed the exhaustive cap of {EXHAUSTIVE_WIRE_CAP}"
        )
    cols = _enumeration_columns(circuit, free)
    return _check_columns(circuit, cols, 1 << len(free), oracle, packed_oracle, None)


def verify_random(
    circuit: Circuit,
    oracle: Oracle | None = None,
    trials: int = 1000,
    seed: int = 0,
    free_wires: Iterable[int] | None = None,
    packed_oracle: PackedOracle | None = None,
) -> VerifyReport:
    """Check a circuit against an oracle on seeded random inputs.

    Inputs are drawn from the splitmix64 stream over ``seed`` (see
    ``_random_columns`` for the exact bit assignment), so identical seeds
    give identical trial sequences and byte-identical reports.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    free = _resolve_free(circuit, free_wires)
    cols = _random_columns(circuit, free, trials, seed)
    return _check_columns(circuit, cols, trials, oracle, packed_oracle, seed)
