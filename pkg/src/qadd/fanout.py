"""Broadcast of one source bit into t targets using bounded-length fan-out gates.

A fan-out gate of length t XORs its source into t targets in one layer.
When only gates of length <= f are available, the same operation is
synthesized as U^-1 . CNOT(source -> root) . U where U is an f-ary
fan-out tree over the targets rooted at targets[0].  Over GF(2), U maps
the root's unit vector to the all-ones vector, so conjugating the single
injection by U adds the source bit to every target while each target's
initial value cancels.  No ancilla wires are needed.
"""

from __future__ import annotations

from typing import Iterable

from .circuit import Circuit, Gate, cx, fo


def fanout_tree_gates(source: int, targets: tuple[int, ...], f: int) -> list[Gate]:
    t = len(targets)
    if f == 1:
        # degenerate case: a CNOT chain of depth t
        return [cx(source, w) for w in targets]
    if t <= f:
        return [fo(source, targets)]
    up: list[Gate] = []
    covered = 1  # targets[0] is the tree root
    while covered < t:
        snapshot = covered
        for idx in range(snapshot):
            if covered >= t:
                break
            take = min(f, t - covered)
            up.append(fo(targets[idx], targets[covered : covered + take]))
            covered += take
    down = list(reversed(up))
    return down + [cx(source, targets[0])] + up


def synth_fanout_tree(source: int, targets: Iterable[int], f: int) -> Circuit:
    """Circuit equivalent to one length-t fan-out from ``source``.

    Every emitted gate has fan-out length <= f.  For f >= 2 the depth is
    at most 2*ceil(log_f(t)) + 1 and the size at most
    2*ceil((t-1)/(f-1)) + 1; f = 1 falls back to a depth-t CNOT chain.
    The circuit is its own inverse.
    """
    targets = tuple(int(w) for w in targets)
    if not targets:
        raise ValueError("need at least one target")
    if f < 1:
        raise ValueError("fan-out length bound must be >= 1")
    wires = (source,) + targets
    if len(set(wires)) != len(wires):
        raise ValueError("source and targets must be pairwise distinct")
    circuit = Circuit(max(wires) + 1)
    circuit.extend(fanout_tree_gates(source, targets, f))
    return circuit
