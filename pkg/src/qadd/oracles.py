"""Reference semantics for each synthesized operation.

Oracles are written from the defining recurrences (carry = majority,
propagate = XOR chain, generate = AND), never from the gate-level
constructions they are used to check.  Each factory returns a pair
``(per_case, packed)``: the per-case form maps one full-width bit state to
the expected output state, the packed form does the same on bit columns
(one int per wire, bit c = case c).  Both read wire positions from the
circuit's role map, so they are independent of wire-id conventions.
"""

from __future__ import annotations

from typing import Callable

from .circuit import Circuit

PerCase = Callable[[list[int]], list[int]]
Packed = Callable[[list[int], int], list[int]]


def _roles(circuit: Circuit, prefix: str) -> list[int]:
    by_role = circuit.wires_by_role()
    out = []
    i = 0
    while f"{prefix}{i}" in by_role:
        out.append(by_role[f"{prefix}{i}"])
        i += 1
    return out


def adder_oracle(circuit: Circuit) -> tuple[PerCase, Packed]:
    """In-place addition: B <- bits of a+b, Z <- z ^ s_n, A unchanged."""
    b = _roles(circuit, "B")
    a = _roles(circuit, "A")
    z = circuit.wires_by_role()["Z"]
    n = len(b)

    def per_case(state: list[int]) -> list[int]:
        av = sum(state[a[i]] << i for i in range(n))
        bv = sum(state[b[i]] << i for i in range(n))
        s = av + bv
        out = list(state)
        for i in range(n):
            out[b[i]] = (s >> i) & 1
        out[z] = state[z] ^ ((s >> n) & 1)
        for w in circuit.ancilla:
            out[w] = 0
        return out

    def packed(cols: list[int], n_cases: int) -> list[int]:
        out = list(cols)
        carry = 0
        for i in range(n):
            ai, bi = cols[a[i]], cols[b[i]]
            out[b[i]] = ai ^ bi ^ carry
            carry = (ai & bi) | (carry & (ai ^ bi))
        out[z] = cols[z] ^ carry
        for w in circuit.ancilla:
            out[w] = 0
        return out

    return per_case, packed


def first_half_oracle(circuit: Circuit) -> tuple[PerCase, Packed]:
    """Adder steps 1-3: b_i <- b_i^a_i, a_i <- a_i^c_i (i>=1), Z <- z ^ c_n."""
    b = _roles(circuit, "B")
    a = _roles(circuit, "A")
    z = circuit.wires_by_role()["Z"]
    n = len(b)

    def packed(cols: list[int], n_cases: int) -> list[int]:
        out = list(cols)
        carry = 0
        for i in range(n):
            ai, bi = cols[a[i]], cols[b[i]]
            if i >= 1:
                out[b[i]] = bi ^ ai
                out[a[i]] = ai ^ carry
            carry = (ai & bi) | (carry & (ai ^ bi))
        out[z] = cols[z] ^ carry
        return out

    def per_case(state: list[int]) -> list[int]:
        cols = list(state)
        return packed(cols, 1)

    return per_case, packed


def init_oracle(circuit: Circuit) -> tuple[PerCase, Packed]:
    """Block p/g map: B_i <- a_i^b_i, A_i <- a_i^c_i^prefix_i, G <- c_w, P <- prefix_w."""
    b = _roles(circuit, "B")
    a = _roles(circuit, "A")
    by_role = circuit.wires_by_role()
    g, p = by_role["G"], by_role["P"]
    w = len(b)

    def packed(cols: list[int], n_cases: int) -> list[int]:
        ones = (1 << n_cases) - 1
        out = list(cols)
        carry = 0
        prefix = ones
        for i in range(w):
            ai, bi = cols[a[i]], cols[b[i]]
            out[b[i]] = ai ^ bi
            if i >= 1:
                out[a[i]] = ai ^ carry ^ prefix
            carry = (ai & bi) | (carry & (ai ^ bi))
            prefix &= ai ^ bi
        out[g] = cols[g] ^ carry
        out[p] = cols[p] ^ prefix
        return out

    def per_case(state: list[int]) -> list[int]:
        return packed(list(state), 1)

    return per_case, packed


def sum_oracle(circuit: Circuit) -> tuple[PerCase, Packed]:
    """Block sum: B_j <- a_j ^ b_j ^ d_j with d_0 the carry-in wire (or 0)."""
    b = _roles(circuit, "B")
    a = _roles(circuit, "A")
    carry_wire = circuit.wires_by_role().get("C")
    w = len(b)

    def packed(cols: list[int], n_cases: int) -> list[int]:
        out = list(cols)
        d = cols[carry_wire] if carry_wire is not None else 0
        for j in range(w):
            aj, bj = cols[a[j]], cols[b[j]]
            out[b[j]] = aj ^ bj ^ d
            d = (aj & bj) | (d & (aj ^ bj))
        return out

    def per_case(state: list[int]) -> list[int]:
        return packed(list(state), 1)

    return per_case, packed


def carry_fold_oracle(circuit: Circuit) -> tuple[PerCase, Packed]:
    """Prefix generate fold: out g_j = g_j ^ (prefix_{j-1} & p_j)."""
    g = _roles(circuit, "G")
    by_role = circuit.wires_by_role()
    m = len(g)
    p = [None] + [by_role[f"P{i}"] for i in range(1, m)]

    def packed(cols: list[int], n_cases: int) -> list[int]:
        out = list(cols)
        prefix = cols[g[0]]
        for j in range(1, m):
            prefix = cols[g[j]] ^ (prefix & cols[p[j]])
            out[g[j]] = prefix
        for w in circuit.ancilla:
            out[w] = 0
        return out

    def per_case(state: list[int]) -> list[int]:
        return packed(list(state), 1)

    return per_case, packed


def fanout_oracle(
    circuit: Circuit, source: int, targets: list[int]
) -> tuple[PerCase, Packed]:
    """Length-t fan-out: every target XORed with the source bit."""

    def packed(cols: list[int], n_cases: int) -> list[int]:
        out = list(cols)
        src = cols[source]
        for t in targets:
            out[t] = cols[t] ^ src
        return out

    def per_case(state: list[int]) -> list[int]:
        return packed(list(state), 1)

    return per_case, packed
