"""Ripple-carry in-place adder with no ancilla wires.

The circuit maps ``|b>|a> |z>``  to  ``|s> |a> |z ^ s_n>`` where
``s = a + b`` as an (n+1)-bit integer, keeping every carry in the wire
that initially stores the corresponding ``a`` bit.  For n >= 3 the exact
counts are: depth 5n-3, size 7n-6, 5n-5 CNOTs, 2n-1 Toffolis, and under
the interleaved line layout no gate spans more than 3 adjacent positions.
"""

from __future__ import annotations

from .circuit import Circuit, Gate, ccx, cx


def maj_fragment(c: int, b: int, a: int) -> list[Gate]:
    """Majority computation: |c>|b>|a> -> |c^a>|b^a>|MAJ(a,b,c)>.

    Two CNOTs followed by one Toffoli; MAJ(a,b,c) = ab ^ bc ^ ca.
    """
    return [cx(a, c), cx(a, b), ccx(c, b, a)]


def ripple_add_gates(b: list[int], a: list[int], z: int) -> list[Gate]:
    """Gate list for the six-step ripple adder on explicit wires.

    ``b[i]``/``a[i]`` are the input registers (bit i), ``z`` receives the
    high carry.  For n in {1, 2} some steps have empty ranges; the circuit
    is still a correct adder there.
    """
    n = len(b)
    if n < 1 or len(a) != n:
        raise ValueError("need two registers of equal positive width")
    aa = list(a) + [z]  # aa[n] holds z
    gates: list[Gate] = []
    # step 1: fold a into b (bit 0 excluded; its carry-in is 0)
    gates += [cx(aa[i], b[i]) for i in range(1, n)]
    # step 2: downward CNOT chain prepares a_i ^ a_{i-1}
    gates += [cx(aa[i], aa[i + 1]) for i in range(n - 1, 0, -1)]
    # step 3: upward Toffoli chain turns those into a_i ^ c_i
    gates += [ccx(b[i], aa[i], aa[i + 1]) for i in range(n)]
    # step 4: fold carries into b while unwinding the carry chain
    for i in range(n - 1, 0, -1):
        gates.append(cx(aa[i], b[i]))
        gates.append(ccx(b[i - 1], aa[i - 1], aa[i]))
    # step 5: undo the step-2 chain
    gates += [cx(aa[i], aa[i + 1]) for i in range(1, n - 1)]
    # step 6: b_i ^ a_i ^ c_i = s_i
    gates += [cx(aa[i], b[i]) for i in range(n)]
    return gates


def adder_first_half_gates(b: list[int], a: list[int], carry_out: int) -> list[Gate]:
    """Steps 1-3 only: computes the block carry-out without the sum.

    Starting from (b, a) with ``carry_out`` expected to hold 0, leaves
    b_0, a_0 unchanged, b_i <- b_i ^ a_i, a_i <- a_i ^ c_i for i >= 1, and
    XORs the full carry c_n into ``carry_out``.  Contains exactly n
    Toffoli gates.
    """
    n = len(b)
    if n < 1 or len(a) != n:
        raise ValueError("need two registers of equal positive width")
    aa = list(a) + [carry_out]
    gates: list[Gate] = []
    gates += [cx(aa[i], b[i]) for i in range(1, n)]
    gates += [cx(aa[i], aa[i + 1]) for i in range(n - 1, 0, -1)]
    gates += [ccx(b[i], aa[i], aa[i + 1]) for i in range(n)]
    return gates


def ripple_wires(n: int) -> tuple[list[int], list[int], int]:
    """Canonical interleaved wire ids: B_i = 2i, A_i = 2i+1, Z = 2n."""
    return [2 * i for i in range(n)], [2 * i + 1 for i in range(n)], 2 * n


def ripple_roles(n: int) -> dict[int, str]:
    b, a, z = ripple_wires(n)
    roles = {b[i]: f"B{i}" for i in range(n)}
    roles.update({a[i]: f"A{i}" for i in range(n)})
    roles[z] = "Z"
    return roles


def synth_ripple(n: int) -> Circuit:
    """Ripple adder over 2n+1 wires (no ancilla)."""
    if n < 1:
        raise ValueError("operand width must be >= 1")
    b, a, z = ripple_wires(n)
    circuit = Circuit(2 * n + 1, ancilla=(), role_map=ripple_roles(n))
    circuit.extend(ripple_add_gates(b, a, z))
    return circuit


def interleaved_layout(circuit: Circuit) -> dict[int, int]:
    """Line layout B_0 A_0 B_1 A_1 ... Z from the circuit's role map.

    Only defined for circuits whose wires are exactly the B_i/A_i registers
    plus Z (the ripple adder); position(B_i)=2i, position(A_i)=2i+1,
    position(Z)=2n.
    """
    by_role = circuit.wires_by_role()
    if not by_role or "Z" not in by_role:
        raise ValueError("circuit has no B/A/Z role map")
    n = (circuit.wire_count - 1) // 2
    if circuit.wire_count != 2 * n + 1:
        raise ValueError("interleaved layout needs 2n+1 wires")
    layout: dict[int, int] = {}
    for i in range(n):
        layout[by_role[f"B{i}"]] = 2 * i
        layout[by_role[f"A{i}"]] = 2 * i + 1
    layout[by_role["Z"]] = 2 * n
    return layout
