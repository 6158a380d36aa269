import json

import pytest

from qadd import (
    Circuit,
    apply_gate,
    build_circuit,
    ccx,
    cx,
    fo,
    run,
    run_packed,
    splitmix64,
    synth_ripple,
    tg,
    verify_exhaustive,
    verify_random,
    x,
)
from qadd.oracles import adder_oracle
from qadd.sim import _enumeration_columns, _random_columns


def test_apply_gate_fanout():
    # source y=1 flips every target
    state = [0, 1, 0, 1]  # wires: x0, src, x1, x2
    out = apply_gate(state, fo(1, [0, 2, 3]))
    assert out == [1, 1, 1, 0]
    assert state == [0, 1, 0, 1]  # input untouched


def test_apply_gate_gen_toffoli():
    assert apply_gate([1, 1, 1, 0], tg([0, 1, 2], 3)) == [1, 1, 1, 1]
    assert apply_gate([1, 0, 1, 0], tg([0, 1, 2], 3)) == [1, 0, 1, 0]


def test_apply_gate_toffoli_needs_both_controls():
    assert apply_gate([1, 0, 1], ccx(0, 1, 2)) == [1, 0, 1]
    assert apply_gate([1, 1, 1], ccx(0, 1, 2)) == [1, 1, 0]


def test_apply_gate_range_check():
    with pytest.raises(ValueError):
        apply_gate([0, 1], ccx(0, 1, 2))


def test_run_empty_is_identity():
    state = [1, 0, 1]
    assert run(build_circuit(3), state) == state


def test_run_ripple_n2():
    # a = 11b, b = 01b, z = 0: sum 100b
    c = synth_ripple(2)
    state = [0] * 5
    state[1], state[3] = 1, 1  # A0, A1
    state[0] = 1  # B0
    out = run(c, state)
    assert (out[0], out[2]) == (0, 0)  # B holds low sum bits
    assert out[4] == 1  # Z picked up s_2
    assert (out[1], out[3]) == (1, 1)  # A restored


def test_run_rejects_nonzero_ancilla():
    c = Circuit(3, ancilla={2}, gates=[cx(0, 1)])
    with pytest.raises(ValueError):
        run(c, [0, 0, 1])


def test_run_length_mismatch():
    with pytest.raises(ValueError):
        run(build_circuit(3), [0, 0])


def test_run_then_inverse_is_identity_on_random_circuit():
    # seeded random circuit over 16 wires mixing all five gate kinds
    gen = splitmix64(123)
    c = build_circuit(16)
    for _ in range(200):
        w = next(gen)
        a, b, t = w % 16, (w >> 8) % 16, (w >> 16) % 16
        pick = (w >> 24) % 5
        if pick == 0 and a != t:
            c.append(cx(a, t))
        elif pick == 1 and len({a, b, t}) == 3:
            c.append(ccx(a, b, t))
        elif pick == 2:
            c.append(fo(a, [q for q in range(16) if q != a][: 1 + b % 6]))
        elif pick == 3 and a != t:
            c.append(tg([a], t))
        else:
            c.append(x(t))
    both = Circuit(16, gates=c.gates + c.inverse().gates)
    cols = _random_columns(both, list(range(16)), 500, seed=6)
    assert run_packed(both, cols, 500) == cols


def test_run_is_bijection():
    # seeded scramble over 12 wires: outputs must form a permutation
    width = 12
    gen = splitmix64(77)
    c = build_circuit(width)
    for _ in range(150):
        w = next(gen)
        a, b, t = w % width, (w >> 8) % width, (w >> 16) % width
        if len({a, b, t}) == 3:
            c.append(ccx(a, b, t))
        elif a != t:
            c.append(cx(a, t))
    cols = _enumeration_columns(c, list(range(width)))
    out = run_packed(c, cols, 1 << width)
    images = set()
    for case in range(1 << width):
        images.add(tuple((out[w] >> case) & 1 for w in range(width)))
    assert len(images) == 1 << width


def test_splitmix64_reference_vectors():
    gen = splitmix64(0)
    assert [next(gen) for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_enumeration_columns_cover_all_cases():
    c = build_circuit(3)
    cols = _enumeration_columns(c, [0, 1, 2])
    for case in range(8):
        bits = tuple((cols[w] >> case) & 1 for w in range(3))
        assert bits == (case & 1, (case >> 1) & 1, (case >> 2) & 1)


def test_verify_exhaustive_cap():
    c = build_circuit(25)
    with pytest.raises(ValueError):
        verify_exhaustive(c, oracle=lambda s: s)


def test_verify_rejects_ancilla_in_free_set():
    c = Circuit(2, ancilla={1})
    with pytest.raises(ValueError):
        verify_exhaustive(c, oracle=lambda s: s, free_wires=[1])


def test_verify_needs_an_oracle():
    with pytest.raises(ValueError):
        verify_exhaustive(build_circuit(2))


def test_verify_detects_mutation():
    c = synth_ripple(3)
    broken = Circuit(c.wire_count, role_map=c.role_map)
    dropped = False
    for g in c.gates:
        if not dropped and len(g.controls) == 2:
            dropped = True  # remove the first Toffoli
            continue
        broken.append(g)
    _, packed = adder_oracle(broken)
    report = verify_exhaustive(broken, packed_oracle=packed)
    assert not report.ok and len(report.failures) >= 1
    inp, exp, act = report.failures[0]
    assert len(inp) == len(exp) == len(act) == c.wire_count
    assert exp != act


def test_verify_detects_ancilla_violation():
    c = Circuit(2, ancilla={1}, gates=[cx(0, 1)])
    report = verify_exhaustive(c, oracle=lambda s: list(s))
    assert report.ancilla_violations  # the case with wire 0 set leaks into the ancilla


def test_verify_random_determinism():
    c = synth_ripple(16)
    _, packed = adder_oracle(c)
    r1 = verify_random(c, packed_oracle=packed, trials=200, seed=42)
    r2 = verify_random(c, packed_oracle=packed, trials=200, seed=42)
    assert r1.to_json() == r2.to_json()
    r3 = verify_random(c, packed_oracle=packed, trials=200, seed=43)
    assert r3.ok and r3.seed == 43


def test_verify_per_case_and_packed_agree():
    c = synth_ripple(4)
    per, packed = adder_oracle(c)
    r1 = verify_exhaustive(c, oracle=per)
    r2 = verify_exhaustive(c, packed_oracle=packed)
    assert r1.ok and r2.ok and r1.total_cases == r2.total_cases == 1 << 9


def test_report_json_shape():
    c = synth_ripple(2)
    _, packed = adder_oracle(c)
    report = verify_exhaustive(c, packed_oracle=packed)
    payload = json.loads(report.to_json())
    assert payload == {
        "total_cases": 32,
        "failures": [],
        "ancilla_violations": [],
        "seed": None,
    }


def test_random_columns_are_seed_stable():
    c = build_circuit(4)
    a = _random_columns(c, [0, 1, 2, 3], 64, seed=9)
    b = _random_columns(c, [0, 1, 2, 3], 64, seed=9)
    assert a == b and any(a)
