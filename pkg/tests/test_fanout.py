import math

import pytest

from qadd import GateKind, compute_stats, synth_fanout_tree, verify_exhaustive, verify_random
from qadd.oracles import fanout_oracle
from qadd.sim import _random_columns, run_packed


def _tree(t, f):
    targets = list(range(1, t + 1))
    return synth_fanout_tree(0, targets, f), targets


@pytest.mark.parametrize("t", range(1, 13))
@pytest.mark.parametrize("f", [1, 2, 3, 4, 8])
def test_equivalence_exhaustive(t, f):
    c, targets = _tree(t, f)
    _, packed = fanout_oracle(c, 0, targets)
    assert verify_exhaustive(c, packed_oracle=packed).ok


@pytest.mark.parametrize("t", [64])
@pytest.mark.parametrize("f", [1, 2, 3, 4, 8])
def test_equivalence_random(t, f):
    c, targets = _tree(t, f)
    _, packed = fanout_oracle(c, 0, targets)
    assert verify_random(c, packed_oracle=packed, trials=256, seed=21).ok


def test_single_gate_when_targets_fit():
    c, _ = _tree(4, 8)
    assert len(c.gates) == 1 and c.gates[0].kind is GateKind.FANOUT
    assert compute_stats(c).depth == 1


def test_depth_and_size_bounds():
    for t in (4, 13, 64, 1024):
        for f in (2, 3, 4, 16):
            c, _ = _tree(t, f)
            st = compute_stats(c)
            assert st.depth <= 2 * math.ceil(math.log(t, f)) + 1
            assert st.size <= 2 * math.ceil((t - 1) / (f - 1)) + 1
            assert st.ancilla_count == 0
            assert st.max_fanout_length <= f


def test_big_tree_bound_example():
    c, _ = _tree(1024, 16)
    assert compute_stats(c).depth <= 7


def test_chain_fallback_at_f1():
    c, _ = _tree(6, 1)
    st = compute_stats(c)
    assert st.depth == 6 and st.size == 6 and st.count_cnot == 6


def test_self_inverse():
    c, _ = _tree(37, 3)
    cols = _random_columns(c, list(range(c.wire_count)), 128, seed=2)
    assert run_packed(c, run_packed(c, cols, 128), 128) == cols


def test_validation():
    with pytest.raises(ValueError):
        synth_fanout_tree(0, [], 2)
    with pytest.raises(ValueError):
        synth_fanout_tree(0, [1, 1], 2)
    with pytest.raises(ValueError):
        synth_fanout_tree(0, [0, 1], 2)  # source among targets
    with pytest.raises(ValueError):
        synth_fanout_tree(0, [1], 0)
