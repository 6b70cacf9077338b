import pytest
from hypothesis import given, settings

from distillery.addergen import generate_adder
from distillery.gatelist import Gate, GateKind, GateList, GateListError, t_count
from distillery.scheduler import (
    depth, parse_schedule, schedule_asap, serialize_schedule, serialize_t, t_distribution,
)
from strategies import gate_lists


def G(kind, *qs):
    return Gate(kind, qs)


def test_asap_examples():
    chain = GateList(3, (G(GateKind.CNOT, 0, 1), G(GateKind.CNOT, 1, 2)))
    assert depth(schedule_asap(chain)) == 2
    assert depth(schedule_asap(GateList(2, (G(GateKind.H, 0), G(GateKind.H, 1))))) == 1
    assert depth(schedule_asap(GateList(1))) == 0
    assert depth(schedule_asap(GateList(1, (G(GateKind.H, 0),)))) == 1


def test_two_parallel_t():
    s = schedule_asap(GateList(2, (G(GateKind.T, 0), G(GateKind.T, 1))))
    assert t_distribution(s).per_step == (2,)
    ser = serialize_t(s)
    assert depth(ser) == 2
    assert t_distribution(ser).max_parallel == 1


def test_serial_fixed_point():
    s = schedule_asap(GateList(1, (G(GateKind.T, 0), G(GateKind.H, 0), G(GateKind.T, 0))))
    assert serialize_t(s).steps == s.steps


def test_keeps_longest_tail():
    # q1's T has a follower, so it stays; q0's T moves
    gl = GateList(2, (G(GateKind.T, 0), G(GateKind.T, 1), G(GateKind.H, 1)))
    ser = serialize_t(schedule_asap(gl))
    assert ser.step_of() == [1, 0, 1]


def test_ripple():
    gl = GateList(2, (G(GateKind.T, 0), G(GateKind.T, 1), G(GateKind.H, 0), G(GateKind.H, 0)))
    ser = serialize_t(schedule_asap(gl))
    assert ser.step_of() == [0, 1, 1, 2]


def test_adder3_serialization():
    s = schedule_asap(generate_adder(3))
    assert t_distribution(s).max_parallel == 2
    ser = serialize_t(s)
    assert t_distribution(ser).max_parallel == 1
    assert depth(ser) == depth(s)


def test_clifford_distribution_zero():
    gl = GateList(2, (G(GateKind.H, 0), G(GateKind.CNOT, 0, 1)))
    assert set(t_distribution(schedule_asap(gl)).per_step) == {0}
    assert t_distribution(schedule_asap(gl)).to_csv().splitlines()[0] == "step,t_count"


def per_qubit(s):
    seq = {}
    for t in range(len(s.steps)):
        for g in s.gates_at(t):
            for q in g.operands:
                seq.setdefault(q, []).append(g)
    return seq


def check_valid(s, gl):
    for t in range(len(s.steps)):
        used = [q for g in s.gates_at(t) for q in g.operands]
        assert len(used) == len(set(used))
    orig = {}
    for g in gl.gates:
        for q in g.operands:
            orig.setdefault(q, []).append(g)
    assert per_qubit(s) == orig
    assert sum(t_distribution(s).per_step) == t_count(gl)


@settings(max_examples=150, deadline=None)
@given(gate_lists(max_qubits=5, max_gates=30))
def test_schedule_properties(gl):
    s = schedule_asap(gl)
    check_valid(s, gl)
    assert schedule_asap(gl) == s
    ser = serialize_t(s)
    check_valid(ser, gl)
    assert t_distribution(ser).max_parallel <= 1
    assert depth(ser) >= depth(s)
    assert ser.t_serialized


@settings(max_examples=100, deadline=None)
@given(gate_lists(max_qubits=5, max_gates=30))
def test_schedule_text_roundtrip(gl):
    s = serialize_t(schedule_asap(gl))
    back = parse_schedule(serialize_schedule(s))
    assert serialize_schedule(back) == serialize_schedule(s)
    assert depth(back) == depth(s)


def test_parse_schedule_conflict():
    with pytest.raises(GateListError):
        parse_schedule("qubits 2\n@0 h q0\n@0 cnot q0 q1")
    with pytest.raises(GateListError):
        parse_schedule("qubits 2\nh q0")


def test_adder_depth_preserved():
    for n in (3, 64, 128):
        s = schedule_asap(generate_adder(n))
        assert depth(serialize_t(s)) == depth(s) == 18 * n - 16
