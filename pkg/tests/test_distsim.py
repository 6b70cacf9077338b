import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from distillery.addergen import generate_adder
from distillery.distsim import (
    DistilleryState, EventKind, PoolState, SimConfig, TraceMismatch, annotate, empty_step,
    max_occupancy, peak_step, pool_state, simulate,
)
from distillery.scheduler import parse_schedule, schedule_asap, serialize_t
from distsim_reference import reference

CAPACITIES = (1, 2, 3, None)


def demand_vectors(max_len=12, max_t=4):
    """Every per-step demand vector up to max_len steps with at most max_t T states."""
    def rec(prefix, budget, left):
        yield tuple(prefix)
        if left == 0:
            return
        for d in range(budget + 1):
            yield from rec(prefix + [d], budget - d, left - 1)
    seen = set()
    for v in rec([], max_t, max_len):
        if v not in seen:
            seen.add(v)
            yield v


def as_tuple(trace):
    rows = [(r.step, r.occupancy, r.produced, r.consumed, r.state.value) for r in trace.records]
    events = [(e.step, e.kind.value) for e in trace.events]
    return rows, events, trace.final_depth, list(trace.executed_at)


def test_exhaustive_against_reference(from_demand):
    count = 0
    for demand in demand_vectors():
        s = from_demand(demand)
        for cap in CAPACITIES:
            for dist_t in (1, 3):
                got = as_tuple(simulate(s, SimConfig(capacity=cap, dist_t=dist_t)))
                ref = reference(demand, cap, dist_t)
                assert got == (list(ref.rows), ref.events, ref.final_depth, ref.executed_at), (demand, cap, dist_t)
                count += 1
    assert count > 40_000


def test_single_t_at_step_zero(from_demand):
    tr = simulate(from_demand([1]), SimConfig(capacity=None))
    assert tr.delays == 3
    assert tr.final_depth == 4
    assert tr.executed_at == (3,)
    assert tr.events_of(EventKind.DISTILL_OFF) == [2]


def test_no_t_demand(from_demand):
    tr = simulate(from_demand([0, 0, 0]), SimConfig(capacity=2))
    assert tr.delays == 0 and tr.final_depth == 3
    assert max_occupancy(tr) == 0
    assert peak_step(tr) is None and empty_step(tr) is None
    assert all(r.state is DistilleryState.STOPPED for r in tr.records)


def test_capacity_one_restarts(from_demand):
    # T every 4th step: pool refills to 1, stops, restarts on each take
    demand = [0, 0, 0, 1, 0, 0, 1, 0, 0, 1]
    tr = simulate(from_demand(demand), SimConfig(capacity=1))
    assert tr.delays == 0
    on, off = tr.events_of(EventKind.DISTILL_ON), tr.events_of(EventKind.DISTILL_OFF)
    assert off[0] == 2 and on[0] == 3
    assert len(off) == 3


def test_pool_state():
    assert pool_state(0, 7) is PoolState.EMPTY
    assert pool_state(7, 7) is PoolState.FULL
    assert pool_state(3, 7) is PoolState.ACCEPTING
    assert pool_state(500, None) is PoolState.ACCEPTING


@pytest.mark.parametrize("kw", [dict(dist_t=0), dict(capacity=0), dict(total_to_distill=-1)])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        SimConfig(**kw)


demands = st.lists(st.integers(0, 2), min_size=0, max_size=40)


@settings(max_examples=150, deadline=None)
@given(demands, st.sampled_from(CAPACITIES), st.integers(1, 4))
def test_conservation_and_bound(from_demand, demand, cap, dist_t):
    tr = simulate(from_demand(demand), SimConfig(capacity=cap, dist_t=dist_t))
    for r in tr.records:
        assert r.produced - r.consumed == r.occupancy
        if cap is not None:
            assert r.occupancy <= cap
    if demand:
        assert tr.records[-1].consumed == sum(demand)
    assert tr.final_depth == len(demand) + tr.delays


def test_capacity_monotone_sweep(from_demand):
    rng = random.Random(20261019)
    for _ in range(200):
        demand = [rng.choice((0, 0, 0, 1, 1, 2)) for _ in range(rng.randint(1, 60))]
        s = from_demand(demand)
        depths = [simulate(s, SimConfig(capacity=c)).final_depth for c in (1, 2, 3, 5, 8, None)]
        assert depths == sorted(depths, reverse=True), demand


def test_annotate_roundtrip():
    s = serialize_t(schedule_asap(generate_adder(4)))
    tr = simulate(s, SimConfig(capacity=2))
    text = annotate(s, tr)
    assert "distillOff" in text
    back = parse_schedule(text)
    assert len(back.source.gates) == len(s.source.gates)
    other = serialize_t(schedule_asap(generate_adder(5)))
    with pytest.raises(TraceMismatch):
        annotate(other, tr)


def test_trace_csv_header(from_demand):
    tr = simulate(from_demand([0, 1]), SimConfig())
    lines = tr.to_csv().splitlines()
    assert lines[0] == "step,occupancy,produced,consumed,state"
    assert len(lines) == tr.final_depth + 1
    assert tr.events_csv().startswith("step,event\n")
