"""Trajectories, explicit transition systems, and attractor enumeration.

The synchronous rule makes the state space a functional graph: every state
has exactly one successor, so the attractors are exactly the cycles and
every state falls into exactly one basin.  Enumeration materializes the
successor table for all clamp-consistent states with vectorized updates,
then colors the functional graph in a single linear pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .core import RegulatoryGraph, TernaryState, apply_clamps, step
from .errors import StateSpaceLimitError, StepBudgetError

# Clamped vertices are pinned, so a graph with c clamps has 3^(n - c)
# reachable states; this caps that count, not 3^n.
DEFAULT_STATE_LIMIT = 3 ** 14


@dataclass(frozen=True)
class Trajectory:
    """A simulated run split at the first recurrence: transient, then cycle."""

    transient: tuple
    cycle: tuple

    @property
    def states(self):
        return self.transient + self.cycle

    @property
    def period(self) -> int:
        return len(self.cycle)

    def attractor(self) -> "Attractor":
        return Attractor.from_cycle(self.cycle)


@dataclass(frozen=True)
class Attractor:
    """A cycle of the step function, stored in successor order.

    The tuple starts at the canonically least state, so equal cycles compare
    and hash equal no matter how they were discovered.
    """

    states: tuple

    @classmethod
    def from_cycle(cls, cycle: Iterable[TernaryState]) -> "Attractor":
        states = tuple(cycle)
        if not states:
            raise ValueError("an attractor needs at least one state")
        k = states.index(min(states))
        return cls(states[k:] + states[:k])

    @property
    def period(self) -> int:
        return len(self.states)

    def __contains__(self, state) -> bool:
        return tuple(state) in self.states


@dataclass(frozen=True)
class TransitionSystem:
    """Explicit successor map over every clamp-consistent state."""

    states: tuple
    successor: Mapping[TernaryState, TernaryState]

    def successor_of(self, state) -> TernaryState:
        return self.successor[TernaryState(state)]

    def transitions(self):
        for s in self.states:
            yield s, self.successor[s]

    def __len__(self) -> int:
        return len(self.states)


def simulate(graph: RegulatoryGraph, start, max_steps=None) -> Trajectory:
    """Iterate the step function from `start` until the first recurrence.

    Clamps are applied to `start` before the first step.  Raises
    StepBudgetError when no state repeats within `max_steps` applications;
    the default budget of 3**n can never be exhausted.
    """
    if max_steps is None:
        max_steps = 3 ** graph.n
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    current = apply_clamps(graph, start)
    states = [current]
    seen = {current: 0}
    for taken in range(1, max_steps + 1):
        current = step(graph, current)
        if current in seen:
            first = seen[current]
            return Trajectory(transient=tuple(states[:first]), cycle=tuple(states[first:]))
        seen[current] = taken
        states.append(current)
    raise StepBudgetError(
        f"no cycle within {max_steps} steps from {states[0]!r}; raise max_steps"
    )


def _free_vertices(graph):
    return [i for i in range(graph.n) if i not in graph.clamps]


def _state_array(graph, state_limit):
    """All clamp-consistent states as an int8 array in canonical order.

    Canonical order is mixed-radix base 3 over the unclamped vertices in
    declaration order, first vertex most significant, digits -1 < 0 < 1.
    It coincides with lexicographic order of the state tuples.
    """
    free = _free_vertices(graph)
    size = 3 ** len(free)
    if size > state_limit:
        raise StateSpaceLimitError(len(free), size, state_limit)
    arr = np.empty((size, graph.n), dtype=np.int8)
    for i, value in graph.clamps.items():
        arr[:, i] = value
    codes = np.arange(size, dtype=np.int64)
    for j, i in enumerate(free):
        stride = 3 ** (len(free) - 1 - j)
        arr[:, i] = (codes // stride) % 3 - 1
    return arr, free


def _batch_step(graph, arr):
    """Vectorized synchronous update of every row of `arr`."""
    rows = arr.shape[0]
    out = np.empty_like(arr)
    no_flags = np.zeros(rows, dtype=bool)
    for i in range(graph.n):
        clamp = graph.clamps.get(i)
        if clamp is not None:
            out[:, i] = clamp
            continue
        act = list(graph.activation_in[i])
        inh = list(graph.inhibition_in[i])
        if act:
            sub = arr[:, act]
            act_active = (sub == 1).any(axis=1)
            act_ambiguous = (sub == 0).any(axis=1)
        else:
            act_active = act_ambiguous = no_flags
        if inh:
            sub = arr[:, inh]
            inh_active = (sub == 1).any(axis=1)
            inh_ambiguous = (sub == 0).any(axis=1)
        else:
            inh_active = inh_ambiguous = no_flags
        cur = arr[:, i]
        pos = (act_active | (cur == 1)) & ~inh_active & ~inh_ambiguous
        neg = (inh_active | (cur == -1)) & ~act_active & ~act_ambiguous
        out[:, i] = np.where(pos, 1, np.where(neg, -1, 0))
    return out


def _canonical_indices(graph, arr, free):
    if not free:
        return np.zeros(arr.shape[0], dtype=np.int64)
    weights = 3 ** np.arange(len(free) - 1, -1, -1, dtype=np.int64)
    digits = arr[:, list(free)].astype(np.int64) + 1
    return digits @ weights


def _functional_cycles(succ):
    """Cycles of a functional graph given as a successor list.

    Single pass with three colors per node (unseen, on the current path,
    resolved); linear in the node count.  Returns the cycles, each in
    successor order, plus every node's attractor id.
    """
    n = len(succ)
    attr_of = [-1] * n
    pos = [-1] * n
    cycles = []
    for start in range(n):
        if attr_of[start] >= 0:
            continue
        path = []
        s = start
        while True:
            a = attr_of[s]
            if a >= 0:
                break
            p = pos[s]
            if p >= 0:
                a = len(cycles)
                cycles.append(path[p:])
                break
            pos[s] = len(path)
            path.append(s)
            s = succ[s]
        for t in path:
            attr_of[t] = a
    return cycles, attr_of


def enumerate_states(graph: RegulatoryGraph, state_limit=DEFAULT_STATE_LIMIT):
    """Every clamp-consistent state, in canonical order."""
    arr, _ = _state_array(graph, state_limit)
    return [TernaryState(row) for row in arr]


def enumerate_attractors(graph: RegulatoryGraph, state_limit=DEFAULT_STATE_LIMIT):
    """Every attractor of the clamp-consistent state space.

    Returns a list sorted by each attractor's least state; refuses with
    StateSpaceLimitError when 3^(free vertices) exceeds `state_limit`.
    """
    arr, free = _state_array(graph, state_limit)
    succ = _canonical_indices(graph, _batch_step(graph, arr), free)
    cycles, _ = _functional_cycles(succ.tolist())
    attractors = [
        Attractor.from_cycle(TernaryState(arr[k]) for k in cycle) for cycle in cycles
    ]
    attractors.sort(key=lambda a: a.states[0])
    return attractors


def build_sts(graph: RegulatoryGraph, state_limit=DEFAULT_STATE_LIMIT) -> TransitionSystem:
    """Materialize the full transition system (states plus successor map)."""
    arr, free = _state_array(graph, state_limit)
    succ = _canonical_indices(graph, _batch_step(graph, arr), free)
    states = tuple(TernaryState(row) for row in arr)
    successor = {states[i]: states[j] for i, j in enumerate(succ.tolist())}
    return TransitionSystem(states=states, successor=successor)


def _normalized_state_set(graph, states):
    pool = set()
    for s in states:
        st = s if isinstance(s, TernaryState) else TernaryState(s)
        if len(st) != graph.n:
            raise ValueError(f"state has {len(st)} values but the graph has {graph.n} vertices")
        for i, value in graph.clamps.items():
            if st[i] != value:
                raise ValueError(
                    f"state {st!r} violates the clamp on {graph.vertices[i]}"
                )
        pool.add(st)
    if not pool:
        raise ValueError("the state set must be non-empty")
    return pool


def is_trap_set(graph: RegulatoryGraph, states) -> bool:
    """True when the state set is closed under the step function."""
    pool = _normalized_state_set(graph, states)
    return all(step(graph, s) in pool for s in pool)


def is_attractor(graph: RegulatoryGraph, states) -> bool:
    """True when the states form exactly one cycle of the step function.

    Under a deterministic step this is the same as being a minimal
    non-empty trap set.
    """
    pool = _normalized_state_set(graph, states)
    if not all(step(graph, s) in pool for s in pool):
        return False
    start = min(pool)
    visited = 1
    current = step(graph, start)
    while current != start:
        visited += 1
        if visited > len(pool):
            return False
        current = step(graph, current)
    return visited == len(pool)
