"""Shared test machinery: state-space walks, random corpora, brute-force oracle."""

import itertools

from srg import Phenotype, RegulatoryGraph, TernaryState, simulate


def clamp_consistent_states(graph):
    """Every clamp-consistent state, canonical (lexicographic) order."""
    free = [i for i in range(graph.n) if i not in graph.clamps]
    for combo in itertools.product((-1, 0, 1), repeat=len(free)):
        values = [0] * graph.n
        for i, v in graph.clamps.items():
            values[i] = v
        for i, v in zip(free, combo):
            values[i] = v
        yield TernaryState(values)


def brute_force_attractors(graph):
    """Oracle independent of the vectorized engine: simulate from every state."""
    found = {}
    for state in clamp_consistent_states(graph):
        attractor = simulate(graph, state).attractor()
        found[attractor.states] = attractor
    return sorted(found.values(), key=lambda a: a.states[0])


def random_graph(rng, n=None, density=0.2, clamp_chance=0.0):
    """A random signed graph; each ordered pair (self-loops included) gets an
    activating or inhibiting edge with probability density/2 each."""
    if n is None:
        n = rng.randint(2, 7)
    names = [f"v{i}" for i in range(n)]
    activation, inhibition = [], []
    for u in range(n):
        for v in range(n):
            r = rng.random()
            if r < density / 2:
                activation.append((u, v))
            elif r < density:
                inhibition.append((u, v))
    clamps = {}
    for name in names:
        if rng.random() < clamp_chance:
            clamps[name] = rng.choice((-1, 1))
    return RegulatoryGraph(names, activation, inhibition, clamps)


def random_state(rng, graph):
    values = [rng.choice((-1, 0, 1)) for _ in range(graph.n)]
    for i, v in graph.clamps.items():
        values[i] = v
    return TernaryState(values)


def random_phenotype(rng, graph, max_targets=None):
    upper = min(max_targets or graph.n, graph.n)
    k = rng.randint(1, upper)
    picked = sorted(rng.sample(range(graph.n), k))
    return Phenotype({graph.vertices[i]: rng.choice((-1, 1)) for i in picked})
