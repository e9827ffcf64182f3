"""Two-bit Boolean re-encoding of the ternary dynamics.

Each vertex v becomes a pair of bits, v_on ("currently active") and v_off
("currently inactive"); (0, 0) encodes ambiguity and (1, 1) encodes
nothing.  The bit update rules are monotone two-level formulas that mirror
the unanimous rule, so stepping the Boolean network commutes with the
encoding.  This gives an independent evaluator to cross-check the ternary
engine against, plus an export path to BoolNet-style rule files.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import RegulatoryGraph, TernaryState, step
from .dynamics import DEFAULT_STATE_LIMIT, enumerate_states
from .errors import InvalidCodeError


def bit_names(vertex: str):
    """The (active bit, inactive bit) variable names for a vertex."""
    return vertex + "_on", vertex + "_off"


class BooleanState(tuple):
    """Bit assignment in the network's variable order."""

    __slots__ = ()

    def __new__(cls, bits):
        vals = tuple(int(b) for b in bits)
        for b in vals:
            if b not in (0, 1):
                raise ValueError(f"bits must be 0 or 1, got {b!r}")
        return tuple.__new__(cls, vals)


@dataclass(frozen=True)
class BitRule:
    """(any of or_terms) and (all of and_terms); constants for clamped bits.

    An empty disjunction is false and an empty conjunction is true, but
    unclamped rules always carry the bit's own name in `or_terms`.
    """

    target: str
    or_terms: tuple = ()
    and_terms: tuple = ()
    constant: bool | None = None

    def formula(self) -> str:
        if self.constant is not None:
            return "1" if self.constant else "0"
        left = " | ".join(self.or_terms)
        if not self.and_terms:
            return left
        if len(self.or_terms) > 1:
            left = f"({left})"
        return " & ".join([left, *self.and_terms])


@dataclass(frozen=True)
class BooleanNetwork:
    vertex_names: tuple
    variables: tuple
    rules: tuple

    @property
    def n_bits(self) -> int:
        return len(self.variables)


def encode_network(graph: RegulatoryGraph) -> BooleanNetwork:
    """Bit-pair update rules mirroring the ternary step of `graph`.

    For a vertex v with activator set U+ and inhibitor set U-:

        v_on'  = (v_on  | any u_on for u in U+) & all u_off for u in U-
        v_off' = (v_off | any u_on for u in U-) & all u_off for u in U+

    Clamped vertices compile to constant rules.
    """
    names = graph.vertices
    variables = []
    rules = []
    for i, name in enumerate(names):
        on, off = bit_names(name)
        variables += [on, off]
        clamp = graph.clamps.get(i)
        if clamp is not None:
            rules.append(BitRule(on, constant=clamp == 1))
            rules.append(BitRule(off, constant=clamp == -1))
            continue
        activators = graph.activation_in[i]
        inhibitors = graph.inhibition_in[i]
        rules.append(
            BitRule(
                on,
                or_terms=(on, *(bit_names(names[u])[0] for u in activators)),
                and_terms=tuple(bit_names(names[u])[1] for u in inhibitors),
            )
        )
        rules.append(
            BitRule(
                off,
                or_terms=(off, *(bit_names(names[u])[0] for u in inhibitors)),
                and_terms=tuple(bit_names(names[u])[1] for u in activators),
            )
        )
    return BooleanNetwork(
        vertex_names=names, variables=tuple(variables), rules=tuple(rules)
    )


_CODE = {1: (1, 0), -1: (0, 1), 0: (0, 0)}


def encode_state(state) -> BooleanState:
    """Ternary state to bit pairs: 1 -> (1,0), -1 -> (0,1), 0 -> (0,0)."""
    st = state if isinstance(state, TernaryState) else TernaryState(state)
    bits = []
    for v in st:
        bits += _CODE[v]
    return BooleanState(bits)


def decode_state(bits) -> TernaryState:
    """Invert :func:`encode_state`; rejects the (1, 1) code."""
    bs = bits if isinstance(bits, BooleanState) else BooleanState(bits)
    if len(bs) % 2:
        raise ValueError(f"bit count must be even, got {len(bs)}")
    values = []
    for k in range(0, len(bs), 2):
        pair = (bs[k], bs[k + 1])
        if pair == (1, 0):
            values.append(1)
        elif pair == (0, 1):
            values.append(-1)
        elif pair == (0, 0):
            values.append(0)
        else:
            raise InvalidCodeError(
                f"bit pair {k // 2} is (1, 1), which encodes no ternary value"
            )
    return TernaryState(values)


def bn_step(network: BooleanNetwork, bstate) -> BooleanState:
    """Evaluate every bit rule against the same input state."""
    bs = bstate if isinstance(bstate, BooleanState) else BooleanState(bstate)
    if len(bs) != network.n_bits:
        raise ValueError(
            f"state has {len(bs)} bits but the network has {network.n_bits} variables"
        )
    index = {name: k for k, name in enumerate(network.variables)}
    out = []
    for rule in network.rules:
        if rule.constant is not None:
            out.append(int(rule.constant))
            continue
        value = any(bs[index[t]] for t in rule.or_terms) and all(
            bs[index[t]] for t in rule.and_terms
        )
        out.append(int(value))
    return BooleanState(out)


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of a commuting-square check between the two engines."""

    ok: bool
    states_checked: int
    counterexample: tuple | None
    invalid_codes: int


def check_simulation_equivalence(
    graph: RegulatoryGraph,
    samples=None,
    state_limit=DEFAULT_STATE_LIMIT,
    seed=0,
) -> EquivalenceReport:
    """Check encode(step(s)) == bn_step(encode(s)) over the requested coverage.

    With samples=None every clamp-consistent state is checked (subject to
    `state_limit`); otherwise `samples` random clamp-consistent states are
    drawn from `seed`.  Stops at the first counterexample, which is reported
    rather than raised, as (input state, expected successor, produced bits).
    Also counts produced (1, 1) pairs; a correct encoding never emits any.
    """
    network = encode_network(graph)
    if samples is None:
        pool = enumerate_states(graph, state_limit)
    else:
        if samples < 1:
            raise ValueError("samples must be positive")
        rng = random.Random(seed)
        pool = (_random_state(rng, graph) for _ in range(samples))
    checked = 0
    invalid = 0
    for state in pool:
        expected = step(graph, state)
        got = bn_step(network, encode_state(state))
        checked += 1
        for k in range(0, len(got), 2):
            if got[k] and got[k + 1]:
                invalid += 1
        if got != encode_state(expected):
            return EquivalenceReport(False, checked, (state, expected, got), invalid)
    return EquivalenceReport(True, checked, None, invalid)


def _random_state(rng, graph):
    vals = [rng.choice((-1, 0, 1)) for _ in range(graph.n)]
    for i, v in graph.clamps.items():
        vals[i] = v
    return TernaryState(vals)


def to_boolnet(network: BooleanNetwork) -> str:
    """BoolNet-style rule file: one 'target, factors' line per bit variable."""
    lines = ["targets, factors"]
    for rule in network.rules:
        lines.append(f"{rule.target}, {rule.formula()}")
    return "\n".join(lines) + "\n"
