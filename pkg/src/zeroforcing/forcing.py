"""The color-change rule, derived sets, and chronological lists of forces.

This is the reference implementation on Python bitmasks. It is not the
solver's hot path (see ``_kernels``); its job is to be obviously right and
to produce deterministic chronologies for the proof machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import GraphError
from .graph import Graph, iter_bits, mask_of


@dataclass(frozen=True)
class ColorState:
    """Black vertex set of a two-coloring of ``graph``."""

    graph: Graph
    black: frozenset

    def __post_init__(self):
        for v in self.black:
            self.graph._check(v)

    @property
    def white(self) -> frozenset:
        return frozenset(range(self.graph.n)) - self.black

    def with_black(self, v: int) -> "ColorState":
        return ColorState(self.graph, self.black | {v})


@dataclass(frozen=True)
class ForceEvent:
    forcer: int
    forced: int
    step: int


@dataclass(frozen=True)
class Chronology:
    initial: frozenset
    events: tuple = field(default=())

    @property
    def t(self) -> int:
        return len(self.events)

    @property
    def forcers(self) -> list[int]:
        return [e.forcer for e in self.events]

    @property
    def forced(self) -> list[int]:
        return [e.forced for e in self.events]

    def to_json(self) -> dict:
        return {
            "initial": sorted(self.initial),
            "events": [[e.forcer, e.forced] for e in self.events],
        }


def _unique_white(g: Graph, v: int, black: int) -> Optional[int]:
    white = g.masks[v] & ~black
    if white and not white & (white - 1):
        return white.bit_length() - 1
    return None


def eligible_forces(g: Graph, state: ColorState | Iterable[int]) -> list[tuple[int, int]]:
    """All ``(forcer, forced)`` pairs allowed by the color-change rule, sorted."""
    black_set = state.black if isinstance(state, ColorState) else state
    black = mask_of(black_set)
    out = []
    for v in iter_bits(black):
        u = _unique_white(g, v, black)
        if u is not None:
            out.append((v, u))
    return out


def closure_mask(g: Graph, black: int) -> int:
    """Derived set of ``black`` (bitmask in, bitmask out)."""
    masks = g.masks
    active = black
    while active:
        nxt = 0
        for v in iter_bits(active):
            white = masks[v] & ~black
            if white and not white & (white - 1):
                black |= white
                nxt |= white
                # the forced vertex and its neighbors may now be able to force
                nxt |= masks[white.bit_length() - 1] & black
        # a black vertex's white count only drops when a neighbor turns black
        active = nxt
    return black


def derived_set(g: Graph, s: Iterable[int]) -> tuple[frozenset, Chronology]:
    """Closure of ``s`` and its canonical chronology.

    One force per step: the eligible pair with the smallest forcer wins,
    ties going to the smallest forced vertex. The closure does not depend
    on this choice; the chronology does.
    """
    initial = frozenset(s)
    for v in initial:
        g._check(v)
    black = mask_of(initial)
    masks = g.masks
    events = []
    while True:
        chosen = None
        for v in iter_bits(black):
            white = masks[v] & ~black
            if white and not white & (white - 1):
                chosen = (v, white.bit_length() - 1)
                break
        if chosen is None:
            break
        x, y = chosen
        black |= 1 << y
        events.append(ForceEvent(x, y, len(events) + 1))
    return frozenset(iter_bits(black)), Chronology(initial, tuple(events))


def is_zero_forcing_set(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    if m & ~g.full_mask:
        raise GraphError("vertex set not contained in the graph")
    return closure_mask(g, m) == g.full_mask


def replay(g: Graph, chron: Chronology) -> frozenset:
    """Re-apply ``chron`` from its initial set, validating every step.

    Raises ``ValueError`` naming the first invalid event.
    """
    black = mask_of(chron.initial)
    if black & ~g.full_mask:
        raise ValueError("initial set not contained in the graph")
    for i, e in enumerate(chron.events, start=1):
        if e.step != i:
            raise ValueError(f"event {i} carries step {e.step}")
        if not (black >> e.forcer) & 1:
            raise ValueError(f"step {i}: forcer {e.forcer} is white")
        if _unique_white(g, e.forcer, black) != e.forced:
            raise ValueError(f"step {i}: {e.forced} is not the unique white neighbor of {e.forcer}")
        black |= 1 << e.forced
    return frozenset(iter_bits(black))
