"""The forcing-chronology apparatus behind the girth bound, built on real graphs.

Given a graph of girth ``g >= 5`` and a chronology from a zero forcing set
``S``, take the first ``m = min(t, g - 2)`` forcers ``X = x_1..x_m``.
From them we derive

* ``S_i``: vertices of ``S`` adjacent to ``x_i`` but to no earlier forcer,
* ``S_X*`` (union of the ``S_i``) and ``S_X`` (forcers in ``S`` with no
  neighbor in ``X``),
* ``H1 = G[X]`` (edge set ``E1``) and the common-neighbor graph ``H2``
  (edge set ``E2``, each edge tagged with the unique common neighbor that
  certifies it),
* the components of ``H1``, the split of ``E2`` into edges inside one
  component (``E2'``) and edges between components (``E2''``),
  ``H3 = (X, E1 + E2'')`` and the component graph ``H4``.

Indices into ``X`` are 0-based throughout: position ``p`` holds ``x_{p+1}``.
The ``check_*`` functions test identities that hold for every such input;
quantities that only follow from a too-small ``S`` are reported, not asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import networkx as nx

from .errors import MachineryError
from .forcing import Chronology, derived_set, replay
from .graph import Graph, girth, iter_bits, mask_of, min_degree
from .graph6 import write_graph6

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"


class LemmaViolation(AssertionError):
    """An identity that must hold on every input failed; carries replay data."""

    def __init__(self, message: str, payload: dict):
        super().__init__(message)
        self.payload = payload


@dataclass(frozen=True)
class Machinery:
    graph: Graph
    chron: Chronology
    girth: int
    delta: int
    X: tuple
    Y: tuple
    S_sets: tuple
    S_X_star: frozenset
    S_X_isolated: frozenset
    E1: frozenset
    E2: dict
    components: tuple
    component_of: tuple
    l: int
    E2_prime: frozenset
    E2_doubleprime: frozenset
    H4_edges: frozenset
    truncated: bool

    @property
    def m(self) -> int:
        return len(self.X)

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def S(self) -> frozenset:
        return self.chron.initial

    def witness(self, edge: tuple[int, int]) -> int:
        return self.E2[edge][0]

    def h3_edges(self) -> frozenset:
        return self.E1 | self.E2_doubleprime

    def replay_context(self) -> dict:
        return {
            "graph6": write_graph6(self.graph),
            "S": sorted(self.S),
            "chronology": [[e.forcer, e.forced] for e in self.chron.events],
            "X": list(self.X),
        }

    def to_json(self) -> dict:
        X = self.X

        def vpair(e):
            return [X[e[0]], X[e[1]]]

        return {
            "X": list(X),
            "truncated": self.truncated,
            "S_sets": [sorted(s) for s in self.S_sets],
            "S_X_star": sorted(self.S_X_star),
            "S_X": sorted(self.S_X_isolated),
            "E1": [vpair(e) for e in sorted(self.E1)],
            "E2": [vpair(e) + [self.E2[e][0]] for e in sorted(self.E2)],
            "components": [[X[p] for p in comp] for comp in self.components],
            "k": self.k,
            "l": self.l,
            "E2_prime": [vpair(e) for e in sorted(self.E2_prime)],
            "E2_doubleprime": [vpair(e) for e in sorted(self.E2_doubleprime)],
            "H4_edges": sorted(list(e) for e in self.H4_edges),
        }


def build_machinery(g: Graph, chron: Chronology) -> Machinery:
    gr = girth(g)
    if not gr.is_finite:
        raise MachineryError("graph is acyclic; the apparatus needs girth >= 5")
    if gr.value < 5:
        raise MachineryError(f"girth {gr.value} < 5; common neighbors are not unique")
    try:
        closure = replay(g, chron)
    except ValueError as exc:
        raise MachineryError(f"invalid chronology: {exc}") from exc
    if len(closure) != g.n:
        raise MachineryError("initial set is not a zero forcing set")

    gval = gr.value
    masks = g.masks
    S = mask_of(chron.initial)
    m = min(chron.t, gval - 2)
    X = tuple(chron.forcers[:m])
    Y = tuple(chron.forced[:m])

    S_sets = []
    seen_nbrs = 0
    for x in X:
        S_sets.append(frozenset(iter_bits(S & masks[x] & ~seen_nbrs)))
        seen_nbrs |= masks[x]
    S_X_star = frozenset().union(*S_sets) if S_sets else frozenset()
    S_X = frozenset(x for x in X if (S >> x) & 1) - S_X_star

    E1 = frozenset((j, i) for i in range(m) for j in range(i) if (masks[X[j]] >> X[i]) & 1)
    E2 = {}
    for i in range(m):
        for j in range(i):
            hit = masks[X[i]] & (mask_of(S_sets[j]) | (1 << Y[j]))
            if hit:
                E2[(j, i)] = tuple(iter_bits(hit))

    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for j, i in E1:
        parent[find(i)] = find(j)
    groups = {}
    for p in range(m):
        groups.setdefault(find(p), []).append(p)
    components = tuple(sorted((tuple(c) for c in groups.values()), key=lambda c: (-len(c), c[0])))
    component_of = [0] * m
    for idx, comp in enumerate(components):
        for p in comp:
            component_of[p] = idx
    l = sum(1 for c in components if len(c) >= 2)
    E2p = frozenset(e for e in E2 if component_of[e[0]] == component_of[e[1]])
    E2pp = frozenset(E2) - E2p
    H4 = frozenset(tuple(sorted((component_of[j], component_of[i]))) for j, i in E2pp)

    return Machinery(
        graph=g,
        chron=chron,
        girth=gval,
        delta=min_degree(g),
        X=X,
        Y=Y,
        S_sets=tuple(S_sets),
        S_X_star=S_X_star,
        S_X_isolated=S_X,
        E1=E1,
        E2=E2,
        components=components,
        component_of=tuple(component_of),
        l=l,
        E2_prime=E2p,
        E2_doubleprime=E2pp,
        H4_edges=H4,
        truncated=chron.t < gval - 2,
    )


# -- reports -----------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    verdict: str
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "verdict": self.verdict}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class LemmaReport:
    checks: list = field(default_factory=list)
    hypothesis_satisfied: Optional[bool] = None
    quantities: dict = field(default_factory=dict)
    context: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.verdict != FAIL for c in self.checks)

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, INAPPLICABLE: 0}
        for c in self.checks:
            out[c.verdict] += 1
        return out

    def failures(self) -> list:
        return [c for c in self.checks if c.verdict == FAIL]

    def extend(self, other: "LemmaReport") -> None:
        self.checks.extend(other.checks)
        self.quantities.update(other.quantities)
        if other.hypothesis_satisfied is not None:
            self.hypothesis_satisfied = other.hypothesis_satisfied

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "counts": self.counts(),
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "checks": [c.to_json() for c in self.checks],
            "quantities": self.quantities,
            "context": self.context,
        }


def _fail(m: Machinery, name: str, **detail) -> CheckResult:
    detail["replay"] = m.replay_context()
    return CheckResult(name, FAIL, detail)


# -- checks ------------------------------------------------------------


def _e2_count_before(m: Machinery, i: int) -> int:
    return sum(1 for j in range(i) if (j, i) in m.E2)


def check_si_identity(m: Machinery) -> CheckResult:
    """|S_i| = deg(x_i) - 1 - #{j < i : x_j x_i in E2} for every i."""
    for i, x in enumerate(m.X):
        expected = m.graph.degree(x) - 1 - _e2_count_before(m, i)
        if len(m.S_sets[i]) != expected:
            return _fail(m, "si_identity", index=i + 1, vertex=x, size=len(m.S_sets[i]), expected=expected)
    return CheckResult("si_identity", PASS, {"indices": m.m})


def check_star(m: Machinery, u: int) -> CheckResult:
    """E2 restricted to N(u) ∩ X is the star centred at its earliest forcer."""
    pos = {x: p for p, x in enumerate(m.X)}
    N = sorted(pos[x] for x in iter_bits(m.graph.masks[u]) if x in pos)
    name = "star"
    if not N:
        return CheckResult(name, INAPPLICABLE, {"u": u})
    j = N[0]
    inside = {e for e in m.E2 if e[0] in N and e[1] in N}
    expected = {(j, i) for i in N[1:]}
    if inside != expected:
        return _fail(
            m, name, u=u, N=[m.X[p] for p in N],
            extra=[[m.X[a], m.X[b]] for a, b in sorted(inside - expected)],
            missing=[[m.X[a], m.X[b]] for a, b in sorted(expected - inside)],
        )
    for e in inside:
        if m.E2[e] != (u,):
            return _fail(m, name, u=u, edge=[m.X[e[0]], m.X[e[1]]], witnesses=list(m.E2[e]))
    return CheckResult(name, PASS, {"u": u})


def check_star_all(m: Machinery) -> CheckResult:
    applicable = 0
    for u in range(m.graph.n):
        r = check_star(m, u)
        if r.verdict == FAIL:
            return r
        applicable += r.verdict == PASS
    if not applicable:
        return CheckResult("star", INAPPLICABLE, {"reason": "X is empty"})
    return CheckResult("star", PASS, {"centres_checked": applicable})


def check_component_identity(m: Machinery) -> CheckResult:
    """Every component X_p of H1 with |X_p| >= 2 spans exactly |X_p| - 2 edges of E2,
    each certified by a vertex of X_p."""
    name = "component_identity"
    if m.truncated:
        return CheckResult(name, INAPPLICABLE, {"reason": "fewer than g-2 forces"})
    for p, comp in enumerate(m.components[: m.l]):
        members = set(comp)
        inner = [e for e in m.E2 if e[0] in members and e[1] in members]
        if len(inner) != len(comp) - 2:
            return _fail(m, name, component=p, size=len(comp), e2_inside=len(inner))
        comp_vertices = {m.X[q] for q in comp}
        for e in inner:
            if m.witness(e) not in comp_vertices:
                return _fail(m, name, component=p, edge=[m.X[e[0]], m.X[e[1]]], witness=m.witness(e))
    return CheckResult(name, PASS, {"components": m.l})


def _structure_checks(m: Machinery) -> list:
    g = m.graph
    masks = g.masks
    S = mask_of(m.S)
    out = []

    # S_i pairwise disjoint, both definitions agree, union is S ∩ N(X)
    name = "s_sets_disjoint"
    total = sum(len(s) for s in m.S_sets)
    union_nbrs = 0
    for x in m.X:
        union_nbrs |= masks[x]
    alt = []
    acc = set()
    for p, x in enumerate(m.X):
        alt.append(frozenset(iter_bits(S & masks[x])) - acc)
        acc |= m.S_sets[p]
    if total != len(m.S_X_star):
        out.append(_fail(m, name, reason="S_i overlap", sum_sizes=total, union_size=len(m.S_X_star)))
    elif tuple(alt) != m.S_sets:
        out.append(_fail(m, name, reason="the two definitions of S_i differ"))
    elif m.S_X_star != frozenset(iter_bits(S & union_nbrs)):
        out.append(_fail(m, name, reason="S_X* differs from S ∩ N(X)"))
    else:
        out.append(CheckResult(name, PASS))

    name = "s_x_disjoint"
    if m.S_X_star & m.S_X_isolated or not (m.S_X_star | m.S_X_isolated) <= m.S:
        out.append(_fail(m, name, overlap=sorted(m.S_X_star & m.S_X_isolated)))
    else:
        out.append(CheckResult(name, PASS))

    name = "e1_e2_disjoint"
    both = m.E1 & frozenset(m.E2)
    out.append(_fail(m, name, edges=sorted(both)) if both else CheckResult(name, PASS))

    name = "e2_witness_unique"
    bad = None
    for (j, i), wit in sorted(m.E2.items()):
        common = masks[m.X[j]] & masks[m.X[i]]
        if len(wit) != 1 or common.bit_count() != 1 or not (common >> wit[0]) & 1:
            bad = (j, i, wit, sorted(iter_bits(common)))
            break
    if bad:
        out.append(_fail(m, name, edge=[m.X[bad[0]], m.X[bad[1]]], witnesses=list(bad[2]), common=bad[3]))
    else:
        out.append(CheckResult(name, PASS, {"edges": len(m.E2)}))

    name = "h1_forest"
    if len(m.E1) != m.m - m.k:
        out.append(_fail(m, name, vertices=m.m, edges=len(m.E1), components=m.k))
    else:
        out.append(CheckResult(name, PASS))

    name = "isolated_equals_s_x"
    isolated = frozenset(m.X[c[0]] for c in m.components if len(c) == 1)
    if isolated != m.S_X_isolated or not isolated <= m.S:
        out.append(_fail(m, name, isolated=sorted(isolated), S_X=sorted(m.S_X_isolated)))
    else:
        out.append(CheckResult(name, PASS))

    name = "e2_partition"
    if m.E2_prime & m.E2_doubleprime or (m.E2_prime | m.E2_doubleprime) != frozenset(m.E2):
        out.append(_fail(m, name))
    else:
        out.append(CheckResult(name, PASS))

    name = "sum_identity"
    rhs = sum(g.degree(x) - 1 for x in m.X) - len(m.E2)
    if len(m.S_X_star) != total or total != rhs:
        out.append(_fail(m, name, s_x_star=len(m.S_X_star), sum_si=total, degree_sum_minus_e2=rhs))
    else:
        out.append(CheckResult(name, PASS, {"value": total}))

    name = "order_bound"
    need = m.girth * (m.delta - 1)
    if m.delta >= 2 and g.n < need:
        out.append(_fail(m, name, n=g.n, bound=need))
    else:
        out.append(CheckResult(name, PASS if m.delta >= 2 else INAPPLICABLE, {"n": g.n, "bound": need}))
    return out


# -- cycles --------------------------------------------------------------


def h3_cycles(m: Machinery, limit: Optional[int] = None) -> list:
    """Simple cycles of H3 as vertex lists (graph labels), in a deterministic order."""
    H = nx.Graph()
    H.add_nodes_from(range(m.m))
    H.add_edges_from(m.h3_edges())
    cycles = []
    for cyc in nx.simple_cycles(H):
        if len(cyc) < 3:
            continue
        # rotate to start at the smallest position, orient toward the smaller neighbor
        r = cyc.index(min(cyc))
        cyc = cyc[r:] + cyc[:r]
        if cyc[-1] < cyc[1]:
            cyc = [cyc[0]] + cyc[:0:-1]
        cycles.append(cyc)
        if limit is not None and len(cycles) >= limit:
            break
    cycles.sort(key=lambda c: (len(c), c))
    return [[m.X[p] for p in c] for c in cycles]


def lift_cycle(m: Machinery, cycle: list) -> list:
    """Turn a cycle of H3 into a cycle of G of length at most len(cycle) + s,
    where s is the number of E2'' edges it uses.

    An E2'' edge with witness ``u`` becomes the path through ``u``; two
    consecutive E2'' edges sharing a witness collapse into one detour through it.
    """
    pos = {x: p for p, x in enumerate(m.X)}
    lam = len(cycle)
    if lam < 3 or len(set(cycle)) != lam or any(v not in pos for v in cycle):
        raise MachineryError(f"not a simple cycle on X: {cycle}")
    h3 = m.h3_edges()
    kinds = []
    for t in range(lam):
        a, b = pos[cycle[t]], pos[cycle[(t + 1) % lam]]
        e = (min(a, b), max(a, b))
        if e in m.E1:
            kinds.append(None)
        elif e in h3:
            kinds.append(m.witness(e))
        else:
            raise MachineryError(f"{cycle[t]}-{cycle[(t + 1) % lam]} is not an edge of H3")

    by_witness = {}
    for t, u in enumerate(kinds):
        if u is not None:
            by_witness.setdefault(u, []).append(t)
    s = sum(1 for u in kinds if u is not None)

    replace_vertex = {}
    insert_after = {}
    for u, ts in by_witness.items():
        if len(ts) == 1:
            insert_after[ts[0]] = u
        elif len(ts) == 2 and (ts[1] - ts[0]) % lam in (1, lam - 1):
            # edges t, t+1 share the vertex at position t+1 (cyclically)
            first = ts[0] if (ts[1] - ts[0]) % lam == 1 else ts[1]
            replace_vertex[(first + 1) % lam] = u
        else:
            raise LemmaViolation(
                f"witness {u} certifies {len(ts)} non-consecutive cycle edges",
                {"cycle": cycle, "witness": u, **m.replay_context()},
            )

    out = []
    for t in range(lam):
        out.append(replace_vertex.get(t, cycle[t]))
        if t in insert_after:
            out.append(insert_after[t])

    g = m.graph
    simple = len(set(out)) == len(out) and len(out) >= 3
    closed = all(g.has_edge(out[t], out[(t + 1) % len(out)]) for t in range(len(out))) if simple else False
    if not (simple and closed) or len(out) > lam + s:
        raise LemmaViolation(
            "lifted walk is not a short simple cycle of G",
            {"cycle": cycle, "lifted": out, "bound": lam + s, **m.replay_context()},
        )
    return out


def _e2pp_count(m: Machinery, cycle: list) -> int:
    pos = {x: p for p, x in enumerate(m.X)}
    lam = len(cycle)
    count = 0
    for t in range(lam):
        a, b = pos[cycle[t]], pos[cycle[(t + 1) % lam]]
        count += (min(a, b), max(a, b)) in m.E2_doubleprime
    return count


def check_lift_cycles(m: Machinery, limit: int = 2000) -> tuple[CheckResult, dict]:
    cycles = h3_cycles(m, limit)
    info = {"h3_cycles": len(cycles)}
    if not cycles:
        return CheckResult("lift_cycle", INAPPLICABLE, {"reason": "H3 is a forest"}), info
    min_s = None
    for cyc in cycles:
        s = _e2pp_count(m, cyc)
        try:
            lifted = lift_cycle(m, cyc)
        except LemmaViolation as exc:
            return CheckResult("lift_cycle", FAIL, exc.payload), info
        if len(lifted) < m.girth:
            return _fail(m, "lift_cycle", cycle=cyc, lifted=lifted, reason="shorter than the girth"), info
        min_s = s if min_s is None else min(min_s, s)
    info["min_e2pp_on_h3_cycle"] = min_s
    return CheckResult("lift_cycle", PASS, {"cycles": len(cycles)}), info


# -- the hypothesis and the reported chain ------------------------------


def hypothesis_threshold(gval: int, delta: int) -> int:
    return (delta - 2) * (gval - 3) + delta - 1


def hypothesis_report(g: Graph, m: Machinery) -> LemmaReport:
    """Evaluate the (refuted) small-forcing-set hypothesis and the quantities of
    its contradiction chain. Only the refutation itself is asserted: since S
    forces G, |S| >= Z(G) >= threshold + 1 by the girth bound."""
    threshold = hypothesis_threshold(m.girth, m.delta)
    size = len(m.S)
    satisfied = size <= threshold
    k = m.k
    s_x = len(m.S_X_isolated)
    e2pp_pairs = {}
    for j, i in m.E2_doubleprime:
        key = tuple(sorted((m.component_of[j], m.component_of[i])))
        e2pp_pairs[key] = e2pp_pairs.get(key, 0) + 1
    q = {
        "S_size": size,
        "threshold": threshold,
        "bound": threshold + 1,
        "m": m.m,
        "truncated": m.truncated,
        "S_X_star": len(m.S_X_star),
        "S_X": s_x,
        "sum_chain_rhs": m.m * (m.delta - 1) - len(m.E2) + s_x,
        "E1": len(m.E1),
        "E2": len(m.E2),
        "E2_lower_rhs": m.girth - 3 + s_x,
        "E2_prime": len(m.E2_prime),
        "E2_doubleprime": len(m.E2_doubleprime),
        "E2pp_lower_rhs": 2 * k - 1,
        "k": k,
        "l": m.l,
        "cycle_e2pp_bound": math.ceil((k + 2) / 2),
        "max_e2pp_between_pair": max(e2pp_pairs.values(), default=0),
        "k_in_5_6": k in (5, 6),
        "H4_edges": len(m.H4_edges),
        "H4_has_triangle": _has_triangle(k, m.H4_edges),
    }
    name = "bound_hypothesis_refuted"
    if satisfied:
        check = _fail(m, name, S_size=size, threshold=threshold)
    else:
        check = CheckResult(name, PASS, {"S_size": size, "threshold": threshold})
    return LemmaReport([check], satisfied, q)


def _has_triangle(k: int, edges: Iterable) -> bool:
    adj = [0] * k
    for p, q in edges:
        adj[p] |= 1 << q
        adj[q] |= 1 << p
    return any(adj[p] & adj[q] for p, q in edges)


def check_machinery(m: Machinery) -> LemmaReport:
    report = LemmaReport(context=m.replay_context())
    report.checks.extend(_structure_checks(m))
    report.checks.append(check_si_identity(m))
    report.checks.append(check_star_all(m))
    report.checks.append(check_component_identity(m))
    lift, info = check_lift_cycles(m)
    report.checks.append(lift)
    report.extend(hypothesis_report(m.graph, m))
    report.quantities.update(info)
    return report


def run_all_checks(g: Graph, s: Iterable[int]) -> LemmaReport:
    """Build the apparatus from the canonical chronology of ``s`` and run every check."""
    gr = girth(g)
    if not gr.at_least(5) or not gr.is_finite:
        raise MachineryError(f"girth {gr} is not a finite value >= 5")
    closure, chron = derived_set(g, s)
    if len(closure) != g.n:
        raise MachineryError("the given set is not a zero forcing set")
    return check_machinery(build_machinery(g, chron))
