"""Executable checks for every existence, uniqueness and idomatic claim.

Each statement id maps to one check that runs the claim over every instance
of a family up to a size bound (plus fixed-seed random samples where the
family is infinite in more than one direction).  Checks combine the
polynomial solvers with the exhaustive oracle and report every
counterexample verbatim.

Bounds are orders of the instances checked; tournament statements check all
tournaments of exactly ``bound`` vertices.
"""

from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import families, idomatic, oracle, orientations, verify
from .digraph import Digraph, UGraph, VertexSet, bits, is_orientation, reversal
from .edgelist import format_edge_list
from .errors import BoundTooLarge, NotAnIds, UnknownStatement

__all__ = [
    "STATEMENTS",
    "PROFILES",
    "HarnessReport",
    "verify_statement",
    "verify_all",
    "format_reports",
    "all_digon_free",
    "all_digraphs",
    "all_tournaments",
    "maximal_independent_sets",
]


@dataclass(frozen=True)
class Profile:
    path: int          # directed/oriented paths: n = 1..path
    cycle: int         # cycles: n = 3..cycle
    tournament: int    # tournaments on exactly this many vertices
    tree: int          # labelled trees: n = 1..tree
    general: int       # every digon-free digraph: n = 1..general
    bipartite: int     # K_{m,n} orientations: m + n <= bipartite
    graph_n: int       # largest random graph for the orientation constructions
    graphs: int        # number of random graphs for the orientation constructions
    sample_n: int      # largest random digraph
    samples: int       # number of random digraphs per sampled family


PROFILES = {
    "quick": Profile(path=10, cycle=10, tournament=5, tree=6, general=4, bipartite=6,
                     graph_n=12, graphs=150, sample_n=12, samples=300),
    "full": Profile(path=14, cycle=14, tournament=6, tree=7, general=5, bipartite=6,
                    graph_n=12, graphs=1000, sample_n=15, samples=10_000),
}


@dataclass
class HarnessReport:
    statement: str
    instances_checked: int
    failures: list = field(default_factory=list)  # (edge list, offending set, note)
    elapsed: float = 0.0
    bound: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self, timing: bool = True) -> str:
        ms = int(round(self.elapsed * 1000)) if timing else 0
        return f"{self.statement} {self.instances_checked} {len(self.failures)} {ms}"


class _Run:
    """Accumulates instance counts and counterexamples for one statement."""

    def __init__(self, profile: Profile, rng: random.Random):
        self.profile = profile
        self.rng = rng
        self.count = 0
        self.failures = []

    def check(self, ok: bool, D, S=None, note: str = ""):
        self.count += 1
        if not ok:
            self.fail(D, S, note)

    def fail(self, D, S=None, note=""):
        text = format_edge_list(D) if D is not None else ""
        members = tuple(VertexSet.from_mask(S) if isinstance(S, int) else S) if S is not None else None
        self.failures.append((text, members, note))


# --- instance generators ---------------------------------------------------

def all_digon_free(n: int) -> Iterator[Digraph]:
    """Every labelled digraph on ``n`` vertices without digons (``3**C(n,2)``)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for code in range(3 ** len(pairs)):
        arcs = []
        for u, v in pairs:
            code, r = divmod(code, 3)
            if r == 1:
                arcs.append((u, v))
            elif r == 2:
                arcs.append((v, u))
        yield Digraph._trusted(n, arcs)


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every labelled simple digraph on ``n`` vertices, digons included (``4**C(n,2)``)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for code in range(4 ** len(pairs)):
        arcs = []
        for u, v in pairs:
            code, r = divmod(code, 4)
            if r & 1:
                arcs.append((u, v))
            if r & 2:
                arcs.append((v, u))
        yield Digraph._trusted(n, arcs)


def all_tournaments(n: int) -> Iterator[Digraph]:
    return orientations.enumerate_orientations(orientations.gen_base(orientations.GeneratorSpec("complete", (n,))))


def _paths(n_max):
    for n in range(1, n_max + 1):
        yield from orientations.enumerate_orientations(_base("path", n))


def _cycles(n_max):
    for n in range(3, n_max + 1):
        yield from orientations.enumerate_orientations(_base("cycle", n))


def _base(kind, *sizes):
    return orientations.gen_base(orientations.GeneratorSpec(kind, sizes))


def _labeled_trees(n_max):
    for n in range(1, n_max + 1):
        for index in range(orientations.tree_count(n)):
            yield _base("labeled_tree", n, index)


def _arborescence(T: UGraph, root: int) -> Digraph:
    arcs = []
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in T.adj[u]:
            if w not in seen:
                seen.add(w)
                arcs.append((u, w))
                queue.append(w)
    return Digraph._trusted(T.n, arcs)


def _rooted_trees(n_max):
    """Every arborescence and anti-arborescence built from labelled trees."""
    for T in _labeled_trees(n_max):
        for root in range(T.n):
            A = _arborescence(T, root)
            yield "arborescence", A
            yield "anti_arborescence", reversal(A)


def _kmn_orientations(total):
    """``(D, X mask)`` for every orientation of every K_{m,n} with m + n <= total."""
    for size in range(2, total + 1):
        for m in range(1, size):
            G = _base("complete_bipartite", m, size - m)
            x = (1 << m) - 1
            for D in orientations.enumerate_orientations(G):
                yield D, x


def _random_graph(rng, n_min, n_max, connected=False):
    """G(n, p) with random n and p; ``connected`` adds a random spanning tree first."""
    n = rng.randint(n_min, n_max)
    p = rng.uniform(0.15, 0.85)
    edges = set()
    if connected and n > 1:
        seq = [rng.randrange(n) for _ in range(n - 2)]
        edges.update((min(e), max(e)) for e in orientations.prufer_decode(seq, n))
    edges.update((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p)
    return UGraph(n, edges)


def _random_orientation(rng, G: UGraph) -> Digraph:
    return Digraph._trusted(G.n, [(u, v) if rng.random() < 0.5 else (v, u) for u, v in G.edges])


def _random_digraph(rng, n_max):
    return _random_orientation(rng, _random_graph(rng, 1, n_max))


def _random_dag(rng, n_max):
    n = rng.randint(1, n_max)
    p = rng.uniform(0.1, 0.7)
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Digraph._trusted(n, arcs)


def _random_bipartite(rng, n_max):
    """Random oriented bipartite graph with parts {0..m-1} and {m..n-1}; returns (D, X mask)."""
    n = rng.randint(2, n_max)
    m = rng.randint(1, n - 1)
    p = rng.uniform(0.15, 0.9)
    arcs = []
    for x in range(m):
        for y in range(m, n):
            if rng.random() < p:
                arcs.append((x, y) if rng.random() < 0.5 else (y, x))
    return Digraph._trusted(n, arcs), (1 << m) - 1


def _random_x_dominates_y(rng, n_max):
    """Random bipartite orientation in which every y has an in-neighbour in X."""
    n = rng.randint(2, n_max)
    m = rng.randint(1, n - 1)
    p = rng.uniform(0.1, 0.8)
    arcs = set()
    for y in range(m, n):
        arcs.add((rng.randrange(m), y))
    for x in range(m):
        for y in range(m, n):
            if (x, y) not in arcs and rng.random() < p:
                arcs.add((x, y) if rng.random() < 0.5 else (y, x))
    return Digraph._trusted(n, arcs), (1 << m) - 1


def _random_no_zero_indegree(rng, n_max):
    """Random bipartite orientation with no in-degree-zero vertex; returns (D, X mask)."""
    n = rng.randint(4, max(4, n_max))
    m = rng.randint(2, n - 2)
    p = rng.uniform(0.3, 0.9)
    edges = [(x, y) for x in range(m) for y in range(m, n) if rng.random() < p]
    arcs = {}
    for x, y in edges:
        arcs[(x, y)] = (x, y) if rng.random() < 0.5 else (y, x)
    # give every vertex an in-arc by flipping an incident edge, when it has one
    for v in range(n):
        incident = [e for e in edges if v in e]
        if not incident:
            return None
        if not any(arcs[e][1] == v for e in incident):
            e = rng.choice(incident)
            arcs[e] = (e[0] + e[1] - v, v)
    D = Digraph._trusted(n, arcs.values())
    if any(not D.in_mask[v] for v in range(n)):
        return None
    return D, (1 << m) - 1


def maximal_independent_sets(G: UGraph) -> list:
    """Every maximal independent set of ``G`` as a bitmask (Bron-Kerbosch with pivoting)."""
    n = G.n
    full = (1 << n) - 1
    # independent sets of G are cliques of the complement
    comp = [full & ~G.adj_mask[v] & ~(1 << v) for v in range(n)]
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: bin(comp[u] & p).count("1"))
        for v in bits(p & ~comp[pivot]):
            bk(r | 1 << v, p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, full, 0)
    return sorted(out)


def _is_directed_odd_cycle(D):
    return families._is_directed_cycle(D) and D.n % 2 == 1


def _even_positions(n):
    return sum(1 << i for i in range(0, n, 2))


# --- statement checks ------------------------------------------------------

def _oracle_sets(D):
    return list(oracle.iter_ids(D))


def _check_lift(run, D):
    for S in _oracle_sets(D):
        run.check(verify.lifts_to_underlying(D, VertexSet.from_mask(S)), D, S, "IDS of digraph does not lift")


def check_t1_1(run, bound):
    for n in range(1, bound + 1):
        for D in all_digon_free(n):
            _check_lift(run, D)
    for _ in range(run.profile.samples):
        _check_lift(run, _random_digraph(run.rng, run.profile.sample_n))


def _graph_mis_pairs(run, bound, n_min, connected=False):
    for _ in range(run.profile.graphs):
        G = _random_graph(run.rng, n_min, bound, connected)
        for S in maximal_independent_sets(G):
            yield G, VertexSet.from_mask(S)


def check_t1_2(run, bound):
    for G, S in _graph_mis_pairs(run, bound, 1):
        D = orientations.orient_away(G, S)
        run.check(verify.is_ids(D, S).is_ids, D, S, "orient_away result lacks the IDS")


def check_t1_3(run, bound):
    # graphs are connected, as everywhere in the source theory; an edgeless
    # graph's only maximal independent set is V, which dominates trivially
    for G, S in _graph_mis_pairs(run, bound, 2, connected=True):
        D = orientations.orient_toward(G, S)
        run.check(not verify.is_dominating(D, S), D, S, "orient_toward result still dominated")


def check_t2(run, bound):
    for T in all_tournaments(bound):
        sets = _oracle_sets(T)
        king = any(len(T.out_adj[v]) == T.n - 1 for v in range(T.n))
        run.check(bool(sets) == king, T, None, "existence differs from all-beating vertex condition")
        if len(sets) > 1:
            run.fail(T, sets[1], "tournament IDS not unique")
        out = families.solve_tournament(T)
        if out.found:
            if not verify.is_ids(T, out.set).is_ids or [out.set.mask] != sets:
                run.fail(T, out.set, "solver set is not the oracle's unique IDS")
        elif sets:
            run.fail(T, sets[0], "solver missed an IDS")


def check_l_dipath(run, bound):
    for n in range(1, bound + 1):
        P = orientations.gen_directed("path", n)
        sets = _oracle_sets(P)
        run.check(sets == [_even_positions(n)], P, sets[0] if sets else None, "directed path IDS")


def check_l_indeg0(run, bound):
    def one(D):
        need = verify.mandatory_vertices(D).mask
        for S in _oracle_sets(D):
            run.check(need & ~S == 0, D, S, "in-degree-0 vertex missing from IDS")

    for n in range(1, bound + 1):
        for D in all_digon_free(n):
            one(D)
    # digons included, where the space stays small
    for n in range(2, min(bound, 4) + 1):
        for D in all_digraphs(n):
            if not is_orientation(D):
                one(D)
    for _ in range(run.profile.samples):
        one(_random_digraph(run.rng, run.profile.sample_n))


def _solver_checked(run, D, solver, note):
    try:
        out = solver(D)
    except Exception as exc:  # a solver rejecting its own family is a failure
        run.fail(D, None, f"{note}: {type(exc).__name__}: {exc}")
        return None
    if not out.found:
        run.fail(D, None, f"{note}: no set returned")
        return None
    if not verify.is_ids(D, out.set).is_ids:
        run.fail(D, out.set, f"{note}: returned set is not an IDS")
        return None
    return out.set


def check_t_paths(run, bound):
    for D in _paths(bound):
        run.count += 1
        S = _solver_checked(run, D, families.solve_oriented_path, "oriented path")
        if S is not None and S.mask not in _oracle_sets(D):
            run.fail(D, S, "solver set absent from oracle enumeration")


def check_t_trees(run, bound):
    for T in _labeled_trees(bound):
        for D in orientations.enumerate_orientations(T):
            run.count += 1
            _solver_checked(run, D, families.solve_oriented_tree, "oriented tree")


def check_l_rev(run, bound):
    def one(D):
        for S in _oracle_sets(D):
            run.check(verify.complement_dominates_reversal(D, VertexSet.from_mask(S)), D, S,
                      "complement does not dominate the reversal")

    for n in range(1, bound + 1):
        for D in all_digon_free(n):
            one(D)
    for _ in range(run.profile.samples):
        one(_random_digraph(run.rng, run.profile.sample_n))


def check_l_arbs(run, bound):
    solvers = {"arborescence": families.solve_arborescence,
               "anti_arborescence": families.solve_anti_arborescence}
    for kind, D in _rooted_trees(bound):
        unique = oracle.is_unique_ids(D)
        out = solvers[kind](D)
        run.check(unique is not None and out.found and out.set == unique, D,
                  out.set, f"{kind} IDS not unique or solver disagrees")


def check_t_dag(run, bound):
    def one(D):
        run.count += 1
        S = _solver_checked(run, D, families.solve_dag_greedy, "dag")
        if S is not None and S.mask not in _oracle_sets(D):
            run.fail(D, S, "greedy set absent from oracle enumeration")

    for n in range(1, bound + 1):
        for D in all_digon_free(n):
            if "dag" in families.classify(D):
                one(D)
    for _ in range(run.profile.samples):
        one(_random_dag(run.rng, run.profile.sample_n))


def check_l_evencyc(run, bound):
    for n in range(3, bound + 1):
        C = orientations.gen_directed("cycle", n)
        sets = _oracle_sets(C)
        expect = [] if n % 2 else sorted([_even_positions(n), _even_positions(n) << 1],
                                         key=lambda m: VertexSet.from_mask(m).to_tuple())
        run.check(sets == expect, C, None, f"directed C{n} has {len(sets)} IDS")


def check_c_notall(run, bound):
    for n in range(3, bound + 1, 2):
        C = orientations.gen_directed("cycle", n)
        run.check(not oracle.exists_ids(C), C, None, "directed odd cycle has an IDS")
    if run.count == 0:
        run.fail(None, None, "no directed odd cycle within bound")


def check_t_cycles(run, bound):
    for D in _cycles(bound):
        if _is_directed_odd_cycle(D):
            continue
        run.count += 1
        if not oracle.exists_ids(D):
            run.fail(D, None, "oriented cycle without IDS")
        _solver_checked(run, D, families.solve_oriented_cycle, "oriented cycle")


def check_c_cycles_iff(run, bound):
    for D in _cycles(bound):
        odd = _is_directed_odd_cycle(D)
        exists = oracle.exists_ids(D)
        out = families.solve_oriented_cycle(D)
        run.check(exists != odd and out.found == exists, D, None, "existence is not 'not a directed odd cycle'")


def check_l_kmn(run, bound):
    for size in range(2, bound + 1):
        for m in range(1, size):
            n = size - m
            D = Digraph(size, [(x, y) for x in range(m) for y in range(m, size)])
            unique = oracle.is_unique_ids(D)
            run.check(unique is not None and unique.mask == (1 << m) - 1, D, unique,
                      f"X is not the unique IDS of directed K_{m},{n}")


def _x_dominates_y(D, x):
    y = ((1 << D.n) - 1) & ~x
    return all(D.in_mask[v] & x for v in bits(y))


def check_l_xdomy(run, bound):
    for D, x in _kmn_orientations(bound):
        if _x_dominates_y(D, x):
            run.check(verify.is_ids(D, VertexSet.from_mask(x)).is_ids, D, x, "X is not an IDS")
    for _ in range(run.profile.samples):
        D, x = _random_x_dominates_y(run.rng, run.profile.sample_n)
        run.check(verify.is_ids(D, VertexSet.from_mask(x)).is_ids, D, x, "X is not an IDS")


def _check_nozeros(run, D, x):
    y = ((1 << D.n) - 1) & ~x
    both = all(verify.is_ids(D, VertexSet.from_mask(s)).is_ids for s in (x, y))
    run.check(both and oracle.count_ids(D, 2) >= 2, D, None, "partite sets not both IDS or IDS unique")


def check_l_nozeros(run, bound):
    for D, x in _kmn_orientations(bound):
        if all(D.in_mask):
            _check_nozeros(run, D, x)
    drawn = 0
    attempts = 0
    while drawn < run.profile.samples and attempts < 20 * run.profile.samples:
        attempts += 1
        got = _random_no_zero_indegree(run.rng, run.profile.sample_n)
        if got is not None:
            drawn += 1
            _check_nozeros(run, *got)


def check_t_allbis(run, bound):
    def one(D):
        run.count += 1
        S = _solver_checked(run, D, families.solve_bipartite, "bipartite")
        if not oracle.exists_ids(D):
            run.fail(D, S, "oracle finds no IDS")

    for D, _ in _kmn_orientations(bound):
        one(D)
    for _ in range(run.profile.samples):
        one(_random_bipartite(run.rng, run.profile.sample_n)[0])


def _check_idomatic(run, D, expected=None):
    closed = idomatic.idomatic_closed_form(D)
    exact = idomatic.idomatic_exact(D)
    ok = closed is not None and closed.value == exact.value
    if expected is not None:
        ok = ok and exact.value == expected
    for S in exact.witness:
        ok = ok and verify.is_ids(D, S).is_ids
    run.check(ok, D, None, f"closed form {closed and closed.value} vs exact {exact.value}")


def check_cor_id_tourn(run, bound):
    for T in all_tournaments(bound):
        king = any(len(T.out_adj[v]) == T.n - 1 for v in range(T.n))
        _check_idomatic(run, T, 1 if king else 0)


def check_cor_id_path(run, bound):
    for n in range(1, bound + 1):
        _check_idomatic(run, orientations.gen_directed("path", n), 1)


def check_cor_id_cycle(run, bound):
    for n in range(3, bound + 1):
        _check_idomatic(run, orientations.gen_directed("cycle", n), 0 if n % 2 else 2)


def check_cor_id_arb(run, bound):
    for _, D in _rooted_trees(bound):
        _check_idomatic(run, D, 1)


@dataclass(frozen=True)
class Statement:
    id: str
    check: Callable
    bound_of: Callable  # Profile -> default bound
    max_bound: int
    min_bound: int = 1


STATEMENTS = {
    s.id: s
    for s in [
        Statement("T1.1", check_t1_1, lambda p: p.general, 5),
        Statement("T1.2", check_t1_2, lambda p: p.graph_n, 16),
        Statement("T1.3", check_t1_3, lambda p: p.graph_n, 16, 2),
        Statement("T2", check_t2, lambda p: p.tournament, 6),
        Statement("L-DIPATH", check_l_dipath, lambda p: p.path, 32),
        Statement("L-INDEG0", check_l_indeg0, lambda p: p.general, 5),
        Statement("T-PATHS", check_t_paths, lambda p: p.path, 16),
        Statement("T-TREES", check_t_trees, lambda p: p.tree, 7),
        Statement("L-REV", check_l_rev, lambda p: p.general, 5),
        Statement("L-ARBS", check_l_arbs, lambda p: p.tree, 7),
        Statement("T-DAG", check_t_dag, lambda p: p.general, 5),
        Statement("L-EVENCYC", check_l_evencyc, lambda p: p.cycle, 32, 3),
        Statement("C-NOTALL", check_c_notall, lambda p: p.cycle, 32, 3),
        Statement("T-CYCLES", check_t_cycles, lambda p: p.cycle, 16, 3),
        Statement("C-CYCLES-IFF", check_c_cycles_iff, lambda p: p.cycle, 16, 3),
        Statement("L-KMN", check_l_kmn, lambda p: p.bipartite, 32, 2),
        Statement("L-XDOMY", check_l_xdomy, lambda p: p.bipartite, 7, 2),
        Statement("L-NOZEROS", check_l_nozeros, lambda p: p.bipartite, 7, 2),
        Statement("T-ALLBIS", check_t_allbis, lambda p: p.bipartite, 7, 2),
        Statement("COR-ID-TOURN", check_cor_id_tourn, lambda p: p.tournament, 6),
        Statement("COR-ID-PATH", check_cor_id_path, lambda p: p.path, 32),
        Statement("COR-ID-CYCLE", check_cor_id_cycle, lambda p: p.cycle, 32, 3),
        Statement("COR-ID-ARB", check_cor_id_arb, lambda p: p.tree, 7),
    ]
}


def verify_statement(statement: str, bound: Optional[int] = None, profile: str = "quick",
                     seed: int = 0) -> HarnessReport:
    """Run one statement check.

    Raises
    ------
    UnknownStatement
        For an id not in :data:`STATEMENTS`.
    BoundTooLarge
        If ``bound`` lies outside the statement's supported range.
    """
    try:
        st = STATEMENTS[statement]
    except KeyError:
        raise UnknownStatement(f"unknown statement {statement!r}") from None
    prof = PROFILES[profile]
    if bound is None:
        bound = st.bound_of(prof)
    if not st.min_bound <= bound <= st.max_bound:
        raise BoundTooLarge(f"{statement}: bound must lie in {st.min_bound}..{st.max_bound}, got {bound}")
    run = _Run(prof, random.Random(f"{seed}:{statement}"))
    start = time.perf_counter()
    try:
        st.check(run, bound)
    except NotAnIds as exc:
        run.fail(None, None, f"NotAnIds: {exc}")
    elapsed = time.perf_counter() - start
    failures = sorted(run.failures, key=lambda f: (f[0], f[1] or (), f[2]))
    return HarnessReport(statement, run.count, failures, elapsed, bound)


def verify_all(profile: str = "quick", seed: int = 0) -> list:
    return [verify_statement(sid, None, profile, seed) for sid in STATEMENTS]


def format_reports(reports, timing: bool = True) -> str:
    """One line per statement, counterexamples appended as indented edge lists."""
    lines = [r.line(timing) for r in reports]
    for r in reports:
        for text, members, note in r.failures:
            set_txt = " ".join(map(str, members)) if members is not None else "-"
            lines.append(f"counterexample {r.statement}: {note}; set: {set_txt}")
            lines.extend("  " + row for row in text.splitlines())
    return "\n".join(lines) + "\n"
