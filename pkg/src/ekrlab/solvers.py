"""Exact optimizers over subfamilies of a set family.

Maximum s-intersecting subfamily search is a maximum clique problem on
the compatibility graph (members adjacent when they meet in >= s
elements), solved by branch and bound with a greedy coloring bound.
Transversals use hitting-set branch and bound on a minimum uncovered
member.  Clique searches run over a degree-descending reordering (dense
compatibility graphs are near-trivial in that order and pathological in
member order); default witnesses are recomputed in family order by a
deterministic certification pass.  Everything is single-threaded in a
fixed order, so values and witnesses are reproducible; node budgets make
partial results an explicit error state rather than a silent answer.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .families import SetFamily, best_full_star

sys.setrecursionlimit(100_000)


@dataclass(frozen=True)
class Limits:
    node_budget: int = 50_000_000
    optima_cap: int = 10_000


DEFAULT_LIMITS = Limits()


class _BudgetExceeded(Exception):
    pass


class _Budget:
    __slots__ = ("left", "initial")

    def __init__(self, budget: int) -> None:
        self.left = budget
        self.initial = budget

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise _BudgetExceeded

    @property
    def used(self) -> int:
        return max(self.initial - self.left, 0)


@dataclass(frozen=True)
class CompatibilityGraph:
    """Member-level adjacency: bit j of adj[i] set iff |A_i & A_j| >= s."""

    m: int
    adj: tuple[int, ...]

    @classmethod
    def build(cls, fam: SetFamily, s: int) -> "CompatibilityGraph":
        sets = fam.sets
        m = len(sets)
        rows = [0] * m
        for i in range(m):
            for j in range(i + 1, m):
                if (sets[i] & sets[j]).bit_count() >= s:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return cls(m=m, adj=tuple(rows))


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: tuple[int, ...]
    all_optima: tuple[tuple[int, ...], ...] | None = None
    nodes: int = 0
    limits_hit: bool = False
    infeasible: bool = False
    value_exact: bool = True
    uniform_optima: bool | None = None

    def witness_sets(self, fam: SetFamily) -> list[tuple[int, ...]]:
        return [fam.member(i) for i in self.witness]


def _color_order(adj: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate set; same-class members pairwise
    non-adjacent, so the class count bounds any clique inside cand."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            bounds.append(color)
            rest ^= low
            avail &= ~adj[v]
            avail ^= low
    return order, bounds


def _degree_reorder(adj: tuple[int, ...]) -> tuple[tuple[int, ...], list[int], list[int]]:
    """Rows permuted so position 0 has the highest degree; returns
    (rows, perm, pos) with perm[new] = old and pos[old] = new."""
    m = len(adj)
    perm = sorted(range(m), key=lambda v: (-adj[v].bit_count(), v))
    pos = [0] * m
    for i, v in enumerate(perm):
        pos[v] = i
    rows = [0] * m
    for old in range(m):
        row = adj[old]
        translated = 0
        while row:
            low = row & -row
            translated |= 1 << pos[low.bit_length() - 1]
            row ^= low
        rows[pos[old]] = translated
    return tuple(rows), perm, pos


def _translate_mask(mask: int, pos: list[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << pos[low.bit_length() - 1]
        mask ^= low
    return out


class _CliqueSearch:
    """Branch and bound core shared by the clique-shaped operations."""

    def __init__(self, adj: tuple[int, ...], budget: _Budget) -> None:
        self.adj = adj
        self.m = len(adj)
        self.budget = budget
        self.best = 0
        self.best_mask = 0

    def maximum(self, stop_at: int | None = None,
                seed: tuple[int, int] | None = None) -> tuple[int, int, bool]:
        """(size, member mask, limits_hit); partial best survives a
        budget overrun.  seed is a known clique (size, mask) used as a
        warm lower bound."""
        self.best, self.best_mask = self._greedy_seed()
        if seed is not None and seed[0] > self.best:
            self.best, self.best_mask = seed
        self._stop_at = stop_at
        full = (1 << self.m) - 1
        hit = False
        try:
            if full:
                self._expand(0, 0, full)
        except _BudgetExceeded:
            hit = True
        return self.best, self.best_mask, hit

    def _greedy_seed(self) -> tuple[int, int]:
        """Degree-greedy clique; a warm lower bound for the search."""
        adj = self.adj
        order = sorted(range(self.m), key=lambda v: (-adj[v].bit_count(), v))
        mask = 0
        size = 0
        cand = (1 << self.m) - 1
        for v in order:
            if (cand >> v) & 1:
                mask |= 1 << v
                size += 1
                cand &= adj[v]
        return size, mask

    def _expand(self, rmask: int, rsize: int, cand: int) -> None:
        adj = self.adj
        order, bounds = _color_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if rsize + bounds[i] <= self.best:
                return
            if self._stop_at is not None and self.best >= self._stop_at:
                return
            v = order[i]
            bit = 1 << v
            self.budget.spend()
            if rsize + 1 > self.best:
                self.best = rsize + 1
                self.best_mask = rmask | bit
            nxt = cand & adj[v]
            if nxt:
                self._expand(rmask | bit, rsize + 1, nxt)
            cand ^= bit

    def exists(self, cand: int, need: int) -> bool:
        """Decision variant: is there a clique of size need inside cand?"""
        if need <= 0:
            return True
        adj = self.adj
        order, bounds = _color_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if bounds[i] < need:
                return False
            v = order[i]
            self.budget.spend()
            if need == 1 or self.exists(cand & adj[v], need - 1):
                return True
            cand ^= 1 << v
        return False

    def lex_least(self, size: int, orig_adj: tuple[int, ...] | None = None,
                  pos: list[int] | None = None) -> tuple[int, ...]:
        """Deterministic certification pass: lexicographically least
        clique of the given size under the family's index order.

        When the search rows are a reordering, orig_adj/pos translate
        family-order candidate sets into search space."""
        if orig_adj is None:
            orig_adj = self.adj
        chosen: list[int] = []
        cand = (1 << self.m) - 1
        while len(chosen) < size:
            picked = False
            rest = cand
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                nxt = cand & orig_adj[v]
                probe = nxt if pos is None else _translate_mask(nxt, pos)
                if self.exists(probe, size - len(chosen) - 1):
                    chosen.append(v)
                    cand = nxt
                    picked = True
                    break
                cand ^= low
            if not picked:
                raise AssertionError("certification pass lost the optimum")
        return tuple(chosen)

    def enumerate_exact(self, size: int, cap: int) -> tuple[list[tuple[int, ...]], bool]:
        """All cliques of exactly the given size, sorted; capped."""
        if size == 0:
            return [()], False
        self._out: list[tuple[int, ...]] = []
        self._cap = cap
        self._capped = False
        self._size = size
        self._enum([], (1 << self.m) - 1)
        out = sorted(self._out[:cap])
        return out, self._capped

    def _enum(self, stack: list[int], cand: int) -> None:
        if self._capped:
            return
        adj = self.adj
        order, bounds = _color_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(stack) + bounds[i] < self._size:
                return
            if self._capped:
                return
            v = order[i]
            self.budget.spend()
            stack.append(v)
            if len(stack) == self._size:
                self._out.append(tuple(sorted(stack)))
                if len(self._out) > self._cap:
                    self._capped = True
            else:
                self._enum(stack, cand & adj[v])
            stack.pop()
            cand ^= 1 << v


def _star_seed(fam: SetFamily, s: int) -> tuple[int, int] | None:
    """The largest full s-star is an s-intersecting subfamily, so its
    member set warm-starts the clique search."""
    size, center = best_full_star(fam, s)
    if size == 0:
        return None
    mask = 0
    for i, m in enumerate(fam.sets):
        if m & center == center:
            mask |= 1 << i
    return size, mask


def max_s_intersecting(fam: SetFamily, s: int,
                       limits: Limits = DEFAULT_LIMITS) -> SolveResult:
    """Largest s-intersecting subfamily, with a lex-least witness."""
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    cg = CompatibilityGraph.build(fam, s)
    rows, perm, pos = _degree_reorder(cg.adj)
    budget = _Budget(limits.node_budget)
    search = _CliqueSearch(rows, budget)
    seed = _star_seed(fam, s)
    if seed is not None:
        seed = (seed[0], _translate_mask(seed[1], pos))
    value, mask, hit = search.maximum(seed=seed)
    partial = tuple(sorted(perm[i] for i in _mask_indices(mask)))
    if hit:
        return SolveResult(value=value, witness=partial, nodes=budget.used,
                           limits_hit=True, value_exact=False)
    try:
        witness = search.lex_least(value, orig_adj=cg.adj, pos=pos)
    except _BudgetExceeded:
        return SolveResult(value=value, witness=partial, nodes=budget.used,
                           limits_hit=True)
    return SolveResult(value=value, witness=witness, nodes=budget.used)


def enumerate_maximum_s_intersecting(fam: SetFamily, s: int,
                                     limits: Limits = DEFAULT_LIMITS) -> SolveResult:
    """All maximum s-intersecting subfamilies (capped), sorted."""
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    cg = CompatibilityGraph.build(fam, s)
    rows, perm, pos = _degree_reorder(cg.adj)
    budget = _Budget(limits.node_budget)
    search = _CliqueSearch(rows, budget)
    seed = _star_seed(fam, s)
    if seed is not None:
        seed = (seed[0], _translate_mask(seed[1], pos))
    value, mask, hit = search.maximum(seed=seed)
    partial = tuple(sorted(perm[i] for i in _mask_indices(mask)))
    if hit:
        return SolveResult(value=value, witness=partial, nodes=budget.used,
                           limits_hit=True, value_exact=False)
    try:
        raw, capped = search.enumerate_exact(value, limits.optima_cap)
    except _BudgetExceeded:
        return SolveResult(value=value, witness=partial, nodes=budget.used,
                           limits_hit=True)
    optima = sorted(tuple(sorted(perm[i] for i in clique)) for clique in raw)
    witness = optima[0] if optima else ()
    return SolveResult(value=value, witness=witness, all_optima=tuple(optima),
                       nodes=budget.used, limits_hit=capped)


def max_nonstar_s_intersecting(fam: SetFamily, s: int,
                               limits: Limits = DEFAULT_LIMITS,
                               enumerate_optima: bool = False,
                               upper_hint: int | None = None) -> SolveResult:
    """Largest s-intersecting subfamily whose common intersection has
    fewer than s elements.

    The plain clique bound is a valid relaxation; the non-star condition
    is checked as the subfamily grows, and once the running intersection
    drops below s elements every extension stays feasible.  Any nonempty
    s-intersecting family of at most two members is automatically an
    s-star, so infeasible means no subfamily qualifies at all.
    """
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    cg = CompatibilityGraph.build(fam, s)
    sets = fam.sets
    budget = _Budget(limits.node_budget)
    adj = cg.adj
    ground_full = (1 << fam.ground) - 1
    state = {"best": 0, "best_stack": ()}

    def expand(stack: list[int], common: int, cand: int) -> None:
        order, bounds = _color_order(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if len(stack) + bounds[i] <= state["best"]:
                return
            if upper_hint is not None and state["best"] >= upper_hint:
                return
            v = order[i]
            budget.spend()
            stack.append(v)
            new_common = common & sets[v]
            if new_common.bit_count() < s and len(stack) > state["best"]:
                state["best"] = len(stack)
                state["best_stack"] = tuple(sorted(stack))
            expand(stack, new_common, cand & adj[v])
            stack.pop()
            cand ^= 1 << v

    try:
        expand([], ground_full, (1 << cg.m) - 1)
    except _BudgetExceeded:
        return SolveResult(value=state["best"], witness=state["best_stack"],
                           nodes=budget.used, limits_hit=True, value_exact=False)
    best = state["best"]
    nodes = budget.used
    if best == 0:
        return SolveResult(value=0, witness=(), nodes=nodes, infeasible=True)
    all_optima = None
    capped = False
    if enumerate_optima:
        search = _CliqueSearch(adj, budget)
        try:
            raw, capped = search.enumerate_exact(best, limits.optima_cap)
        except _BudgetExceeded:
            return SolveResult(value=best, witness=state["best_stack"],
                               nodes=budget.used, limits_hit=True)
        optima = []
        for clique in raw:
            common = ground_full
            for i in clique:
                common &= sets[i]
            if common.bit_count() < s:
                optima.append(clique)
        all_optima = tuple(optima)
        nodes = budget.used
    witness = all_optima[0] if all_optima else state["best_stack"]
    return SolveResult(value=best, witness=witness, all_optima=all_optima,
                       nodes=nodes, limits_hit=capped)


def min_transversal(fam: SetFamily, limits: Limits = DEFAULT_LIMITS) -> SolveResult:
    """Exact minimum hitting set, branching on a smallest uncovered member."""
    sets = fam.sets
    if any(s == 0 for s in sets):
        return SolveResult(value=0, witness=(), infeasible=True)
    if not sets:
        return SolveResult(value=0, witness=())
    budget = _Budget(limits.node_budget)

    # greedy upper bound: repeatedly hit with a highest-degree element
    remaining = list(sets)
    greedy: list[int] = []
    while remaining:
        counts: dict[int, int] = {}
        for mask in remaining:
            for e in _bits(mask):
                counts[e] = counts.get(e, 0) + 1
        e = min(counts, key=lambda x: (-counts[x], x))
        greedy.append(e)
        remaining = [mask for mask in remaining if not (mask >> e) & 1]
    state = {"best": len(greedy), "best_set": tuple(sorted(greedy))}

    def packing_bound(unhit: list[int]) -> int:
        # pairwise-disjoint uncovered members each need their own element
        used = 0
        count = 0
        for mask in unhit:
            if mask & used == 0:
                used |= mask
                count += 1
        return count

    def branch(chosen: list[int], hit_mask: int) -> None:
        unhit = [mask for mask in sets if mask & hit_mask == 0]
        if not unhit:
            if len(chosen) < state["best"]:
                state["best"] = len(chosen)
                state["best_set"] = tuple(sorted(chosen))
            return
        if len(chosen) + packing_bound(unhit) >= state["best"]:
            return
        pivot = min(unhit, key=lambda m: (m.bit_count(), m))
        for e in _bits(pivot):
            budget.spend()
            chosen.append(e)
            branch(chosen, hit_mask | (1 << e))
            chosen.pop()

    try:
        branch([], 0)
    except _BudgetExceeded:
        return SolveResult(value=state["best"], witness=state["best_set"],
                           nodes=budget.used, limits_hit=True, value_exact=False)
    try:
        witness = _lex_least_hitting(sets, state["best"], budget)
    except _BudgetExceeded:
        return SolveResult(value=state["best"], witness=state["best_set"],
                           nodes=budget.used, limits_hit=True)
    return SolveResult(value=state["best"], witness=witness, nodes=budget.used)


def _can_hit(sets: tuple[int, ...], hit_mask: int, forbidden: int, k: int,
             budget: _Budget) -> bool:
    unhit = [m for m in sets if m & hit_mask == 0]
    if not unhit:
        return True
    if k == 0:
        return False
    used = 0
    count = 0
    for mask in unhit:
        if mask & used == 0:
            used |= mask
            count += 1
            if count > k:
                return False
    pivot = min(unhit, key=lambda m: ((m & ~forbidden).bit_count(), m))
    for e in _bits(pivot & ~forbidden):
        budget.spend()
        if _can_hit(sets, hit_mask | (1 << e), forbidden, k - 1, budget):
            return True
    return False


def _lex_least_hitting(sets: tuple[int, ...], size: int,
                       budget: _Budget) -> tuple[int, ...]:
    chosen: list[int] = []
    hit = 0
    forbidden = 0
    ground_top = max((m.bit_length() for m in sets), default=0)
    for e in range(ground_top):
        if len(chosen) == size:
            break
        bit = 1 << e
        if _can_hit(sets, hit | bit, forbidden, size - len(chosen) - 1, budget):
            chosen.append(e)
            hit |= bit
        else:
            forbidden |= bit
    if len(chosen) != size or any(m & hit == 0 for m in sets):
        raise AssertionError("certification pass lost the optimum")
    return tuple(chosen)


def max_triangular_intersecting(fam: SetFamily, s: int = 1,
                                limits: Limits = DEFAULT_LIMITS) -> SolveResult:
    """Largest subfamily that is pairwise s-intersecting with every
    element in at most two members (degree cap enforced incrementally)."""
    cg = CompatibilityGraph.build(fam, s)
    sets = fam.sets
    m = cg.m
    budget = _Budget(limits.node_budget)
    state = {"best": 0, "best_stack": ()}

    def branch(start: int, stack: list[int], once: int, twice: int, cand: int) -> None:
        if len(stack) > state["best"]:
            state["best"] = len(stack)
            state["best_stack"] = tuple(stack)
        for v in range(start, m):
            if not (cand >> v) & 1:
                continue
            if len(stack) + (cand >> v).bit_count() <= state["best"]:
                return
            if sets[v] & twice:
                continue
            budget.spend()
            stack.append(v)
            branch(v + 1, stack, once | sets[v], twice | (once & sets[v]),
                   cand & cg.adj[v])
            stack.pop()

    try:
        branch(0, [], 0, 0, (1 << m) - 1)
    except _BudgetExceeded:
        return SolveResult(value=state["best"], witness=state["best_stack"],
                           nodes=budget.used, limits_hit=True, value_exact=False)
    return SolveResult(value=state["best"], witness=state["best_stack"],
                       nodes=budget.used)


def max_intersecting_sperner(fam: SetFamily,
                             limits: Limits = DEFAULT_LIMITS) -> SolveResult:
    """Largest subfamily that is intersecting and an antichain; reports
    whether every optimum is uniform."""
    sets = fam.sets
    m = len(sets)
    rows = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            meet = sets[i] & sets[j]
            if meet and meet != sets[i] and meet != sets[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    adj = tuple(rows)
    budget = _Budget(limits.node_budget)
    search = _CliqueSearch(adj, budget)
    value, mask, hit = search.maximum()
    if hit:
        return SolveResult(value=value, witness=_mask_indices(mask),
                           nodes=budget.used, limits_hit=True, value_exact=False)
    try:
        optima, capped = search.enumerate_exact(value, limits.optima_cap)
    except _BudgetExceeded:
        return SolveResult(value=value, witness=_mask_indices(mask),
                           nodes=budget.used, limits_hit=True)
    uniform = None
    if not capped:
        uniform = all(
            len({sets[i].bit_count() for i in opt}) <= 1 for opt in optima
        )
    witness = optima[0] if optima else ()
    return SolveResult(value=value, witness=witness, all_optima=tuple(optima),
                       nodes=budget.used, limits_hit=capped,
                       uniform_optima=uniform)


def helly_triple_check(fam: SetFamily) -> tuple[bool, tuple[int, int, int] | None]:
    """True iff every pairwise-intersecting triple has a common element;
    otherwise returns one counterexample as member indices."""
    sets = fam.sets
    m = len(sets)
    for i in range(m):
        for j in range(i + 1, m):
            meet = sets[i] & sets[j]
            if not meet:
                continue
            for k in range(j + 1, m):
                if meet & sets[k] == 0 and sets[i] & sets[k] and sets[j] & sets[k]:
                    return False, (i, j, k)
    return True, None


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask_indices(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))
