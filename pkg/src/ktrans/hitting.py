"""Solvers for the cross-hitting problem.

solve_greedy is classic greedy set cover; solve_exact is an iterative
deepening branch-and-bound used as the optimality oracle on desk-scale
instances (roughly |guards| <= 60, cap <= 8).  Both are deterministic:
greedy breaks ties on guard id, and the exact solver reports the
lexicographically least optimal selection of the dominance-reduced
instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import HittingInstance, hits
from .errors import CapExceeded, InfeasibleInstance


@dataclass(frozen=True)
class HittingSolution:
    selected: tuple[int, ...]  # guard ids, ascending
    method: str                # "greedy" | "exact"

    @property
    def size(self) -> int:
        return len(self.selected)


def _full_mask(instance: HittingInstance) -> int:
    return (1 << len(instance.crosses)) - 1


def _check_feasible(instance: HittingInstance):
    covered = 0
    for m in instance.hit_sets:
        covered |= m
    missing = _full_mask(instance) & ~covered
    if missing:
        ids = [cid for cid in range(len(instance.crosses))
               if missing >> cid & 1]
        raise InfeasibleInstance(ids)


def solve_greedy(instance: HittingInstance) -> HittingSolution:
    """Repeatedly take the guard covering the most uncovered crosses."""
    _check_feasible(instance)
    full = _full_mask(instance)
    covered = 0
    chosen = []
    while covered != full:
        best_gain, best_gid = -1, -1
        for gid, m in enumerate(instance.hit_sets):
            gain = bin(m & ~covered).count("1")
            if gain > best_gain:
                best_gain, best_gid = gain, gid
        chosen.append(best_gid)
        covered |= instance.hit_sets[best_gid]
    return HittingSolution(tuple(sorted(chosen)), "greedy")


def _reduce_dominated(instance: HittingInstance) -> list[int]:
    """Guard ids surviving dominance elimination: guards whose hit set is a
    subset of another's are dropped (lexicographically least kept among
    exact duplicates)."""
    masks = instance.hit_sets
    alive = []
    for gid in range(len(masks)):
        dominated = False
        for other in range(len(masks)):
            if other == gid:
                continue
            mg, mo = masks[gid], masks[other]
            if mg & ~mo:
                continue  # gid hits something other misses
            if mg != mo or other < gid:
                dominated = True
                break
        if not dominated:
            alive.append(gid)
    return alive


class _ExactSearch:
    def __init__(self, instance: HittingInstance, alive: list[int]):
        self.masks = instance.hit_sets
        self.full = _full_mask(instance)
        self.n_crosses = len(instance.crosses)
        self.candidates = [sorted(gid for gid in alive
                                  if instance.hit_sets[gid] >> cid & 1)
                           for cid in range(self.n_crosses)]
        self.max_gain = max((bin(instance.hit_sets[gid]).count("1")
                             for gid in alive), default=0)

    def exists(self, covered: int, budget: int, min_gid: int) -> bool:
        """Is there a cover of the rest with <= budget guards >= min_gid?"""
        if covered == self.full:
            return True
        missing = bin(self.full & ~covered).count("1")
        if budget <= 0 or missing > budget * self.max_gain:
            return False
        branch = None
        m = self.full & ~covered
        cid = 0
        while m:
            if m & 1:
                cands = [gid for gid in self.candidates[cid] if gid >= min_gid]
                if not cands:
                    return False
                if branch is None or len(cands) < len(branch):
                    branch = cands
            m >>= 1
            cid += 1
        for gid in branch:
            if self.exists(covered | self.masks[gid], budget - 1, min_gid):
                return True
        return False


def solve_exact(instance: HittingInstance, cap: int | None = None
                ) -> HittingSolution:
    """Minimum-cardinality hitting solution via iterative deepening, then a
    lexicographic tightening pass over the optimal size."""
    _check_feasible(instance)
    if cap is None:
        cap = len(instance.guards)
    alive = _reduce_dominated(instance)
    search = _ExactSearch(instance, alive)

    best_size = None
    for budget in range(0, cap + 1):
        if search.exists(0, budget, 0):
            best_size = budget
            break
    if best_size is None:
        raise CapExceeded(f"no solution within cap {cap}")

    chosen: list[int] = []
    covered = 0
    min_gid = 0
    budget = best_size
    while covered != search.full:
        for gid in alive:
            if gid < min_gid:
                continue
            if search.exists(covered | search.masks[gid], budget - 1, gid + 1):
                chosen.append(gid)
                covered |= search.masks[gid]
                budget -= 1
                min_gid = gid + 1
                break
        else:
            raise AssertionError("lexicographic pass lost feasibility")
    return HittingSolution(tuple(chosen), "exact")


def enumerate_minimum(instance: HittingInstance, cap: int | None = None
                      ) -> list[tuple[int, ...]]:
    """All minimum-size feasible selections, over the full guard set.

    Unlike solve_exact this keeps dominated guards: optimal solutions using
    them are part of the enumeration.
    """
    _check_feasible(instance)
    if cap is None:
        cap = len(instance.guards)
    all_ids = list(range(len(instance.guards)))
    search = _ExactSearch(instance, all_ids)
    best = None
    for budget in range(0, cap + 1):
        if search.exists(0, budget, 0):
            best = budget
            break
    if best is None:
        raise CapExceeded(f"no solution within cap {cap}")

    results: set[tuple[int, ...]] = set()
    masks = instance.hit_sets

    def dfs(covered: int, chosen: tuple[int, ...], budget: int):
        if covered == search.full:
            results.add(tuple(sorted(chosen)))
            return
        if budget == 0:
            return
        if bin(search.full & ~covered).count("1") > budget * search.max_gain:
            return
        branch = None
        m = search.full & ~covered
        cid = 0
        while m:
            if m & 1:
                cands = search.candidates[cid]
                if branch is None or len(cands) < len(branch):
                    branch = cands
            m >>= 1
            cid += 1
        for gid in branch:
            if gid not in chosen:
                dfs(covered | masks[gid], chosen + (gid,), budget - 1)

    dfs(0, (), best)
    return sorted(results)


def verify_hitting(instance: HittingInstance, solution: HittingSolution) -> bool:
    """Recheck feasibility geometrically, independent of the solver bitsets."""
    selected = [instance.guards[gid] for gid in solution.selected]
    for cross in instance.crosses:
        if not any(hits(guard, cross) for guard in selected):
            return False
    return True
