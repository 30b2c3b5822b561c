"""Budgeted set-multicover search shared by the graph and poset brute force.

Items (edges, ordered pairs) must each be covered by some chosen candidate;
every candidate uses a set of agents (vertices, poset elements) and no agent
may be used by more than ``k`` chosen candidates. Candidates are bitmask
pairs ``(agents, items)``.
"""
from __future__ import annotations


class NodeLimit(Exception):
    def __init__(self, nodes: int):
        super().__init__(nodes)
        self.nodes = nodes


class BudgetedCover:
    def __init__(self, item_agents: list[int], n_agents: int, cands: list[tuple[int, int]], k: int, max_nodes: int, nodes: int = 0):
        self.item_agents = item_agents
        self.n_agents = n_agents
        self.k = k
        self.max_nodes = max_nodes
        self.nodes = nodes
        m = len(item_agents)
        self.full = (1 << m) - 1
        self.by_item = [[c for c in cands if c[1] >> e & 1] for e in range(m)]
        self.failed: set = set()
        self.chosen: list[tuple[int, int]] = []

    def agents_of(self, items: int) -> int:
        v, e = 0, 0
        while items:
            if items & 1:
                v |= self.item_agents[e]
            items >>= 1
            e += 1
        return v

    def run(self) -> bool:
        return self._go(0, (0,) * self.n_agents)

    def _go(self, covered: int, usage: tuple) -> bool:
        if covered == self.full:
            return True
        key = (covered, usage)
        if key in self.failed:
            return False
        if self.nodes >= self.max_nodes:
            raise NodeLimit(self.nodes)
        self.nodes += 1
        exhausted = 0
        for v, u in enumerate(usage):
            if u >= self.k:
                exhausted |= 1 << v
        # branch on the uncovered item with the fewest usable candidates
        best = None
        rest = self.full & ~covered
        e = 0
        while rest:
            if rest & 1:
                usable = [c for c in self.by_item[e] if not c[0] & exhausted]
                if best is None or len(usable) < len(best):
                    best = usable
                    if not best:
                        break
            rest >>= 1
            e += 1
        for agents, items in best:
            # an agent that contributes no new item can be dropped from the
            # candidate, so only candidates without such agents are tried
            if self.agents_of(items & ~covered) != agents:
                continue
            nu = list(usage)
            x, v = agents, 0
            while x:
                if x & 1:
                    nu[v] += 1
                x >>= 1
                v += 1
            self.chosen.append((agents, items))
            if self._go(covered | items, tuple(nu)):
                return True
            self.chosen.pop()
        self.failed.add(key)
        return False
