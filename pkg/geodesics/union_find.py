"""
Union-Find - Disjoint Sets for Conjugacy Orbits

Union by rank with path compression. Each root also tracks the smallest
member of its set so orbit representatives are deterministic.
"""

from typing import Dict, Hashable, Iterable, List


class UnionFind:
    def __init__(self, items: Iterable[Hashable]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}
        self.minimum = {x: x for x in self.parent}

    def __contains__(self, x) -> bool:
        return x in self.parent

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.minimum[x] = min(self.minimum[x], self.minimum[y])
        del self.rank[y]

    def representative(self, x):
        """Smallest member of the set containing x."""
        return self.minimum[self.find(x)]

    def groups(self) -> Dict[Hashable, List[Hashable]]:
        """Smallest member ↦ sorted members."""
        result: Dict[Hashable, List[Hashable]] = {}
        for x in self.parent:
            result.setdefault(self.representative(x), []).append(x)
        return {rep: sorted(members) for rep, members in sorted(result.items())}

    def __len__(self) -> int:
        return len(self.rank)
