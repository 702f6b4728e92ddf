from typing import Dict, Hashable, Iterable, List, Tuple


class UnionFind:
    """Disjoint sets with parity, over hashable items.

    The parity of an item is its orientation relative to its class root; a
    union that closes a cycle with odd parity marks the class as twisted.
    """
    def __init__(self, items: Iterable[Hashable]=()):
        self._parent = {} # type: Dict[Hashable, Hashable]
        self._parity = {} # type: Dict[Hashable, int]
        self._twisted = set()
        for item in items:
            self.add(item)

    def add(self, item: Hashable):
        if item not in self._parent:
            self._parent[item] = item
            self._parity[item] = 0

    def find(self, item: Hashable) -> Tuple[Hashable, int]:
        """Return the root of an item and the item's parity relative to it."""
        path = []
        while self._parent[item] != item:
            path.append(item)
            item = self._parent[item]
        root = item
        # Compress from the top so each parity is relative to the root.
        for node in reversed(path):
            parent = self._parent[node]
            if parent != root:
                self._parity[node] ^= self._parity[parent]
            self._parent[node] = root
        return root, (self._parity[path[0]] if path else 0)

    def root(self, item: Hashable) -> Hashable:
        return self.find(item)[0]

    def union(self, a: Hashable, b: Hashable, parity: int=0):
        """Join the classes of a and b, with b's orientation = a's XOR parity."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            if pa ^ pb != parity:
                self._twisted.add(ra)
            return
        self._parent[rb] = ra
        self._parity[rb] = pa ^ pb ^ parity
        if rb in self._twisted:
            self._twisted.discard(rb)
            self._twisted.add(ra)

    def is_twisted(self, item: Hashable) -> bool:
        return self.root(item) in self._twisted

    def classes(self) -> List[List[Hashable]]:
        """Members of every class, sorted, classes ordered by their smallest member."""
        groups = {} # type: Dict[Hashable, List[Hashable]]
        for item in self._parent:
            groups.setdefault(self.root(item), []).append(item)
        return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])

    def count(self) -> int:
        return len({self.root(item) for item in self._parent})
