"""Disjoint sets carrying a parity bit along every parent link."""

from __future__ import annotations


class ParityUnionFind:
    """Union-find over ``0..n-1`` maintaining ``parity(x) xor parity(root)``.

    ``union(x, y, p)`` records the constraint ``value(x) xor value(y) == p``
    and reports whether it is consistent with everything recorded so far.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.to_parent = [0] * n

    def find(self, x: int) -> tuple[int, int]:
        """Return ``(root, parity of x relative to root)``."""
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # compress; walk back from the node nearest the root
        acc = 0
        for node in reversed(path):
            acc ^= self.to_parent[node]
            self.to_parent[node] = acc
            self.parent[node] = root
        return root, (self.to_parent[path[0]] if path else 0)

    def union(self, x: int, y: int, parity: int) -> bool:
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return (px ^ py) == parity
        if self.rank[rx] < self.rank[ry]:
            rx, ry, px, py = ry, rx, py, px
        self.parent[ry] = rx
        self.to_parent[ry] = px ^ py ^ parity
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True
