"""Textbook-definition oracles for finite bispaces (no shared code with the package).

Sets are Python frozensets of point indices; structures are sets of open sets.
"""

from __future__ import annotations

from functools import reduce
from itertools import chain, combinations


class Oracle:
    def __init__(self, n: int, opens1, opens2):
        self.n = n
        self.X = frozenset(range(n))
        self.subsets = [
            frozenset(c) for c in chain.from_iterable(combinations(range(n), r) for r in range(n + 1))
        ]
        self.opens = {1: [self.from_bits(m) for m in opens1], 2: [self.from_bits(m) for m in opens2]}
        self.so = {i: [s for s in self.subsets if self._semi_open(i, s)] for i in (1, 2)}
        self.sc = {i: [self.X - s for s in self.so[i]] for i in (1, 2)}

    def from_bits(self, m: int) -> frozenset:
        return frozenset(x for x in range(self.n) if m >> x & 1)

    @staticmethod
    def bits(s) -> int:
        return sum(1 << x for x in s)

    def meet(self, sets) -> frozenset:
        return reduce(frozenset.__and__, sets, self.X)

    def closure(self, i: int, s) -> frozenset:
        return self.meet(self.X - g for g in self.opens[i] if s <= self.X - g)

    def _semi_open(self, i: int, s) -> bool:
        return any(g <= s <= self.closure(i, g) for g in self.opens[i])

    def scl(self, i: int, s) -> frozenset:
        return self.meet(f for f in self.sc[i] if s <= f)

    def sker(self, i: int, s) -> frozenset:
        return self.meet(u for u in self.so[i] if s <= u)

    def sint(self, i: int, s) -> frozenset:
        return frozenset().union(*[u for u in self.so[i] if u <= s])

    def derived(self, i: int, s) -> frozenset:
        return frozenset(x for x in self.X if all(u & (s - {x}) for u in self.so[i] if x in u))

    def separated(self, i: int, e, f) -> bool:
        return any(e <= g and not g & f for g in self.so[i]) and any(
            f <= h and not h & e for h in self.so[i]
        )

    def sg_closed(self, j: int, i: int, b) -> bool:
        """Some semi-κᵢ-closed F with B ⊆ F ⊆ U for every semi-κⱼ-open U ⊇ B."""
        uppers = [u for u in self.so[j] if b <= u]
        return any(b <= f and all(f <= u for u in uppers) for f in self.sc[i])

    def sg_witness(self, j: int, i: int, b):
        uppers = [u for u in self.so[j] if b <= u]
        cands = [f for f in self.sc[i] if b <= f and all(f <= u for u in uppers)]
        return min(cands, key=lambda f: (len(f), self.bits(f))) if cands else None

    def sep(self, i: int, x: int, y: int) -> bool:
        return any(x in u and y not in u for u in self.so[i])

    def pairs(self):
        return combinations(range(self.n), 2)
