"""Bitmask tables for finite bispaces.

Everything is precomputed over all ``2**n`` subsets.  Tables that depend on
one structure only are cached per ``(n, open sets)`` so a sweep over all
ordered pairs of structures builds each of them once.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

ORDERS = ((1, 2), (2, 1))


def popcount(m: int) -> int:
    return bin(m).count("1")


def submasks(m: int):
    sub = m
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & m


def superset_meet(n: int, members) -> list[int]:
    """``t[m]`` = intersection of all members containing ``m`` (carrier if none)."""
    full = (1 << n) - 1
    table = [full] * (1 << n)
    for m in members:
        table[m] = m
    for b in range(n):
        bit = 1 << b
        for m in range(full, -1, -1):
            if not m & bit:
                table[m] &= table[m | bit]
    return table


def meet_closure(family) -> frozenset[int]:
    """Close a finite family under pairwise (hence arbitrary) intersection."""
    out = set(family)
    frontier = list(out)
    while frontier:
        new = []
        for a in frontier:
            for b in list(out):
                c = a & b
                if c not in out:
                    out.add(c)
                    new.append(c)
        frontier = new
    return frozenset(out)


class KappaTables:
    """Closure and semi-open data of one finite structure."""

    def __init__(self, n: int, opens: tuple[int, ...]):
        self.n = n
        self.full = full = (1 << n) - 1
        self.opens = opens
        self.closed = tuple(sorted(full ^ g for g in opens))
        self.cl = superset_meet(n, self.closed)
        so = set()
        for g in opens:
            for extra in submasks(self.cl[g] & ~g):
                so.add(g | extra)
        self.so = tuple(sorted(so))
        self.so_flags = [False] * (full + 1)
        for m in self.so:
            self.so_flags[m] = True
        self.sc_flags = [self.so_flags[full ^ m] for m in range(full + 1)]
        self.sc = tuple(m for m in range(full + 1) if self.sc_flags[m])
        self.scl = superset_meet(n, self.sc)
        self.sker = superset_meet(n, self.so)

    def interior(self, m: int) -> int:
        return self.full ^ self.cl[self.full ^ m]

    @cached_property
    def so_supersets(self) -> list[tuple[int, ...]]:
        return [tuple(g for g in self.so if g & m == m) for m in range(self.full + 1)]

    def derived(self, m: int) -> int:
        """Points each of whose semi-open neighbourhoods meets ``m`` off the point."""
        out = 0
        for x in range(self.n):
            bit = 1 << x
            rest = m & ~bit
            if all(u & rest for u in self.so if u & bit):
                out |= bit
        return out

    def separated(self, e: int, f: int) -> bool:
        return any(g & f == 0 for g in self.so_supersets[e]) and any(
            h & e == 0 for h in self.so_supersets[f]
        )


@lru_cache(maxsize=8192)
def kappa_tables(n: int, opens: tuple[int, ...]) -> KappaTables:
    return KappaTables(n, opens)


class FiniteBispace:
    """All tables of one finite bispace; ``i`` and ``j`` are 1 or 2."""

    def __init__(self, n: int, opens1: tuple[int, ...], opens2: tuple[int, ...]):
        self.n = n
        self.full = (1 << n) - 1
        self.size = self.full + 1
        self.k = (None, kappa_tables(n, opens1), kappa_tables(n, opens2))

    # -- per-structure shortcuts

    def so(self, i: int, m: int) -> bool:
        return self.k[i].so_flags[m]

    def sc(self, i: int, m: int) -> bool:
        return self.k[i].sc_flags[m]

    def scl(self, i: int, m: int) -> int:
        return self.k[i].scl[m]

    def sker(self, i: int, m: int) -> int:
        return self.k[i].sker[m]

    def sint(self, i: int, m: int) -> int:
        return self.full ^ self.k[i].scl[self.full ^ m]

    # -- (j-i)sg*-closed sets: open side j, closed side i

    @cached_property
    def _sg(self) -> dict[tuple[int, int], list[int | None]]:
        out = {}
        for j, i in ORDERS:
            sc = self.k[i].sc_flags
            sker = self.k[j].sker
            table: list[int | None] = []
            for m in range(self.size):
                cands = sorted(submasks(sker[m] & ~m), key=lambda s: (popcount(s), s))
                table.append(next((m | s for s in cands if sc[m | s]), None))
            out[(j, i)] = table
        return out

    def sg_witness(self, j: int, i: int, m: int) -> int | None:
        return self._sg[(j, i)][m]

    def is_sg(self, j: int, i: int, m: int) -> bool:
        return self._sg[(j, i)][m] is not None

    def sg_closed_by_definition(self, j: int, i: int, m: int) -> bool:
        """Quantify over semi-open supersets directly instead of the kernel."""
        uppers = self.k[j].so_supersets[m]
        return any(
            f & m == m and all(f & o == f for o in uppers) for f in self.k[i].sc
        )

    def sg_open(self, j: int, i: int, m: int) -> bool:
        return self.is_sg(j, i, self.full ^ m)

    def sg_open_by_inner_sets(self, j: int, i: int, m: int) -> bool:
        """Semi-open V inside ``m`` holding every semi-closed subset of ``m``."""
        inner = 0
        for p in self.k[j].sc:
            if p & m == p:
                inner |= p
        return any(v & m == v and v & inner == inner for v in self.k[i].so)

    @cached_property
    def _sgcl(self) -> dict[tuple[int, int], list[int]]:
        return {
            (j, i): superset_meet(self.n, [m for m in range(self.size) if self.is_sg(j, i, m)])
            for j, i in ORDERS
        }

    def sgcl(self, j: int, i: int, m: int) -> int:
        return self._sgcl[(j, i)][m]

    # -- derived families

    def g_family(self, i: int) -> frozenset[int]:
        return frozenset(a for a in range(self.size) if self.sc(i, self.scl(i, self.full ^ a)))

    def g_prime_family(self, i: int) -> frozenset[int]:
        j = 3 - i
        return frozenset(
            a for a in range(self.size) if self.is_sg(j, i, self.sgcl(j, i, self.full ^ a))
        )

    def star_family(self, i: int) -> frozenset[int]:
        j = 3 - i
        return frozenset(
            d for d in range(self.size) if self.sgcl(j, i, self.full ^ d) == self.full ^ d
        )

    def subspace(self, b: int) -> tuple[FiniteBispace, callable]:
        """Relative bispace on ``b`` and the mask compressor into it."""
        positions = [x for x in range(self.n) if b >> x & 1]

        def squeeze(m: int) -> int:
            out = 0
            for k, x in enumerate(positions):
                if m >> x & 1:
                    out |= 1 << k
            return out

        fams = [
            tuple(sorted({squeeze(u & b) for u in self.k[i].opens})) for i in (1, 2)
        ]
        return FiniteBispace(len(positions), fams[0], fams[1]), squeeze
