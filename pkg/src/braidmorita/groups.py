"""Finite groups by multiplication table: subgroups, centralizers, conjugation."""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterable, Sequence


class GroupError(ValueError):
    pass


class GroupTable:
    """A finite group on elements ``0..order-1``.

    ``table[a][b]`` is the index of the product ``ab``.  The group axioms are
    verified on construction.
    """

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                 name: str = "G"):
        self.order = n = len(table)
        if n == 0 or any(len(r) != n for r in table):
            raise GroupError("multiplication table must be square and nonempty")
        self.table = [list(map(int, r)) for r in table]
        if any(not 0 <= x < n for r in self.table for x in r):
            raise GroupError("table entry out of range")
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise GroupError("need one label per element")
        self.name = name
        t = self.table
        ident = [e for e in range(n) if all(t[e][a] == a == t[a][e] for a in range(n))]
        if not ident:
            raise GroupError("no identity element")
        self.identity = ident[0]
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError(f"not associative at {(a, b, c)}")
        self._inv = []
        for a in range(n):
            inv = [b for b in range(n) if t[a][b] == self.identity]
            if len(inv) != 1 or t[inv[0]][a] != self.identity:
                raise GroupError(f"element {self.labels[a]} has no inverse")
            self._inv.append(inv[0])

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, g: int, a: int) -> int:
        """g a g^-1"""
        return self.table[self.table[g][a]][self._inv[g]]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown element {label!r} of {self.name}; have {self.labels}") from None

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_central(self, a: int) -> bool:
        return all(self.table[a][b] == self.table[b][a] for b in range(self.order))

    def center(self) -> list[int]:
        return [a for a in range(self.order) if self.is_central(a)]

    def central_involutions(self) -> list[int]:
        """Central u with u^2 = 1 (the identity included)."""
        return [u for u in self.center() if self.table[u][u] == self.identity]

    def closure(self, gens: Iterable[int]) -> tuple[int, ...]:
        elems = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
            frontier = new
        return tuple(sorted(elems))

    def is_subgroup(self, elems: Iterable[int]) -> bool:
        s = set(elems)
        if self.identity not in s:
            return False
        return all(self.table[a][b] in s for a in s for b in s)

    def centralizer(self, elems: Iterable[int]) -> tuple[int, ...]:
        elems = list(elems)
        return tuple(a for a in range(self.order)
                     if all(self.table[a][x] == self.table[x][a] for x in elems))

    def conjugate_set(self, g: int, elems: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.conj(g, x) for x in elems))

    def label_set(self, elems: Iterable[int]) -> list[str]:
        return [self.labels[x] for x in elems]

    def to_dict(self) -> dict:
        return {"name": self.name, "order": self.order, "table": self.table, "labels": self.labels}

    @classmethod
    def from_dict(cls, d: dict) -> "GroupTable":
        g = cls(d["table"], d.get("labels"), d.get("name", "G"))
        if "order" in d and d["order"] != g.order:
            raise GroupError("declared order does not match the table")
        return g

    def __repr__(self) -> str:
        return f"GroupTable({self.name}, order={self.order})"


def enumerate_subgroups(G: GroupTable) -> list[tuple[int, ...]]:
    """All subgroups as sorted element tuples, ordered by (size, elements).

    Closes every generating set of size <= 2, then closes unions of found
    subgroups with single elements until nothing new appears.
    """
    found = {G.closure([])}
    for k in (1, 2):
        for gens in combinations(range(G.order), k):
            found.add(G.closure(gens))
    changed = True
    while changed:
        changed = False
        for H in list(found):
            for a in range(G.order):
                if a in H:
                    continue
                K = G.closure(H + (a,))
                if K not in found:
                    found.add(K)
                    changed = True
    return sorted(found, key=lambda s: (len(s), s))


def _perm_group(perms: list[tuple[int, ...]], labels: list[str], name: str) -> GroupTable:
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = p(q(x)): right factor acts first
    table = [[index[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms]
    return GroupTable(table, labels, name)


def cyclic(n: int) -> GroupTable:
    labels = ["e"] + (["g"] if n > 1 else []) + [f"g^{k}" for k in range(2, n)]
    return GroupTable([[(a + b) % n for b in range(n)] for a in range(n)], labels, f"C{n}")


def klein_four() -> GroupTable:
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    table = [[elems.index(((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)) for b in elems] for a in elems]
    return GroupTable(table, ["e", "a", "b", "ab"], "C2xC2")


def symmetric3() -> GroupTable:
    # cycle notation on {1,2,3}; stored as permutations of (0,1,2)
    named = {
        "e": (0, 1, 2),
        "(12)": (1, 0, 2),
        "(13)": (2, 1, 0),
        "(23)": (0, 2, 1),
        "(123)": (1, 2, 0),
        "(132)": (2, 0, 1),
    }
    labels = list(named)
    return _perm_group([named[k] for k in labels], labels, "S3")


def symmetric(n: int) -> GroupTable:
    perms = sorted(permutations(range(n)))
    return _perm_group(perms, ["".join(str(x + 1) for x in p) for p in perms], f"S{n}")


def builtin_groups() -> list[GroupTable]:
    return [cyclic(2), cyclic(3), cyclic(4), klein_four(), symmetric3()]


def builtin_group(name: str) -> GroupTable:
    for G in builtin_groups():
        if G.name.lower() == name.lower():
            return G
    raise KeyError(f"unknown builtin group {name!r}; have {[G.name for G in builtin_groups()]}")
