#!/usr/bin/env python3
"""Brute-force reference values for the bundled corpus.

Rebuilds every bundled group from its definition in plain Python and
computes invariants by direct enumeration, sharing no code with the Rust
crates. Writes crates/cli/tests/golden/oracle.json and rho_com_24.json.

Subgroups are found as closures of all generating sets of size <= 3
(size <= 2 for A5, all of whose subgroups are 2-generated).
"""

import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "crates" / "cli" / "tests" / "golden"


def ratio(q):
    return f"{q.numerator}/{q.denominator}"


class Group:
    def __init__(self, name, elements, mul):
        self.name = name
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        self.n = n
        self.t = [[self.index[mul(a, b)] for b in self.elements] for a in self.elements]
        self.e = next(i for i in range(n) if all(self.t[i][j] == j for j in range(n)))
        self.inv = [next(j for j in range(n) if self.t[i][j] == self.e) for i in range(n)]

    def closure(self, gens):
        s = {self.e}
        frontier = [self.e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.t[x][g]
                    if y not in s:
                        s.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(s)

    def comm(self, a, b):
        t, i = self.t, self.inv
        return t[t[i[a]][i[b]]][t[a][b]]


def perm_group(name, degree, gens):
    gens = [tuple(g) for g in gens]
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(degree))  # x then g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return Group(name, sorted(seen), lambda a, b: tuple(b[a[i]] for i in range(degree)))


def corpus():
    gs = [Group(f"Z{n}", range(n), lambda a, b, n=n: (a + b) % n) for n in range(1, 17)]
    gs.append(perm_group("V4", 4, [[1, 0, 3, 2], [2, 3, 0, 1]]))
    gs.append(perm_group("S3", 3, [[1, 0, 2], [1, 2, 0]]))
    gs.append(perm_group("D8", 4, [[1, 2, 3, 0], [0, 3, 2, 1]]))
    gs.append(perm_group("Q8", 8, [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]]))
    gs.append(Group("E8", itertools.product(range(2), repeat=3), lambda a, b: tuple((x + y) % 2 for x, y in zip(a, b))))
    gs.append(Group("S3xZ2", itertools.product(itertools.permutations(range(3)), range(2)),
                    lambda a, b: (tuple(b[0][a[0][i]] for i in range(3)), (a[1] + b[1]) % 2)))
    gs.append(perm_group("A4", 4, [[1, 2, 0, 3], [1, 0, 3, 2]]))
    gs.append(perm_group("S4", 4, [[1, 2, 3, 0], [1, 0, 2, 3]]))
    # upper unitriangular 3x3 matrices over GF(3)
    def heis(a, b):
        (x, y, z), (u, v, w) = a, b
        return ((x + u) % 3, (y + v) % 3, (z + w + x * v) % 3)
    gs.append(Group("Heis27", itertools.product(range(3), repeat=3), heis))
    # <a, b | a^9 = b^3 = 1, b^-1 a b = a^4>
    def m27(a, b):
        (x, y), (u, v) = a, b
        return ((x + u * pow(4, y, 9)) % 9, (y + v) % 3)
    gs.append(Group("M27", itertools.product(range(9), range(3)), m27))
    gs.append(perm_group("A5", 5, [[1, 2, 0, 3, 4], [1, 2, 3, 4, 0]]))
    return gs


def classes(g):
    seen, out = set(), []
    for x in range(g.n):
        if x in seen:
            continue
        cls = {g.t[g.t[g.inv[y]][x]][y] for y in range(g.n)}
        seen |= cls
        out.append(cls)
    return out


def commuting_pairs(g):
    return sum(1 for a in range(g.n) for b in range(g.n) if g.t[a][b] == g.t[b][a])


def subgroups(g):
    """Map subgroup -> least number of generators."""
    k_max = 2 if g.name == "A5" else 3
    found = {frozenset([g.e]): 0}
    for k in range(1, k_max + 1):
        for gens in itertools.combinations(range(g.n), k):
            h = g.closure(gens)
            if h not in found:
                found[h] = k
    return found


def is_normal(g, h):
    return all(g.t[g.t[g.inv[y]][x]][y] in h for x in h for y in range(g.n))


def commutator_subgroup(g, a, b):
    return g.closure({g.comm(x, y) for x in a for y in b} | {g.e})


def spread(g):
    m = 1
    for x in range(g.n):
        if x == g.e:
            continue
        conj = {g.t[g.t[g.inv[y]][x]][y] for y in range(g.n)}
        conj |= {g.inv[c] for c in conj}
        depth = {g.e: 0}
        frontier = [g.e]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for a in frontier:
                for c in conj:
                    b = g.t[a][c]
                    if b not in depth:
                        depth[b] = d
                        nxt.append(b)
            frontier = nxt
        m = max(m, max(depth.values()))
    return m


def derived_series(g):
    cur = frozenset(range(g.n))
    out = [len(cur)]
    while True:
        nxt = commutator_subgroup(g, cur, cur)
        if nxt == cur:
            return out
        cur = nxt
        out.append(len(cur))


def analyse(g):
    cls = classes(g)
    pairs = commuting_pairs(g)
    assert pairs == g.n * len(cls), g.name
    rec = {
        "order": g.n,
        "classes": len(cls),
        "pairs": pairs,
        "fraction": ratio(Fraction(pairs, g.n * g.n)),
        "center": sum(1 for c in cls if len(c) == 1),
        "derived_series": derived_series(g),
    }
    if g.n <= 60:
        rec["spread"] = spread(g)
    subs = subgroups(g)
    normals = [h for h in subs if is_normal(g, h)]
    rec["subgroups"] = len(subs)
    rec["normal_subgroups"] = len(normals)
    rec["prufer_rank"] = max(subs.values())
    best = None
    for n_ in normals:
        d = commutator_subgroup(g, n_, n_)
        for k in normals:
            if d <= k <= n_:
                value = len(k) * (g.n // len(n_)) ** 2
                best = value if best is None else min(best, value)
    rec["neumann_value"] = best
    # rho_r: max over H of rank(H / core H); subgroups of H/core are M/core
    # for core <= M <= H, and d(M/core) is the least k with <S, core> = M
    rho_r = 0
    for h in subs:
        core = frozenset.intersection(*[frozenset(g.t[g.t[g.inv[y]][x]][y] for x in h) for y in range(g.n)])
        if core == h:
            continue
        for m in subs:
            if core <= m <= h:
                cands = sorted(m)
                for k in range(0, len(cands) + 1):
                    if any(g.closure(set(s) | core) == m for s in itertools.combinations(cands, k)):
                        rho_r = max(rho_r, k)
                        break
    rec["rho_r"] = rho_r
    return rec


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    results = {}
    for g in corpus():
        print(g.name, file=sys.stderr)
        results[g.name] = analyse(g)
    (OUT / "oracle.json").write_text(json.dumps(results, indent=2, sort_keys=True) + "\n")
    by_order = {}
    for name, r in results.items():
        if r["order"] <= 24:
            by_order.setdefault(r["order"], []).append(r["pairs"])
    table = [{"order": i, "value": min(by_order[i]) if i in by_order else "inf"} for i in range(1, 25)]
    (OUT / "rho_com_24.json").write_text(json.dumps(table, indent=2) + "\n")


if __name__ == "__main__":
    main()
