"""Independent check of the exact M_2 law.

Enumerates rooted spanning trees of the dual graph as parent-edge choices
(one of six faces per cube, root at infinity), reads off the set of cubes
whose tree path to infinity crosses the flat initial surface an odd number
of times, and sizes S0 + sum of those cube boundaries.
"""
import itertools
from collections import Counter
from fractions import Fraction
import sys

n = int(sys.argv[1]) if len(sys.argv) > 1 else 2
h = n // 2
cubes = list(itertools.product(range(n), repeat=3))
cid = {c: i for i, c in enumerate(cubes)}
INF = -1


def faces_of(c):
    out = []
    for ax in range(3):
        for d in (0, 1):
            a = list(c)
            a[ax] += d
            nb = list(c)
            nb[ax] += 1 if d else -1
            other = cid.get(tuple(nb), INF)
            out.append(((ax, tuple(a)), other))
    return out


S0 = {(2, (x, y, h)) for x in range(n) for y in range(n)}
choices = [faces_of(c) for c in cubes]
hist = Counter()
total = 0
for pick in itertools.product(range(6), repeat=len(cubes)):
    parent = [choices[i][pick[i]] for i in range(len(cubes))]
    parity = [None] * len(cubes)
    ok = True
    for i in range(len(cubes)):
        path = []
        v = i
        seen = set()
        while v != INF and parity[v] is None:
            if v in seen:
                ok = False
                break
            seen.add(v)
            path.append(v)
            v = parent[v][1]
        if not ok:
            break
        acc = 0 if v == INF else parity[v]
        for u in reversed(path):
            acc ^= 1 if parent[u][0] in S0 else 0
            parity[u] = acc
    if not ok:
        continue
    total += 1
    surf = set(S0)
    for i, c in enumerate(cubes):
        if parity[i]:
            for f, _ in choices[i]:
                surf ^= {f}
    hist[len(surf)] += 1

print("trees", total)
for m in sorted(hist):
    print(m, hist[m], Fraction(hist[m], total))
