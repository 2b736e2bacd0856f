#!/usr/bin/env python3
"""Brute-force seahorse turn-word enumerator, independent of the C++ library.

Traces every {L,R} word of length 1..K (move one unit, then turn), counts
enclosed regions with a cell flood fill, and searches all lattice reflections
(the four reflection matrices combined with every translation that carries the
start vertex to the end vertex) for an edge-set symmetry.

Usage: seahorse_oracle.py K > golden.txt
"""
import itertools
import sys

DIRS = [(1, 0), (0, 1), (-1, 0), (0, -1)]  # E N W S
REFLECTIONS = [((-1, 0), (0, 1)), ((1, 0), (0, -1)), ((0, 1), (1, 0)), ((0, -1), (-1, 0))]


def trace(word):
    x, y, h = 0, 0, 0
    pts = [(0, 0)]
    for t in word:
        dx, dy = DIRS[h]
        x, y = x + dx, y + dy
        pts.append((x, y))
        h = (h + 1) % 4 if t == "L" else (h + 3) % 4
    return pts


def edges_of(pts):
    return {frozenset((a, b)) for a, b in zip(pts, pts[1:])}


def flood_regions(edges):
    xs = [p[0] for e in edges for p in e]
    ys = [p[1] for e in edges for p in e]
    x0, x1, y0, y1 = min(xs) - 1, max(xs), min(ys) - 1, max(ys)
    cells = {(i, j) for i in range(x0, x1 + 1) for j in range(y0, y1 + 1)}

    def nbrs(c):
        i, j = c
        if frozenset(((i + 1, j), (i + 1, j + 1))) not in edges:
            yield (i + 1, j)
        if frozenset(((i, j), (i, j + 1))) not in edges:
            yield (i - 1, j)
        if frozenset(((i, j + 1), (i + 1, j + 1))) not in edges:
            yield (i, j + 1)
        if frozenset(((i, j), (i + 1, j))) not in edges:
            yield (i, j - 1)

    seen = set()
    comps = []
    for c in sorted(cells):
        if c in seen:
            continue
        stack, comp, outside = [c], [], False
        seen.add(c)
        while stack:
            cur = stack.pop()
            comp.append(cur)
            for n in nbrs(cur):
                if n not in cells:
                    outside = True
                    continue
                if n not in seen:
                    seen.add(n)
                    stack.append(n)
        comps.append(outside)
    return sum(1 for o in comps if not o)


def reflect_symmetric(pts, edges):
    s, e = pts[0], pts[-1]
    for (a, b), (c, d) in REFLECTIONS:
        lin = lambda p: (a * p[0] + b * p[1], c * p[0] + d * p[1])
        ls = lin(s)
        t = (e[0] - ls[0], e[1] - ls[1])
        f = lambda p: (lin(p)[0] + t[0], lin(p)[1] + t[1])
        if f(f(s)) != s:
            continue
        if {frozenset(f(p) for p in ed) for ed in edges} == edges:
            return True
    return False


def max_run(word):
    best = run = 0
    prev = None
    for t in word:
        run = run + 1 if t == prev else 1
        prev = t
        best = max(best, run)
    return best


def main():
    k = int(sys.argv[1])
    print("length,word")
    for n in range(1, k + 1):
        for word in itertools.product("LR", repeat=n):
            if max_run(word) > 2:
                continue
            pts = trace(word)
            edges = edges_of(pts)
            if flood_regions(edges) != 1:
                continue
            if reflect_symmetric(pts, edges):
                print(f"{n},{''.join(word)}")


if __name__ == "__main__":
    main()
