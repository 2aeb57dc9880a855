#!/usr/bin/env python3
"""Brute-force reference for `hecke classify --format json`.

Written independently of the Rust code: the component permutation comes
from the parameter relation Q[varpi(i)] = eta_p * Q[i] rather than the
blockwise formula, FLOTW blocks are tested with the three cylindric
conditions written out separately, a-values are evaluated with plain loops
over Fractions, and the Kleshchev count grows its own crystal.

Usage: classify_oracle.py E P CHARGES N   (CHARGES comma separated)
Prints the JSON document to standard output.
"""
import json
import math
import sys
from fractions import Fraction


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def multipartitions(n, r):
    if r == 1:
        for p in partitions(n):
            yield (p,)
        return
    for first in range(n, -1, -1):
        for p in partitions(first):
            for rest in multipartitions(n - first, r - 1):
                yield (p,) + rest


def part(p, k):
    return p[k - 1] if 1 <= k <= len(p) else 0


def canonical_key(lam):
    return (tuple(-sum(c) for c in lam), tuple(tuple(-x for x in c) for c in lam))


class Spec:
    def __init__(self, e, p, charges):
        self.e, self.p, self.v = e, p, list(charges)
        self.delta = len(charges)
        self.f = math.gcd(e, p)
        self.ep = e // self.f
        self.pp = p // self.f
        self.width = self.f * self.delta
        self.r = self.width * self.pp
        self.L = e * self.pp
        self.w = [self.v[k] + s * self.ep for s in range(self.f) for k in range(self.delta)]
        self.m = [Fraction(self.w[j - 1]) - Fraction(j * e, self.width) + e for j in range(1, self.width + 1)]

    def q(self):
        # eta_p^((s-1)p'+j-1) * eta_e^(v_k) as exponents of eta_L
        out = []
        for j in range(1, self.pp + 1):
            for s in range(1, self.f + 1):
                for vk in self.v:
                    out.append((((s - 1) * self.pp + j - 1) * (self.L // self.p) + vk * (self.L // self.e)) % self.L)
        return out

    def varpi(self):
        q = self.q()
        shift = self.L // self.p
        return [q.index((x + shift) % self.L) for x in q]

    def as_json(self):
        return {
            "e": self.e,
            "p": self.p,
            "delta": self.delta,
            "charges": self.v,
            "derived": {"f": self.f, "eprime": self.ep, "pprime": self.pp, "r": self.r, "L": self.L},
        }


def is_flotw(lam, s):
    d, f, v, ep = s.delta, s.f, s.v, s.ep
    at = lambda c, k: part(lam[c - 1], k)
    ks = range(1, sum(map(sum, lam)) + 2)
    for i in range(1, f + 1):
        for j in range(1, d):
            if any(at((i - 1) * d + j, k) < at((i - 1) * d + j + 1, k + v[j] - v[j - 1]) for k in ks):
                return False
    gap = v[0] + ep - v[d - 1]
    for i in range(1, f):
        if any(at(i * d, k) < at(i * d + 1, k + gap) for k in ks):
            return False
    if any(at(f * d, k) < at(1, k + gap) for k in ks):
        return False
    for k in set(x for c in lam for x in c):
        res = set()
        for c in range(len(lam)):
            for a, length in enumerate(lam[c], start=1):
                if length == k:
                    res.add((k - a + s.w[c]) % s.e)
        if len(res) == s.e:
            return False
    return True


def a_block(mu, n, s):
    betas = [[Fraction(part(mu[j], t) - t + n) + s.m[j] for t in range(1, n + 1)] for j in range(s.width)]
    first = Fraction(0)
    for i in range(s.width):
        for j in range(i, s.width):
            for a in betas[i]:
                for b in betas[j]:
                    if i == j and not a > b:
                        continue
                    first += min(a, b)
    second = Fraction(0)
    for i in range(s.width):
        for a in betas[i]:
            for j in range(s.width):
                k = 1
                while k <= a:
                    second += min(Fraction(k), s.m[j])
                    k += 1
    return first - second


def a_value(lam, s):
    n = sum(map(sum, lam))
    return sum((a_block(lam[b * s.width:(b + 1) * s.width], n, s) for b in range(s.pp)), Fraction(0))


def kleshchev_count(n, s):
    """Depth-n vertices of the crystal, ascending reading, RA cancellation."""
    def nodes(lam, i):
        out = []
        for c, p in enumerate(lam):
            for a in range(1, len(p) + 2):
                cur = part(p, a)
                if (a == 1 or part(p, a - 1) > cur) and (cur + 1 - a + s.w[c]) % s.e == i:
                    out.append(("A", c, a))
                if cur > 0 and part(p, a + 1) < cur and (cur - a + s.w[c]) % s.e == i:
                    out.append(("R", c, a))
        return sorted(out, key=lambda x: (x[1], x[2]))

    def good(lam, i):
        stack = []
        for x in nodes(lam, i):
            if x[0] == "A" and stack and stack[-1][0] == "R":
                stack.pop()
            else:
                stack.append(x)
        adds = [x for x in stack if x[0] == "A"]
        return adds[-1] if adds else None

    layer = {tuple(() for _ in range(s.width))}
    sizes = [1]
    for _ in range(n):
        nxt = set()
        for lam in layer:
            for i in range(s.e):
                g = good(lam, i)
                if g:
                    _, c, a = g
                    comp = list(lam[c])
                    if a > len(comp):
                        comp.append(1)
                    else:
                        comp[a - 1] += 1
                    nxt.add(lam[:c] + (tuple(comp),) + lam[c + 1:])
        layer = nxt
        sizes.append(len(layer))
    return sizes


def tuples_count(per_size, n, blocks):
    if blocks == 1:
        return per_size[n]
    return sum(per_size[k] * tuples_count(per_size, n - k, blocks - 1) for k in range(n + 1))


def classify(s, n):
    varpi = s.varpi()
    act = lambda lam: tuple(lam[varpi.index(c)] for c in range(s.r))
    lambda1 = [lam for lam in multipartitions(n, s.r)
               if all(is_flotw(lam[b * s.width:(b + 1) * s.width], s) for b in range(s.pp))]
    members = set(lambda1)
    seen, orbits = set(), []
    for lam in lambda1:
        if lam in seen:
            continue
        orbit = [lam]
        while act(orbit[-1]) != lam:
            orbit.append(act(orbit[-1]))
        assert all(x in members for x in orbit)
        seen.update(orbit)
        orbits.append(orbit)
    labels = []
    for orbit in orbits:
        rep = min(orbit, key=canonical_key)
        o = len(orbit)
        a = a_value(rep, s)
        count = 1 if n == 0 else s.p // o
        for i in range(count):
            labels.append((a, canonical_key(rep), i, rep, o))
    labels.sort(key=lambda t: (t[0], t[1], t[2]))
    klesh = kleshchev_count(n, s)
    return {
        "spec": s.as_json(),
        "n": n,
        "labels": [
            {"lambda": [list(c) for c in rep], "o_lambda": o, "i": i,
             "a_value": f"{a.numerator}/{a.denominator}"}
            for a, _, i, rep, o in labels
        ],
        "checks": {
            "lambda0": tuples_count(klesh, n, s.pp),
            "lambda1": len(lambda1),
            "orbits": len(orbits),
            "total": sum(1 if n == 0 else s.p // len(o) for o in orbits),
        },
    }


def main():
    e, p, charges, n = int(sys.argv[1]), int(sys.argv[2]), sys.argv[3], int(sys.argv[4])
    s = Spec(e, p, [int(x) for x in charges.split(",")])
    print(json.dumps(classify(s, n), indent=2, ensure_ascii=False))


if __name__ == "__main__":
    main()
