"""Independent brute-force counts used as frozen values in the test suite.

Works on explicit sets of vectors over GF(p) and shares no code with the
package: subspaces are frozensets of all their elements, spans are closures,
nilpotency is checked on the lower central series of those sets.

    python3 scripts/derive_frozen_values.py
"""

import itertools
import json
import math
import sys


def make(p, n, rules):
    """rules: {(i, j): {k: c}} for i < j; returns bracket on tuples mod p."""
    table = [[(0,) * n for _ in range(n)] for _ in range(n)]
    for (i, j), out in rules.items():
        v = [0] * n
        for k, c in out.items():
            v[k] = c % p
        table[i][j] = tuple(v)
        table[j][i] = tuple((-a) % p for a in v)

    def br(x, y):
        acc = [0] * n
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, c in enumerate(table[i][j]):
                    acc[k] = (acc[k] + a * b * c) % p
        return tuple(acc)

    return br


def span(p, n, gens):
    out = {(0,) * n}
    for g in gens:
        if g in out:
            continue
        out = {tuple((s[k] + c * g[k]) % p for k in range(n)) for s in out for c in range(p)}
    return frozenset(out)


def all_subspaces(p, n):
    vecs = list(itertools.product(range(p), repeat=n))
    zero = frozenset({(0,) * n})
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for s in frontier:
            for v in vecs:
                if v in s:
                    continue
                t = frozenset(tuple((a[k] + c * v[k]) % p for k in range(n)) for a in s for c in range(p))
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


def closed(br, s, t):
    return all(br(a, b) in t for a in s for b in s)


def is_ideal(br, full, s):
    return all(br(a, b) in s for a in s for b in full)


def bracket_set(p, n, br, s, t):
    return span(p, n, [br(a, b) for a in s for b in t])


def nilpotent(p, n, br, s):
    cur = s
    for _ in range(n + 1):
        if len(cur) == 1:
            return True
        cur = bracket_set(p, n, br, cur, s)
    return len(cur) == 1


def abelian(br, s):
    return all(not any(br(a, b)) for a in s for b in s)


def analyse(name, p, n, rules):
    br = make(p, n, rules)
    full = frozenset(itertools.product(range(p), repeat=n))
    subs = [s for s in all_subspaces(p, n) if closed(br, s, s)]
    ideals = [s for s in subs if is_ideal(br, full, s)]
    nil = [s for s in subs if nilpotent(p, n, br, s)]
    proper = [s for s in subs if s != full]
    maximal = [s for s in proper if not any(s < t for t in proper)]
    frat = full
    for m in maximal:
        frat = frat & m
    maxnil = [s for s in nil if not any(s < t for t in nil)]
    nonzero = [s for s in ideals if len(s) > 1]
    minimal = [s for s in nonzero if not any(t < s for t in nonzero)]
    sq_zero = 0
    for c in full:
        ok = True
        for x in itertools.product(range(p), repeat=n):
            if any(br(br(x, c), c)):
                ok = False
                break
        sq_zero += ok
    return {
        "name": name, "p": p, "dim": n,
        "subalgebras": len(subs), "ideals": len(ideals), "nilpotent_subalgebras": len(nil),
        "maximal_subalgebras": len(maximal), "maximal_nilpotent": len(maxnil),
        "minimal_ideals": len(minimal), "frattini_dim": round(math.log(len(frat), p)),
        "is_A": all(abelian(br, s) for s in nil), "square_zero_elements": sq_zero,
    }


def example_2_4_rules(p):
    # basis e, f, x_1..x_p; [x_i, e] = x_(i+1), [x_i, f] = (i - 1) x_i, [e, f] = e
    rules = {(0, 1): {0: 1}}
    for i in range(p):
        rules[(0, 2 + i)] = {2 + (i + 1) % p: -1}
        if i:
            rules[(1, 2 + i)] = {2 + i: -i}
    return rules


def frattini_of_subalgebra(p, n, rules, gens):
    """Intersection of the maximal subalgebras of the subalgebra spanned by gens."""
    br = make(p, n, rules)
    whole = span(p, n, gens)
    inside = [s for s in all_subspaces(p, n) if s <= whole and s != whole and closed(br, s, s)]
    maximal = [s for s in inside if not any(s < t for t in inside)]
    frat = whole
    for m in maximal:
        frat = frat & m
    return sorted(v for v in frat if any(v))


def unit(n, i):
    return tuple(int(k == i) for k in range(n))


CASES = [
    ("example_2_4", 2, 4, example_2_4_rules(2)),
    ("example_2_4", 3, 5, example_2_4_rules(3)),
    ("heisenberg", 2, 3, {(0, 1): {2: 1}}),
    ("heisenberg", 3, 3, {(0, 1): {2: 1}}),
    ("two_dim", 5, 2, {(0, 1): {0: 1}}),
    ("two_dim", 3, 2, {(0, 1): {0: 1}}),
]


if __name__ == "__main__":
    json.dump([analyse(*c) for c in CASES], sys.stdout, indent=1)
    print()
    # phi(Fe + F^p) inside the worked example
    for q in (2, 3):
        n = q + 2
        gens = [unit(n, 0)] + [unit(n, 2 + i) for i in range(q)]
        print(q, frattini_of_subalgebra(q, n, example_2_4_rules(q), gens))
