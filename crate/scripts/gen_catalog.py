#!/usr/bin/env python3
"""Regenerate crates/core/data/groups.json.

Every group of order <= 24 (74 isomorphism classes) plus A5, each stored as
permutation generators. Groups without a convenient small permutation
representation are emitted through their right regular representation.
Permutations compose left to right: (p*q)[i] = q[p[i]].
"""
import json
import os
import sys


def closure(identity, gens, mul):
    elems = [identity]
    seen = {identity}
    i = 0
    while i < len(elems):
        e = elems[i]
        for g in gens:
            x = mul(e, g)
            if x not in seen:
                seen.add(x)
                elems.append(x)
        i += 1
    return elems


class Abstract:
    def __init__(self, identity, gens, mul):
        self.identity = identity
        self.gens = gens
        self.mul = mul
        self.elems = closure(identity, gens, mul)

    def order(self):
        return len(self.elems)

    def regular(self):
        index = {e: i for i, e in enumerate(self.elems)}
        perms = [[index[self.mul(e, g)] for e in self.elems] for g in self.gens]
        return len(self.elems), perms


def cyclic(n):
    return Abstract(0, [1 % n] if n > 1 else [0], lambda a, b: (a + b) % n)


def metacyclic(m, n, k, t):
    """<x, y | x^m, y^n = x^t, y x y^-1 = x^k>, elements x^a y^b."""
    assert pow(k, n, m) == 1 % m and (t * k - t) % m == 0

    def mul(u, v):
        a, b = u
        c, d = v
        e = (a + pow(k, b, m) * c) % m
        f = b + d
        if f >= n:
            e = (e + t) % m
            f -= n
        return (e, f)

    return Abstract((0, 0), [(1 % m, 0), (0, 1 % n)], mul)


def direct(g1, g2):
    def mul(u, v):
        return (g1.mul(u[0], v[0]), g2.mul(u[1], v[1]))

    gens = [(g, g2.identity) for g in g1.gens] + [(g1.identity, h) for h in g2.gens]
    return Abstract((g1.identity, g2.identity), gens, mul)


def perm_mul(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def perms(degree, gens):
    return Abstract(tuple(range(degree)), [tuple(g) for g in gens], perm_mul)


def cyclic_by(m, base, units):
    """C_m x| base, generator j of base acting on C_m by multiplication by units[j]."""
    # map every base element to its unit by walking the closure
    unit = {base.identity: 1}
    queue = [base.identity]
    while queue:
        e = queue.pop(0)
        for g, u in zip(base.gens, units):
            x = base.mul(e, g)
            if x not in unit:
                unit[x] = (unit[e] * u) % m
                queue.append(x)

    def mul(a, b):
        return ((a[0] + unit[a[1]] * b[0]) % m, base.mul(a[1], b[1]))

    gens = [(1, base.identity)] + [(0, g) for g in base.gens]
    return Abstract((0, base.identity), gens, mul)


def vec_by(l, d, base, mats):
    """F_l^d x| base, generator j acting by mats[j] on column vectors."""
    def apply(mat, v):
        return tuple(sum(mat[i][j] * v[j] for j in range(d)) % l for i in range(d))

    def matmul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(d)) % l for j in range(d)) for i in range(d))

    ident = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    act = {base.identity: ident}
    queue = [base.identity]
    while queue:
        e = queue.pop(0)
        for g, m in zip(base.gens, mats):
            x = base.mul(e, g)
            if x not in act:
                act[x] = matmul(act[e], tuple(tuple(r) for r in m))
                queue.append(x)

    def mul(a, b):
        w = apply(act[a[1]], b[0])
        return (tuple((a[0][i] + w[i]) % l for i in range(d)), base.mul(a[1], b[1]))

    zero = tuple([0] * d)
    gens = [(tuple(int(i == j) for i in range(d)), base.identity) for j in range(d)]
    gens += [(zero, g) for g in base.gens]
    return Abstract((zero, base.identity), gens, mul)


def matrices_mod(n, gens):
    """Closure of 2x2 matrices over Z/n, flattened as 4-tuples."""
    def mul(a, b):
        return (
            (a[0] * b[0] + a[1] * b[2]) % n,
            (a[0] * b[1] + a[1] * b[3]) % n,
            (a[2] * b[0] + a[3] * b[2]) % n,
            (a[2] * b[1] + a[3] * b[3]) % n,
        )

    return Abstract((1, 0, 0, 1), gens, mul)


def gaussian_matrices(gens):
    """Closure of 2x2 matrices with entries in {0, +-1, +-i}, i encoded mod 4 as powers."""
    # entry: None for zero, else exponent e meaning i^e
    def emul(x, y):
        if x is None or y is None:
            return None
        return (x + y) % 4

    def eadd(x, y):
        if x is None:
            return y
        if y is None:
            return x
        if (x - y) % 4 == 2:
            return None
        raise ValueError("entries leave the monomial group")

    def mul(a, b):
        return (
            eadd(emul(a[0], b[0]), emul(a[1], b[2])),
            eadd(emul(a[0], b[1]), emul(a[1], b[3])),
            eadd(emul(a[2], b[0]), emul(a[3], b[2])),
            eadd(emul(a[2], b[1]), emul(a[3], b[3])),
        )

    return Abstract((0, None, None, 0), gens, mul)


def catalog():
    c = cyclic
    out = []

    def add(name, grp, expect):
        assert grp.order() == expect, (name, grp.order(), expect)
        out.append((name, grp))

    s3 = metacyclic(3, 2, 2, 0)
    d8 = metacyclic(4, 2, 3, 0)
    q8 = metacyclic(4, 2, 3, 2)
    dic3 = metacyclic(3, 4, 2, 0)
    a4 = perms(4, [[1, 2, 0, 3], [1, 0, 3, 2]])
    s4 = perms(4, [[1, 2, 3, 0], [1, 0, 2, 3]])
    v4 = direct(c(2), c(2))

    add("C1", c(1), 1)
    add("C2", c(2), 2)
    add("C3", c(3), 3)
    add("C4", c(4), 4)
    add("C2xC2", v4, 4)
    add("C5", c(5), 5)
    add("C6", c(6), 6)
    add("S3", s3, 6)
    add("C7", c(7), 7)
    add("C8", c(8), 8)
    add("C4xC2", direct(c(4), c(2)), 8)
    add("C2xC2xC2", direct(v4, c(2)), 8)
    add("D8", d8, 8)
    add("Q8", q8, 8)
    add("C9", c(9), 9)
    add("C3xC3", direct(c(3), c(3)), 9)
    add("C10", c(10), 10)
    add("D10", metacyclic(5, 2, 4, 0), 10)
    add("C11", c(11), 11)
    add("C12", c(12), 12)
    add("C6xC2", direct(c(6), c(2)), 12)
    add("A4", a4, 12)
    add("D12", metacyclic(6, 2, 5, 0), 12)
    add("Dic3", dic3, 12)
    add("C13", c(13), 13)
    add("C14", c(14), 14)
    add("D14", metacyclic(7, 2, 6, 0), 14)
    add("C15", c(15), 15)
    # order 16
    add("C16", c(16), 16)
    add("C4xC4", direct(c(4), c(4)), 16)
    add("C2^2:C4", vec_by(2, 2, c(4), [[[0, 1], [1, 0]]]), 16)
    add("C4:C4", metacyclic(4, 4, 3, 0), 16)
    add("C8xC2", direct(c(8), c(2)), 16)
    add("M16", metacyclic(8, 2, 5, 0), 16)
    add("D16", metacyclic(8, 2, 7, 0), 16)
    add("SD16", metacyclic(8, 2, 3, 0), 16)
    add("Q16", metacyclic(8, 2, 7, 4), 16)
    add("C4xC2xC2", direct(direct(c(4), c(2)), c(2)), 16)
    add("D8xC2", direct(d8, c(2)), 16)
    add("Q8xC2", direct(q8, c(2)), 16)
    add("Pauli", gaussian_matrices([(None, 0, 0, None), (0, None, None, 2), (1, None, None, 1)]), 16)
    add("C2^4", direct(direct(v4, c(2)), c(2)), 16)
    add("C17", c(17), 17)
    # order 18
    add("C18", c(18), 18)
    add("C6xC3", direct(c(6), c(3)), 18)
    add("D18", metacyclic(9, 2, 8, 0), 18)
    add("S3xC3", direct(s3, c(3)), 18)
    add("C3^2:C2", vec_by(3, 2, c(2), [[[2, 0], [0, 2]]]), 18)
    add("C19", c(19), 19)
    # order 20
    add("C20", c(20), 20)
    add("C10xC2", direct(c(10), c(2)), 20)
    add("D20", metacyclic(10, 2, 9, 0), 20)
    add("Dic5", metacyclic(5, 4, 4, 0), 20)
    add("F20", metacyclic(5, 4, 2, 0), 20)
    add("C21", c(21), 21)
    add("C7:C3", metacyclic(7, 3, 2, 0), 21)
    add("C22", c(22), 22)
    add("D22", metacyclic(11, 2, 10, 0), 22)
    add("C23", c(23), 23)
    # order 24
    add("C3:C8", metacyclic(3, 8, 2, 0), 24)
    add("C24", c(24), 24)
    add("SL(2,3)", matrices_mod(3, [(1, 1, 0, 1), (1, 0, 1, 1)]), 24)
    add("Dic6", metacyclic(12, 2, 11, 6), 24)
    add("C4xS3", direct(c(4), s3), 24)
    add("D24", metacyclic(12, 2, 11, 0), 24)
    add("C2xDic3", direct(c(2), dic3), 24)
    add("C3:D8", cyclic_by(3, d8, [2, 1]), 24)
    add("C12xC2", direct(c(12), c(2)), 24)
    add("C3xD8", direct(c(3), d8), 24)
    add("C3xQ8", direct(c(3), q8), 24)
    add("S4", s4, 24)
    add("C2xA4", direct(c(2), a4), 24)
    add("C2xC2xS3", direct(v4, s3), 24)
    add("C2xC2xC6", direct(v4, c(6)), 24)
    # beyond the small-order range
    add("A5", perms(5, [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]]), 60)
    return out


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    target = os.path.join(here, "..", "crates", "core", "data", "groups.json")
    entries = []
    for name, grp in catalog():
        if isinstance(grp.identity, tuple) and all(isinstance(x, int) for x in grp.identity) \
                and grp.gens and all(isinstance(g, tuple) and len(g) == len(grp.identity) for g in grp.gens) \
                and grp.mul is perm_mul:
            degree, gens = len(grp.identity), [list(g) for g in grp.gens]
        else:
            degree, gens = grp.regular()
        entries.append({"name": name, "order": grp.order(), "degree": degree, "generators": gens})
    counts = {}
    for e in entries:
        counts[e["order"]] = counts.get(e["order"], 0) + 1
    print(len(entries), "groups;", dict(sorted(counts.items())), file=sys.stderr)
    with open(target, "w") as f:
        f.write("[\n")
        f.write(",\n".join("  " + json.dumps(e, separators=(", ", ": ")) for e in entries))
        f.write("\n]\n")


if __name__ == "__main__":
    main()
