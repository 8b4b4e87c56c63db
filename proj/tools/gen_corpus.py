#!/usr/bin/env python3
"""Writes the primitive-group corpus to data/corpus/*.grp.

Every group is built from explicit generators (affine and projective
actions over small finite fields, subset actions, product-action wreath
products, Mathieu generator words). The stated order comes from sympy's
Schreier-Sims, independently of the C++ code that later checks it.

Usage: gen_corpus.py [output_dir]
"""

import itertools
import random
import sys
from pathlib import Path

from sympy.combinatorics import Permutation, PermutationGroup

# Finite fields ------------------------------------------------------------------

IRREDUCIBLE = {  # coefficients, constant term first, monic
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
}


class Field:
    """GF(p^k), elements encoded as integers 0..q-1 (base-p digits)."""

    def __init__(self, p, k=1):
        self.p, self.k, self.q = p, k, p**k
        self.mod = IRREDUCIBLE.get((p, k))
        self._mul = [[self._slow_mul(a, b) for b in range(self.q)] for a in range(self.q)]
        self.inv = [0] * self.q
        for a in range(1, self.q):
            self.inv[a] = next(b for b in range(1, self.q) if self._mul[a][b] == 1)
        self.primitive = next(a for a in range(2 if self.q > 2 else 1, self.q) if self._order(a) == self.q - 1)

    def digits(self, a):
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def undigits(self, ds):
        return sum(d * self.p**i for i, d in enumerate(ds))

    def add(self, a, b):
        return self.undigits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.undigits([(-x) % self.p for x in self.digits(a)])

    def mul(self, a, b):
        return self._mul[a][b]

    def frobenius(self, a):
        r = 1
        for _ in range(self.p):
            r = self.mul(r, a)
        return r

    def _slow_mul(self, a, b):
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % self.p
        for d in range(2 * self.k - 1, self.k - 1, -1):
            c = prod[d]
            if c:
                for i, m in enumerate(self.mod):
                    prod[d - self.k + i] = (prod[d - self.k + i] - c * m) % self.p
        return self.undigits(prod[: self.k])

    def _order(self, a):
        x, n = a, 1
        while x != 1:
            x, n = self.mul(x, a), n + 1
            if n > self.q:
                return 0
        return n


# Group constructions -----------------------------------------------------------


def perm(images):
    return Permutation(list(images))


def cyclic(p):
    return p, [perm([(i + 1) % p for i in range(p)])]


def dihedral(p):
    return p, [perm([(i + 1) % p for i in range(p)]), perm([(-i) % p for i in range(p)])]


def affine_line(F, mult_order=None, frobenius=False):
    """x -> x + 1 and x -> w x on GF(q); w generates the subgroup of the given order."""
    q = F.q
    w = F.primitive
    if mult_order is not None:
        e = (q - 1) // mult_order
        for _ in range(e - 1):
            w = F.mul(w, F.primitive)
    gens = [perm([F.add(x, 1) for x in range(q)]), perm([F.mul(w, x) for x in range(q)])]
    if frobenius:
        gens.append(perm([F.frobenius(x) for x in range(q)]))
    return q, gens


def affine_space(p, d):
    """AGL(d, p) on p^d vectors: a translation plus generators of GL(d, p)."""
    n = p**d
    vec = lambda i: [(i // p**j) % p for j in range(d)]
    idx = lambda v: sum(c * p**j for j, c in enumerate(v))

    def linear(mat):
        return perm([idx([sum(mat[r][c] * vec(i)[c] for c in range(d)) % p for r in range(d)]) for i in range(n)])

    translation = perm([idx([(vec(i)[0] + 1) % p] + vec(i)[1:]) for i in range(n)])
    # GL(d, p) = <diag(w, 1, ..., 1), the companion-style matrix below>
    w = next(a for a in range(1, p) if all(pow(a, k, p) != 1 for k in range(1, p - 1))) if p > 2 else 1
    diag = [[(w if r == c == 0 else int(r == c)) for c in range(d)] for r in range(d)]
    # an elementary transvection together with the d-cycle of coordinates
    shift = [[int(r == (c + 1) % d) for c in range(d)] for r in range(d)]
    transvection = [[int(r == c) + int(r == 0 and c == 1) for c in range(d)] for r in range(d)]
    gens = [translation, linear(shift), linear(transvection)]
    if p > 2:
        gens.append(linear(diag))
    return n, gens


def projective_line(F, kind="psl"):
    """PSL / PGL / PΓL(2, q) on q + 1 points: the field plus infinity (= q)."""
    q = F.q
    inf = q

    def mobius(a, b, c, d):  # x -> (a x + b) / (c x + d)
        out = []
        for x in range(q + 1):
            if x == inf:
                num, den = a, c
            else:
                num, den = F.add(F.mul(a, x), b), F.add(F.mul(c, x), d)
            out.append(inf if den == 0 else F.mul(num, F.inv[den]))
        return perm(out)

    w = F.primitive
    sq = F.mul(w, w)
    gens = [mobius(1, 1, 0, 1), mobius(sq, 0, 0, 1), mobius(0, F.neg(1), 1, 0)]
    if kind in ("pgl", "pgammal"):
        gens.append(mobius(w, 0, 0, 1))
    if kind == "pgammal" and F.k > 1:
        gens.append(perm([F.frobenius(x) if x != inf else inf for x in range(q + 1)]))
    return q + 1, gens


def projective_plane(p, dim=3):
    """PSL(dim, p) on the points of projective (dim-1)-space over GF(p)."""
    vectors = []
    for v in itertools.product(range(p), repeat=dim):
        if any(v):
            lead = next(c for c in v if c)
            inv = pow(lead, p - 2, p)
            nv = tuple(c * inv % p for c in v)
            if nv not in vectors:
                vectors.append(nv)
    index = {v: i for i, v in enumerate(vectors)}

    def normal(v):
        lead = next(c for c in v if c)
        inv = pow(lead, p - 2, p)
        return tuple(c * inv % p for c in v)

    def act(mat):
        return perm([index[normal(tuple(sum(mat[r][c] * v[c] for c in range(dim)) % p for r in range(dim)))]
                     for v in vectors])

    shift = [[int(r == (c + 1) % dim) for c in range(dim)] for r in range(dim)]
    if dim % 2 == 0:  # keep determinant 1
        shift[0][dim - 1] = (-1) % p
    transvection = [[int(r == c) + int(r == 0 and c == 1) for c in range(dim)] for r in range(dim)]
    return len(vectors), [act(shift), act(transvection)]


def symmetric(m):
    return m, [perm([(i + 1) % m for i in range(m)]), perm([1, 0] + list(range(2, m)))]


def alternating(m):
    if m % 2:
        cyc = [(i + 1) % m for i in range(m)]
    else:
        cyc = [0] + [1 + i % (m - 1) for i in range(1, m)]
    return m, [perm(cyc), perm([1, 2, 0] + list(range(3, m)))]


def colex_subsets(m, k):
    subs = sorted(itertools.combinations(range(m), k), key=lambda s: sum(binom(x, i + 1) for i, x in enumerate(s)))
    return subs


def binom(a, b):
    if b > a:
        return 0
    r = 1
    for i in range(1, b + 1):
        r = r * (a - b + i) // i
    return r


def on_subsets(group, k):
    m, gens = group
    subs = colex_subsets(m, k)
    index = {s: i for i, s in enumerate(subs)}
    out = []
    for g in gens:
        arr = g.array_form
        out.append(perm([index[tuple(sorted(arr[x] for x in s))] for s in subs]))
    return len(subs), out


def product_action(base, l, top="full", extra=(), swap_with=None):
    """Base group in coordinate 0 plus coordinate permutations; first coordinate least significant.

    swap_with: a base element applied in coordinate 0 after the coordinate cycle."""
    d, gens = base
    n = d**l
    digits = lambda x: [(x // d**i) % d for i in range(l)]
    index = lambda c: sum(v * d**i for i, v in enumerate(c))

    def in_coord(g, i):
        arr = g.array_form
        return perm([index([arr[c] if j == i else c for j, c in enumerate(digits(x))]) for x in range(n)])

    def coords(src):
        return perm([index([digits(x)[src[i]] for i in range(l)]) for x in range(n)])

    out = [in_coord(g, 0) for g in gens]
    cycle = coords([(i - 1) % l for i in range(l)])
    out.append(cycle if swap_with is None else cycle * in_coord(swap_with, 0))
    if top == "full" and l > 2:
        out.append(coords([1, 0] + list(range(2, l))))
    for per_coord in extra:  # tuples of base elements applied simultaneously
        arrs = [g.array_form for g in per_coord]
        out.append(perm([index([arrs[i][c] for i, c in enumerate(digits(x))]) for x in range(n)]))
    return n, out


def from_cycles(n, cycles):
    arr = list(range(n))
    for c in cycles:
        for i, x in enumerate(c):
            arr[x - 1] = c[(i + 1) % len(c)] - 1
    return perm(arr)


def scrambled(group, seed):
    n, gens = group
    rng = random.Random(seed)
    pi = list(range(n))
    rng.shuffle(pi)
    p = perm(pi)
    return n, [~p * g * p for g in gens]


# Output -------------------------------------------------------------------------


def cycle_text(g):
    cs = [c for c in g.cyclic_form if len(c) > 1]
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cs)


def write(out_dir, file_id, name, group):
    n, gens = group
    gens = [g if g.size == n else Permutation(g.array_form + list(range(g.size, n))) for g in gens]
    order = PermutationGroup(gens).order()
    lines = [f"# {name}", f"name: {name}", f"degree: {n}", f"order: {order}"]
    lines += [f"gen: {cycle_text(g)}" for g in gens]
    (out_dir / f"{file_id}.grp").write_text("\n".join(lines) + "\n")
    print(f"{file_id:20s} n={n:3d} order={order}")


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "corpus"
    out_dir.mkdir(parents=True, exist_ok=True)
    for f in out_dir.glob("*.grp"):
        f.unlink()

    for m in (2, 3, 4):
        write(out_dir, f"s{m:02d}", f"S{m}", symmetric(m))
    write(out_dir, "a03", "A3", alternating(3))
    write(out_dir, "a04", "A4", alternating(4))
    for m in list(range(5, 13)) + [16, 24, 32]:
        write(out_dir, f"s{m:02d}", f"S{m}", symmetric(m))
    for m in list(range(5, 13)) + [20]:
        write(out_dir, f"a{m:02d}", f"A{m}", alternating(m))

    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31):
        write(out_dir, f"c{p:02d}", f"C{p}", cyclic(p))
        write(out_dir, f"agl1_{p:02d}", f"AGL(1,{p})", affine_line(Field(p)))
    for p in (5, 7, 11):
        write(out_dir, f"d{2 * p:02d}", f"D{2 * p}", dihedral(p))
    write(out_dir, "f21", "F21", affine_line(Field(7), mult_order=3))
    write(out_dir, "f55", "C11:C5", affine_line(Field(11), mult_order=5))

    write(out_dir, "agl1_08", "AGL(1,8)", affine_line(Field(2, 3)))
    write(out_dir, "agaml1_08", "AGammaL(1,8)", affine_line(Field(2, 3), frobenius=True))
    write(out_dir, "agl1_09", "AGL(1,9)", affine_line(Field(3, 2)))
    write(out_dir, "agl1_16", "AGL(1,16)", affine_line(Field(2, 4)))
    write(out_dir, "agl1_25", "AGL(1,25)", affine_line(Field(5, 2)))
    write(out_dir, "agl1_27", "AGL(1,27)", affine_line(Field(3, 3)))
    write(out_dir, "agaml1_32", "AGammaL(1,32)", affine_line(Field(2, 5), frobenius=True))
    write(out_dir, "agl3_2", "AGL(3,2)", affine_space(2, 3))
    write(out_dir, "agl2_3", "AGL(2,3)", affine_space(3, 2))
    write(out_dir, "agl4_2", "AGL(4,2)", affine_space(2, 4))
    write(out_dir, "agl2_5", "AGL(2,5)", affine_space(5, 2))

    for p in (5, 7, 11, 13, 17, 19, 23, 29, 31):
        write(out_dir, f"psl2_{p:02d}", f"PSL(2,{p})", projective_line(Field(p)))
    for p in (5, 7, 11, 13):
        write(out_dir, f"pgl2_{p:02d}", f"PGL(2,{p})", projective_line(Field(p), "pgl"))
    write(out_dir, "psl2_08", "PSL(2,8)", projective_line(Field(2, 3)))
    write(out_dir, "pgaml2_08", "PGammaL(2,8)", projective_line(Field(2, 3), "pgammal"))
    write(out_dir, "psl2_09", "PSL(2,9)", projective_line(Field(3, 2)))
    write(out_dir, "pgaml2_09", "PGammaL(2,9)", projective_line(Field(3, 2), "pgammal"))
    write(out_dir, "psl2_16", "PSL(2,16)", projective_line(Field(2, 4)))
    write(out_dir, "psl2_25", "PSL(2,25)", projective_line(Field(5, 2)))
    write(out_dir, "psl2_27", "PSL(2,27)", projective_line(Field(3, 3)))
    write(out_dir, "psl3_2", "PSL(3,2)", projective_plane(2))
    write(out_dir, "psl3_3", "PSL(3,3)", projective_plane(3))
    write(out_dir, "psl4_2", "PSL(4,2)", projective_plane(2, 4))

    m11 = (11, [from_cycles(11, [list(range(1, 12))]), from_cycles(11, [[3, 7, 11, 8], [4, 10, 5, 6]])])
    write(out_dir, "m11", "M11", m11)
    m12 = (12, [from_cycles(12, [list(range(1, 12))]), from_cycles(12, [[3, 7, 11, 8], [4, 10, 5, 6]]),
                from_cycles(12, [[1, 12], [2, 11], [3, 6], [4, 8], [5, 9], [7, 10]])])
    write(out_dir, "m12", "M12", m12)

    for m in (5, 6, 7, 8):
        write(out_dir, f"a{m:02d}_pairs", f"A{m} on pairs", on_subsets(alternating(m), 2))
        write(out_dir, f"s{m:02d}_pairs", f"S{m} on pairs", on_subsets(symmetric(m), 2))

    s5, a5 = symmetric(5), alternating(5)
    t5 = from_cycles(5, [[1, 2]])
    write(out_dir, "a05wrc2", "A5 wr C2", product_action(a5, 2))
    write(out_dir, "s05wrs2", "S5 wr S2", product_action(s5, 2))
    write(out_dir, "a05sq_odd", "A5^2.(odd,odd).2", product_action(a5, 2, extra=[(t5, t5)]))
    write(out_dir, "a05sq_twist", "A5^2.2 swap-odd", product_action(a5, 2, swap_with=t5))
    write(out_dir, "a06wrc2", "A6 wr C2", product_action(alternating(6), 2))
    write(out_dir, "s06wrs2", "S6 wr S2", product_action(symmetric(6), 2))

    write(out_dir, "psl2_07_scr", "PSL(2,7) relabelled", scrambled(projective_line(Field(7)), 7))
    write(out_dir, "agl1_08_scr", "AGL(1,8) relabelled", scrambled(affine_line(Field(2, 3)), 8))
    write(out_dir, "a05_pairs_scr", "A5 on pairs relabelled", scrambled(on_subsets(alternating(5), 2), 10))
    write(out_dir, "a05wrc2_scr", "A5 wr C2 relabelled", scrambled(product_action(a5, 2), 25))
    write(out_dir, "a06wrc2_scr", "A6 wr C2 relabelled", scrambled(product_action(alternating(6), 2), 36))


if __name__ == "__main__":
    main()
