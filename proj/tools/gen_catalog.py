#!/usr/bin/env python3
"""Regenerate data/lattices.catalog from glue-code tables.

Glue classes use the usual labels: A_n [i] is the i-th fundamental weight,
D_n [1]/[3] the two spinor classes and [2] the vector class, E6 [1]/[2] and
E7 [1] the minuscule classes. Coordinates are written with respect to the
simple roots of each component.
"""
from fractions import Fraction
import sys


def cartan(family, n):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    if family == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif family == "E":
        # Bourbaki labels 1..n: chain 1-3-4-5-..., node 2 attached to 4.
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    else:
        raise ValueError(family)
    for a, b in edges:
        c[a][b] = c[b][a] = -1
    return c


def inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def weight(family, n, node):
    """Fundamental weight at 1-based node, in simple-root coordinates."""
    inv = inverse(cartan(family, n))
    return [inv[i][node - 1] for i in range(n)]


def glue_class(family, n, cls):
    if cls == 0:
        return [Fraction(0)] * n
    if family == "A":
        return weight("A", n, cls)
    if family == "D":
        return weight("D", n, {1: n, 2: 1, 3: n - 1}[cls])
    if family == "E" and n == 6:
        return weight("E", 6, {1: 1, 2: 6}[cls])
    if family == "E" and n == 7:
        return weight("E", 7, 7)
    raise ValueError((family, n, cls))


def cyclic(prefix, cyc, suffix=()):
    rows = []
    for s in range(len(cyc)):
        rows.append(list(prefix) + list(cyc[s:] + cyc[:s]) + list(suffix))
    return rows


def even_perms(seq):
    from itertools import permutations
    out = []
    for p in permutations(range(len(seq))):
        inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
        if inv % 2 == 0:
            out.append([seq[i] for i in p])
    return out


def comps(text):
    out = []
    for part in text.split():
        fam, rest = part[0], part[1:]
        if "*" in rest:
            r, k = rest.split("*")
            out += [(fam, int(r))] * int(k)
        else:
            out.append((fam, int(rest)))
    return out


def hexacode():
    # The D4^6 glue is F4-linear: close the additive generators under
    # multiplication by a primitive element, which permutes classes 1->2->3.
    base = [[1] * 6] + cyclic([0], [0, 2, 3, 3, 2])
    omega = {0: 0, 1: 2, 2: 3, 3: 1}
    return base + [[omega[c] for c in row] for row in base]


GOLAY_WORD = [int(ch) for ch in "00000101001100110101111"]

NIEMEIER = [
    ("D24", "D24", [[1]], 46),
    ("D16E8", "D16 E8", [[1, 0]], 30),
    ("E8^3", "E8*3", [], 30),
    ("A24", "A24", [[5]], 25),
    ("D12^2", "D12*2", [[1, 2], [2, 1]], 22),
    ("A17E7", "A17 E7", [[3, 1]], 18),
    ("D10E7^2", "D10 E7*2", [[1, 1, 0], [3, 0, 1]], 18),
    ("A15D9", "A15 D9", [[2, 1]], 16),
    ("D8^3", "D8*3", [[1, 2, 2], [2, 1, 2], [2, 2, 1]], 14),
    ("A12^2", "A12*2", [[1, 5]], 13),
    ("A11D7E6", "A11 D7 E6", [[1, 1, 1]], 12),
    ("E6^4", "E6*4", cyclic([1], [0, 1, 2]), 12),
    ("A9^2D6", "A9*2 D6", [[2, 4, 0], [5, 0, 1], [0, 5, 3]], 10),
    ("D6^4", "D6*4", even_perms([0, 1, 2, 3]), 10),
    ("A8^3", "A8*3", cyclic([], [1, 1, 4]), 9),
    ("A7^2D5^2", "A7*2 D5*2", [[1, 1, 1, 2], [1, 7, 2, 1]], 8),
    ("A6^4", "A6*4", cyclic([1], [2, 1, 6]), 7),
    ("A5^4D4", "A5*4 D4", cyclic([2], [0, 2, 4], [0]) + [[3, 3, 0, 0, 1], [3, 0, 3, 0, 2], [3, 0, 0, 3, 3]], 6),
    ("D4^6", "D4*6", hexacode(), 6),
    ("A4^6", "A4*6", cyclic([1], [0, 1, 4, 4, 1]), 5),
    ("A3^8", "A3*8", cyclic([3], [2, 0, 0, 1, 0, 1, 1]), 4),
    ("A2^12", "A2*12", cyclic([2], [1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2]), 3),
    ("A1^24", "A1*24", cyclic([1], GOLAY_WORD), 2),
]


def fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def class_row(components, classes):
    row = []
    for (fam, n), cls in zip(components, classes):
        row += glue_class(fam, n, cls)
    return row


def d_root_coords(y):
    """Orthogonal coordinates of a D_n vector -> simple-root coordinates."""
    n = len(y)
    a, s = [], Fraction(0)
    for i in range(n - 2):
        s += y[i]
        a.append(s)
    a.append((s + y[n - 2] - y[n - 1]) / 2)
    a.append((s + y[n - 2] + y[n - 1]) / 2)
    return a


def emit(out, name, components, glue_rows, roots, scale=None):
    out.append(f"name {name}")
    out.append(f"components {components}")
    if scale is not None:
        out.append(f"scale {scale}")
    for row in glue_rows:
        out.append("glue " + " ".join(fmt(x) for x in row))
    if roots is not None:
        out.append(f"expected_roots {roots}")
    out.append("")


def main():
    out = ["# Built-in lattice catalog. Generated by tools/gen_catalog.py.",
           "# Glue rows are simple-root coordinates, one block per component.",
           "version 1", ""]
    emit(out, "E8", "E8", [], 240)
    emit(out, "E8^2", "E8*2", [], 480)
    emit(out, "D16+", "D16", [class_row(comps("D16"), [1])], 480)
    for name, comp, code, h in NIEMEIER:
        cs = comps(comp)
        emit(out, f"Niemeier({name})", comp, [class_row(cs, c) for c in code], 24 * h)
    # Leech: D24 scaled by 2 (vectors 4(e_i +- e_j)/sqrt 8), glued by the
    # extended Golay code c/2 and the vector (-3, 1^23)/4.
    golay = cyclic([1], GOLAY_WORD)
    rows = [d_root_coords([Fraction(b, 2) for b in w]) for w in golay]
    rows.append(d_root_coords([Fraction(-3, 4)] + [Fraction(1, 4)] * 23))
    emit(out, "Leech", "D24", rows, 0, scale=2)
    out.append("alias E8^3 Niemeier(E8^3)")
    out.append("")
    sys.stdout.write("\n".join(out))


if __name__ == "__main__":
    main()
