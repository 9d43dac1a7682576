"""Small finite groups as Cayley tables, built independently of the package.

Each function returns (table, inverse) where table[i][j] is the index of the
product g_i * g_j and element 0 is the identity.
"""
from itertools import permutations


def _table_from_elements(elements, compose):
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[compose(a, b)] for b in elements] for a in elements]
    inverse = [0] * len(elements)
    for i in range(len(elements)):
        for j in range(len(elements)):
            if table[i][j] == 0:
                inverse[i] = j
    return table, inverse


def cyclic(n):
    elements = list(range(n))
    return _table_from_elements(elements, lambda a, b: (a + b) % n)


def dihedral(m):
    """Dihedral group of order 2m: pairs (rot, flip)."""
    elements = [(r, f) for f in (0, 1) for r in range(m)]
    # identity (0,0) must come first; ordering above gives rotations then flips
    def compose(a, b):
        r1, f1 = a
        r2, f2 = b
        if f1 == 0:
            return ((r1 + r2) % m, f2)
        return ((r1 - r2) % m, 1 - f2)

    return _table_from_elements(elements, compose)


def symmetric(n):
    elements = sorted(permutations(range(n)))
    # identity is the sorted first element
    def compose(a, b):
        return tuple(a[b[i]] for i in range(n))

    return _table_from_elements(elements, compose)


def quaternion():
    """Q8 as signed units {1,-1,i,-i,j,-j,k,-k} with quaternion multiplication."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def mul(a, b):
        def split(x):
            return (-1 if x.startswith("-") else 1, x.lstrip("-"))

        sa, ua = split(a)
        sb, ub = split(b)
        rules = {
            ("1", "1"): (1, "1"),
            ("1", "i"): (1, "i"), ("i", "1"): (1, "i"),
            ("1", "j"): (1, "j"), ("j", "1"): (1, "j"),
            ("1", "k"): (1, "k"), ("k", "1"): (1, "k"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
            ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
        }
        s, u = rules[(ua, ub)]
        s *= sa * sb
        return ("" if s == 1 else "-") + u

    return _table_from_elements(names, mul)


def alternating(n):
    def parity(p):
        seen = [False] * len(p)
        sign = 1
        for i in range(len(p)):
            if seen[i]:
                continue
            j, cycle = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                cycle += 1
            if cycle % 2 == 0:
                sign = -sign
        return sign

    elements = [p for p in sorted(permutations(range(n))) if parity(p) == 1]

    def compose(a, b):
        return tuple(a[b[i]] for i in range(n))

    return _table_from_elements(elements, compose)
