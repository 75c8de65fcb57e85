"""Independent brute-force cross-checks used to freeze expected values in the C++ tests.

Quotient dimensions are computed with dense Python integers as bit rows; series values
with plain integer recurrences. Run: python3 tests/oracles/freeze_values.py
"""
import itertools


def words(d, n):
    return list(itertools.product(range(d), repeat=n))


def quotient_dims(d, relators, N):
    # relators: list of dicts word(tuple)->1 (homogeneous of degree 2)
    out = [1]
    for n in range(1, N + 1):
        cols = {w: i for i, w in enumerate(words(d, n))}
        pivots = {}
        for rel in relators:
            h = len(next(iter(rel)))
            for a in range(0, n - h + 1):
                for u in words(d, a):
                    for v in words(d, n - h - a):
                        row = 0
                        for w in rel:
                            row ^= 1 << cols[u + w + v]
                        while row:
                            lead = row.bit_length() - 1
                            if lead in pivots:
                                row ^= pivots[lead]
                            else:
                                pivots[lead] = row
                                break
        out.append(len(cols) - len(pivots))
    return out


def rel(square=None, comms=()):
    r = {}
    def tog(w):
        if w in r:
            del r[w]
        else:
            r[w] = 1
    if square is not None:
        tog((square, square))
    for i, j in comms:
        tog((i, j)); tog((j, i))
    return r


ex1 = [rel(None, [(0, 1)]), rel(None, [(1, 0), (1, 2), (1, 3)]), rel(None, [(2, 1), (2, 3)]),
       rel(3, [(3, 0), (3, 2)])]
ex2 = [rel(None, [(0, 3)]), rel(None, [(1, 2)]), rel(2, [(2, 0), (2, 3)]), rel(3, [(3, 1), (3, 2)])]
neg = [rel(0), rel(None, [(0, 1)])]

if __name__ == "__main__":
    strongly_free = [1, 4]
    for n in range(2, 8):
        strongly_free.append(4 * strongly_free[-1] - 4 * strongly_free[-2])
    checks = {
        "first example, reduced": (quotient_dims(4, ex1, 6), strongly_free[:7]),
        "second example, reduced": (quotient_dims(4, ex2, 6), strongly_free[:7]),
        "negative control": (quotient_dims(2, neg, 4), [1, 2, 2, 2, 2]),
        "1/(1-4t+4t^2)": (strongly_free, [1, 4, 12, 32, 80, 192, 448, 1024]),
    }
    failed = 0
    for name, (got, want) in checks.items():
        ok = got == want
        failed += not ok
        print(("ok  " if ok else "BAD ") + name, got)
    raise SystemExit(1 if failed else 0)
