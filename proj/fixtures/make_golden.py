"""Writes fixtures/golden/*: inputs plus expected outputs typed from the closed forms."""
import json
from fractions import Fraction as Fr
from pathlib import Path

OUT = Path(__file__).parent / "golden"


def q(v):
    v = Fr(v)
    return f"{v.numerator}/{v.denominator}"


def s(v):
    return {"re": q(v), "im": "0/1"}


def pure(factors):
    dims = [len(f) for f in factors]
    pts = [[]]
    for n in dims:
        pts = [p + [c] for c in range(n) for p in pts]
    pts = [tuple(p) for p in pts]
    pts.sort(key=lambda p: tuple(reversed(p)))
    entries = []
    for i in pts:
        for j in pts:
            v = Fr(1)
            for f, a, b in zip(factors, i, j):
                v *= Fr(f[a][b])
            if v:
                entries.append({"row": list(i), "col": list(j), "value": s(v)})
    return {"index_set": {"kind": "rectangular", "dims": dims}, "scalar": "gq", "entries": entries}


def stretched(m, labels):
    n = len(m)
    return {"rows": n, "cols": n, "scalar": "gq", "row_labels": labels, "col_labels": labels,
            "data": [[s(x) for x in row] for row in m]}


def sum_map_2x2(a, b):
    return [[a[0][0]*b[0][0], a[0][1]*b[0][0]+a[0][0]*b[0][1], a[0][1]*b[0][1]],
            [a[0][0]*b[1][0]+a[1][0]*b[0][0], a[0][0]*b[1][1]+a[1][1]*b[0][0]+a[0][1]*b[1][0]+a[1][0]*b[0][1],
             a[0][1]*b[1][1]+a[1][1]*b[0][1]],
            [a[1][0]*b[1][0], a[1][0]*b[1][1]+a[1][1]*b[1][0], a[1][1]*b[1][1]]]


def difference_map_2x2(a, b):
    return [[a[0][0]*b[1][1], a[0][0]*b[1][0]+a[0][1]*b[1][1], a[0][1]*b[1][0]],
            [a[0][0]*b[0][1]+a[1][0]*b[1][1], a[0][0]*b[0][0]+a[1][1]*b[1][1]+a[0][1]*b[0][1]+a[1][0]*b[1][0],
             a[0][1]*b[0][0]+a[1][1]*b[1][0]],
            [a[1][0]*b[0][1], a[1][0]*b[0][0]+a[1][1]*b[0][1], a[1][1]*b[0][0]]]


def sum_map_2x3(a, b):
    m = [[0] * 4 for _ in range(4)]
    for r in range(2):
        for c in range(2):
            for i in range(3):
                for j in range(3):
                    m[r + i][c + j] += a[r][c] * b[i][j]
    return m


def max_map_2x2(a, b):
    m = [[a[0][0] * b[i][j] for j in range(2)] for i in range(2)]
    m[0][1] += a[0][1] * (b[0][0] + b[0][1])
    m[1][1] += a[0][1] * (b[1][0] + b[1][1])
    m[1][0] += a[1][0] * (b[0][0] + b[1][0])
    m[1][1] += a[1][0] * (b[0][1] + b[1][1])
    m[1][1] += a[1][1] * (b[0][0] + b[1][0] + b[0][1] + b[1][1])
    return m


def jordan(n, lam):
    return [[lam if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]


def spec(*blocks):
    return {"blocks": [{"size": n, "eigenvalue": s(v)} for n, v in blocks]}


def write(name, files):
    d = OUT / name
    d.mkdir(parents=True, exist_ok=True)
    for fname, doc in files.items():
        (d / fname).write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")


A = [[1, 2], [3, 4]]
B = [[5, 6], [7, 8]]
B3 = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
lam, mu = 2, 3

write("sum_map_2x2", {"tensor.json": pure([A, B]), "map.json": {"kind": "linear", "k": [1, 1]},
                      "expected.json": stretched(sum_map_2x2(A, B), [0, 1, 2])})
write("sum_map_jordan", {"tensor.json": pure([jordan(2, lam), jordan(2, mu)]), "map.json": {"kind": "linear", "k": [1, 1]},
                         "expected.json": stretched([[lam*mu, lam+mu, 1], [0, 2*lam*mu, lam+mu], [0, 0, lam*mu]], [0, 1, 2])})
write("difference_map_2x2", {"tensor.json": pure([A, B]), "map.json": {"kind": "linear", "k": [1, -1]},
                             "expected.json": stretched(difference_map_2x2(A, B), [-1, 0, 1])})
write("difference_map_jordan", {"tensor.json": pure([jordan(2, lam), jordan(2, mu)]),
                                "map.json": {"kind": "linear", "k": [1, -1]},
                                "expected.json": stretched([[lam*mu, mu, 0], [lam, 2*lam*mu+1, mu], [0, lam, lam*mu]], [-1, 0, 1])})
write("sum_map_2x3", {"tensor.json": pure([A, B3]), "map.json": {"kind": "linear", "k": [1, 1]},
                      "expected.json": stretched(sum_map_2x3(A, B3), [0, 1, 2, 3])})
write("max_map_2x2", {"tensor.json": pure([A, B]), "map.json": {"kind": "max"},
                      "expected.json": stretched(max_map_2x2(A, B), [0, 1])})
write("mixed_radix_identity", {"tensor.json": pure([[[1, 0], [0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]]),
                               "map.json": {"kind": "mixed-radix"},
                               "expected.json": stretched([[int(i == j) for j in range(6)] for i in range(6)], list(range(6)))})
write("vector_sum_map", {"vector.json": {"index_set": {"kind": "rectangular", "dims": [2, 2]}, "scalar": "gq",
                                         "entries": [{"point": [0, 1], "value": s(1)}, {"point": [1, 0], "value": s(1)}]},
                         "map.json": {"kind": "linear", "k": [1, 1]},
                         "expected.json": {"size": 3, "scalar": "gq", "labels": [0, 1, 2], "data": [s(0), s(2), s(0)]}})
write("jordan_pair", {"spec.json": [spec((2, 2)), spec((2, 3))], "expected.json": spec((3, 6), (1, 6))})
write("jordan_single", {"spec.json": [spec((1, 1))], "expected.json": spec((1, 1))})
write("jordan_nilpotent", {"spec.json": [spec((2, 1)), spec((2, 0))], "expected.json": spec((2, 0), (2, 0))})
