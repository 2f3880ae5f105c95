"""Independent sympy computations behind the frozen constants in the C++ tests.

Run with `python3 tests/oracles/freeze_values.py`; the printed values are the
ones pasted into tests/unit/*.cpp.  Nothing here imports the C++ library.
"""
from sympy import I, Matrix, Rational, eye, zeros
from sympy.matrices import jordan_cell


def kron_first_fastest(a, b):
    # (i1 + p*i2, j1 + q*j2) -> a[i1,j1] * b[i2,j2]
    p, q = a.shape
    r, s = b.shape
    out = zeros(p * r, q * s)
    for i1 in range(p):
        for j1 in range(q):
            for i2 in range(r):
                for j2 in range(s):
                    out[i1 + p * i2, j1 + q * j2] = a[i1, j1] * b[i2, j2]
    return out


def jcell(n, a):
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = a
        if i + 1 < n:
            m[i, i + 1] = 1
    return m


def nullities(m, lam, kmax):
    n = m.shape[0]
    shifted = m - lam * eye(n)
    out, power = [], shifted
    for _ in range(kmax):
        out.append(n - power.rank())
        power = power * shifted
    return out


def jordan_blocks(m):
    _, j = m.jordan_form()
    blocks, i, n = [], 0, j.shape[0]
    while i < n:
        size = 1
        while i + size < n and j[i + size - 1, i + size] == 1:
            size += 1
        blocks.append((size, j[i, i]))
        i += size
    return sorted(blocks, key=lambda b: (b[1], -b[0]))


m5 = Matrix([
    [2, -1, 0, 3, 1],
    [1, Rational(1, 2), -2, 0, 4],
    [0, 3, 1 + I, -1, 2],
    [5, 0, 1, 1, -3],
    [1, 2, 3, 4, Rational(5, 3)],
])
print("det(m5) =", m5.det().expand())

print("nullity kron(J2(2),J2(3)) at 6:", nullities(kron_first_fastest(jcell(2, 2), jcell(2, 3)), 6, 5))
print("rank kron(J2(0),J2(0)):", kron_first_fastest(jcell(2, 0), jcell(2, 0)).rank())
print("jordan kron(J2(1),J3(0)):", jordan_blocks(kron_first_fastest(jcell(2, 1), jcell(3, 0))))
print("jordan kron(J3(0),J2(0)):", jordan_blocks(kron_first_fastest(jcell(3, 0), jcell(2, 0))))
print("jordan kron(J2(2),J2(3)):", jordan_blocks(kron_first_fastest(jcell(2, 2), jcell(2, 3))))
print("jordan kron(J3(2),J2(0)):", jordan_blocks(kron_first_fastest(jcell(3, 2), jcell(2, 0))))

a = Matrix([[1, 2], [3, 4]])
b = Matrix([[5, 6], [7, 8]])
print("det(kron(a,b)) =", kron_first_fastest(a, b).det(), " det(a)^2 det(b)^2 =", a.det() ** 2 * b.det() ** 2)
