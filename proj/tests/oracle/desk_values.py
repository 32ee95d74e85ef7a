#!/usr/bin/env python3
"""Brute-force recomputation of the pinned desk values with Python fractions.

Independent of the C++ code: P comes from the 4F3 definition term by term,
B_i from the explicit polynomial v_i evaluated at A by plain matrix algebra,
and W from Racah's single-sum formula (not the 4F3 form the library uses).
Exits nonzero if any pinned value disagrees.
"""

from fractions import Fraction as F
from math import factorial, isqrt
import sys


def poch(a, n):
    r = F(1)
    for k in range(n):
        r *= a + k
    return r


def f43(upper, lower):
    # sum every term until a numerator Pochhammer vanishes
    total, n = F(0), 0
    while True:
        num = F(1)
        for a in upper:
            num *= poch(F(a), n)
        if num == 0:
            return total
        den = F(factorial(n))
        for b in lower:
            den *= poch(F(b), n)
        total += num / den
        n += 1


def system(D):
    s = F(3, D * (D + 2))
    a = [s * i * (i + 1) for i in range(D + 1)]
    b = [s * F((D - i) * (i + 1) * (D + i + 2), 2 * i + 1) for i in range(D)]
    c = [None] + [s * F((D - i + 1) * i * (D + i + 1), 2 * i + 1) for i in range(1, D + 1)]
    theta = [3 - 2 * x for x in a]
    return a, b, c, theta


def matmul(X, Y):
    n = len(X)
    return [[sum(X[i][k] * Y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def matrix_A(D):
    a, b, c, _ = system(D)
    n = D + 1
    A = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = a[i]
        if i > 0:
            A[i][i - 1] = c[i]
        if i < D:
            A[i][i + 1] = b[i]
    return A


def matrix_P(D):
    return [[(2 * j + 1) * f43([-i, i + 1, -j, j + 1], [1, D + 2, -D]) for j in range(D + 1)]
            for i in range(D + 1)]


def racah_sum(a, b, c, d, e, f):
    """W^2 and sign of W via Racah's formula; spins as Fractions."""
    def tri(x, y, z):
        return (factorial(int(x + y - z)) * factorial(int(y + z - x)) * factorial(int(z + x - y)),
                factorial(int(x + y + z + 1)))
    alphas = [a + b + e, c + d + e, a + c + f, b + d + f]
    betas = [a + b + c + d, a + d + e + f, b + c + e + f]
    S = F(0)
    for k in range(int(max(alphas)), int(min(betas)) + 1):
        den = 1
        for al in alphas:
            den *= factorial(int(k - al))
        for be in betas:
            den *= factorial(int(be - k))
        S += F((-1) ** int(k + a + b + c + d) * factorial(k + 1), den)
    delta_sq = F(1)
    for t in [(a, b, e), (c, d, e), (a, c, f), (b, d, f)]:
        n_, d_ = tri(*t)
        delta_sq *= F(n_, d_)
    return S * S * delta_sq, (S > 0) - (S < 0)


def exact_value(sq, sign):
    num, den = sq.numerator, sq.denominator
    rn, rd = isqrt(num), isqrt(den)
    assert rn * rn == num and rd * rd == den, "not a rational square"
    return sign * F(rn, rd)


def main():
    failures = 0

    def expect(name, got, want):
        nonlocal failures
        ok = got == want
        failures += not ok
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {got}")

    h = F(1, 2)
    expect("D=1 P", matrix_P(1), [[1, 3], [1, -1]])
    A1 = matrix_A(1)
    expect("D=1 p^1_{1,1} = (B_1)_{1,1}", A1[1][1], 2)
    expect("D=2 theta", system(2)[3], [3, F(3, 2), F(-3, 2)])
    A2 = matrix_A(2)
    # v_2(x) = (4/3) x^2 - x - 4 from the v-recurrence written out by hand
    A2sq = matmul(A2, A2)
    B2 = [[F(4, 3) * A2sq[r][s] - A2[r][s] - 4 * (r == s) for s in range(3)] for r in range(3)]
    expect("D=2 B_2", B2, [[0, 0, 5], [0, F(5, 4), F(15, 4)], [1, F(9, 4), F(7, 4)]])
    expect("D=2 p^2_{1,1} = (B_1)_{2,1}", A2[2][1], F(3, 4))
    expect("W(1/2,1/2,1/2,1/2;0,0)", exact_value(*racah_sum(h, h, h, h, 0, 0)), F(-1, 2))
    expect("W(1/2,1/2,1,1;1,1/2)", exact_value(*racah_sum(h, h, F(1), F(1), F(1), h)), F(1, 3))
    expect("Whipple D=2 i=j=1 lhs", f43([-1, -1, -1, -1], [1, -5, 1]), F(4, 5))
    expect("Whipple D=2 i=j=1 rhs", F(8, 5) * f43([-1, -1, 2, 2], [1, 4, -2]), F(4, 5))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
