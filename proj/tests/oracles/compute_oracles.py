"""Independent oracle values frozen into the C++ test suites.

Uses only Python integers, fractions and mpmath; shares no code with the
library. Run: python3 tests/oracles/compute_oracles.py
"""
from fractions import Fraction
from math import gcd

import mpmath as mp

mp.mp.dps = 40
N = 40


def sigma(k, n):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def mul(a, b):
    out = [0] * N
    for i, x in enumerate(a):
        if x:
            for j in range(N - i):
                out[i + j] += x * b[j]
    return out


E4 = [1] + [240 * sigma(3, n) for n in range(1, N)]
E6 = [1] + [-504 * sigma(5, n) for n in range(1, N)]

# Delta from the product formula q * prod (1 - q^n)^24
delta = [0] * N
delta[1] = 1
for n in range(1, N):
    for _ in range(24):
        new = delta[:]
        for i in range(n, N):
            new[i] -= delta[i - n]
        delta = new
print("delta[1..6]", delta[1:7])
print("E6 q^2", E6[2])

# weight 28 reduced echelon basis from Delta*E4^4 and Delta^2*E4
m1 = mul(delta, mul(mul(E4, E4), mul(E4, E4)))
m2 = mul(mul(delta, delta), E4)
rows = [[Fraction(x) for x in m1], [Fraction(x) for x in m2]]
# echelon on columns 1,2
rows[0] = [x / rows[0][1] for x in rows[0]]
rows[1] = [x - rows[1][1] * y for x, y in zip(rows[1], rows[0])]
rows[1] = [x / rows[1][2] for x in rows[1]]
rows[0] = [x - rows[0][2] * y for x, y in zip(rows[0], rows[1])]
print("w28 phi1[0..6]", rows[0][:7])
print("w28 phi2[0..6]", rows[1][:7])

# weight 16: Delta * E4
w16 = mul(delta, E4)
print("w16[1..5]", w16[1:6])


# Delta(i) via product formula in mpmath
def delta_num(z, terms=200):
    q = mp.e ** (2j * mp.pi * z)
    prod = mp.mpf(1)
    for n in range(1, terms):
        prod *= (1 - q ** n) ** 24
    return q * prod


print("Delta(i)", mp.nstr(delta_num(1j), 25))

# Period int_0^{i inf} Delta(z) z^10 dz via incomplete gamma series:
# = i^11 * int_0^inf Delta(it) t^10 dt, split at t=1 with t -> 1/t.
tau = {}
dl = [0] * 120
dl[1] = 1
for n in range(1, 120):
    for _ in range(24):
        new = dl[:]
        for i in range(n, 120):
            new[i] -= dl[i - n]
        dl = new


def tail(m):
    # sum tau(n) int_1^inf e^{-2 pi n t} t^m dt
    s = mp.mpf(0)
    for n in range(1, 120):
        a = 2 * mp.pi * n
        s += dl[n] * mp.gammainc(m + 1, a) / a ** (m + 1)
    return s


real_integral = tail(10) + tail(0)
period = (1j) ** 11 * real_integral
print("period r10(Delta)", mp.nstr(period, 25))

# depth-1: int_i^{2i} Delta(z) z^10 dz
f = lambda t: delta_num(1j * t, 60) * (1j * t) ** 10 * 1j
print("int_i^2i", mp.nstr(mp.quad(f, [1, 2]), 25))

# classical Dedekind sums s(h,k)
def s(h, k):
    def saw(x):
        if x.denominator == 1:
            return Fraction(0)
        return x - (x.numerator // x.denominator) - Fraction(1, 2)
    return sum(saw(Fraction(i, k)) * saw(Fraction(i * h, k)) for i in range(1, k))


print("s(1,3)", s(1, 3), "s(2,5)", s(2, 5), "s(3,7)", s(3, 7))
