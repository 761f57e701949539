"""Independent reference computations used only by the tests.

None of these share code paths with the package: Jacobian arithmetic goes
through sympy's GF(p)[x], nonlinearity through distance to every affine
function, degree through solving a GF(2) linear system.
"""

from sympy import Poly, symbols

X = symbols("x")


# -- Cantor's algorithm over sympy polynomials ---------------------------------


class SympyJacobian:
    def __init__(self, p, h, f, genus):
        self.p, self.g = p, genus
        self.h = self.poly(h)
        self.f = self.poly(f)

    def poly(self, coeffs):
        return Poly(list(reversed([c % self.p for c in coeffs])) or [0], X, modulus=self.p)

    def coeffs(self, P):
        # ascending, canonical residues, trailing zeros trimmed
        out = [int(c) % self.p for c in reversed(P.all_coeffs())]
        while out and out[-1] == 0:
            out.pop()
        return out

    def monic(self, P):
        return P.monic() if not P.is_zero else P

    def gcdex(self, a, b):
        if b.is_zero:
            lc = a.LC()
            return self.poly([pow(int(lc) % self.p, -1, self.p)]), self.poly([0]), a.monic()
        return a.gcdex(b)

    def add(self, D1, D2):
        u1, v1 = D1
        u2, v2 = D2
        e1, e2, d0 = self.gcdex(u1, u2)
        c1, s3, d = self.gcdex(d0, v1 + v2 + self.h)
        s1, s2 = c1 * e1, c1 * e2
        u = (u1 * u2).exquo(d * d)
        v = ((s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + self.f)).exquo(d)).rem(u)
        while u.degree() > self.g:
            u = (self.f - v * self.h - v * v).exquo(u)
            v = (-self.h - v).rem(u)
        u = self.monic(u)
        return u, v.rem(u)

    def point(self, x, y):
        return self.poly([-x, 1]), self.poly([y])

    def identity(self):
        return self.poly([1]), self.poly([0])


# -- S-box metrics by brute force ----------------------------------------------


def _dot(a, x):
    return bin(a & x).count("1") & 1


def nonlinearity_by_distance(table):
    """Minimum Hamming distance from any nonzero component to all 32 affine functions."""
    best = 16
    for b in range(1, 16):
        f = [_dot(b, table[x]) for x in range(16)]
        for a in range(16):
            for c in (0, 1):
                dist = sum(f[x] != (_dot(a, x) ^ c) for x in range(16))
                best = min(best, dist)
    return best


def _solve_gf2(rows, rhs):
    """Gaussian elimination over GF(2) for a square invertible system."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col]:
                m[r] = [x ^ y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def degree_by_interpolation(table):
    """Degree from ANF coefficients obtained by solving sum_m c_m [m subset x] = f(x)."""
    rows = [[1 if (m & x) == m else 0 for m in range(16)] for x in range(16)]
    deg = 0
    for b in range(1, 16):
        f = [_dot(b, table[x]) for x in range(16)]
        c = _solve_gf2(rows, f)
        for m, cm in enumerate(c):
            if cm:
                deg = max(deg, bin(m).count("1"))
    return deg


def differential_uniformity_by_pairs(table):
    best = 0
    for a in range(1, 16):
        counts = {}
        for x in range(16):
            for y in range(16):
                if x ^ y == a:
                    d = table[x] ^ table[y]
                    counts[d] = counts.get(d, 0) + 1
        best = max(best, max(counts.values()))
    return best


def sac_counts_by_enumeration(table):
    """counts[i][j] = number of x where flipping input bit i flips output bit j."""
    counts = [[0] * 4 for _ in range(4)]
    for x in range(16):
        xbits = format(x, "04b")[::-1]
        for i in range(4):
            flipped = list(xbits)
            flipped[i] = "1" if flipped[i] == "0" else "0"
            x2 = int("".join(flipped)[::-1], 2)
            y1 = format(table[x], "04b")[::-1]
            y2 = format(table[x2], "04b")[::-1]
            for j in range(4):
                counts[i][j] += y1[j] != y2[j]
    return counts


def squares_mod(p):
    return {x * x % p for x in range(p)}


def brute_points(p, h, f):
    """All (x, y) in GF(p)^2 on y^2 + h(x) y = f(x), by the double loop."""

    def ev(c, x):
        return sum(ci * pow(x, i, p) for i, ci in enumerate(c)) % p

    return [(x, y) for x in range(p) for y in range(p) if (y * y + ev(h, x) * y - ev(f, x)) % p == 0]
