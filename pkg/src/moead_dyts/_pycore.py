"""Pure-Python kernels.

Reference implementation of everything in ``_core.pyx``. Both modules expose
the same names and must produce bit-identical results for the same inputs;
``tests/test_backends.py`` enforces this.
"""
import math

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN = 0x9E3779B97F4A7C15
STREAM_KEY = 0xD1B54A32D192ED03
TWO_POW_M53 = 1.0 / 9007199254740992.0

# Beta draws are kept strictly inside (0, 1).
BETA_LO = 5e-324
BETA_HI = 1.0 - 2.0 ** -53

N_OPERATORS = 5
PARENT_COUNTS = (2, 4, 3, 5, 0)


def fmix64(z):
    """splitmix64 finalizer; a bijection on 64-bit integers."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def seed_state(seed, stream_id):
    """Expand (seed, stream_id) into a 256-bit xoshiro state.

    s0 recovers the seed and s1 then recovers the stream id, so distinct
    pairs always give distinct states.
    """
    a = fmix64(seed + GOLDEN)
    b = fmix64((stream_id ^ STREAM_KEY) + 2 * GOLDEN)
    s0 = a
    s1 = fmix64(a ^ b)
    s2 = fmix64(s1 + GOLDEN)
    s3 = fmix64(s2 + GOLDEN)
    if s0 == s1 == s2 == s3 == 0:
        s3 = GOLDEN
    return s0, s1, s2, s3


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK64


class Xoshiro256:
    """xoshiro256** generator with Marsaglia-Tsang Gamma and Beta draws."""

    def __init__(self, seed=0, stream_id=0):
        if seed < 0 or stream_id < 0:
            raise ValueError("seed and stream_id must be non-negative")
        self.s0, self.s1, self.s2, self.s3 = seed_state(seed & MASK64, stream_id & MASK64)

    def getstate(self):
        return (self.s0, self.s1, self.s2, self.s3)

    def setstate(self, state):
        self.s0, self.s1, self.s2, self.s3 = (int(v) & MASK64 for v in state)

    def copy(self):
        other = Xoshiro256.__new__(Xoshiro256)
        other.setstate(self.getstate())
        return other

    def next_u64(self):
        s0, s1, s2, s3 = self.s0, self.s1, self.s2, self.s3
        result = (_rotl((s1 * 5) & MASK64, 7) * 9) & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self.s0, self.s1, self.s2, self.s3 = s0, s1, s2, s3
        return result

    def uniform01(self):
        return (self.next_u64() >> 11) * TWO_POW_M53

    def fill_uniform(self, count):
        return np.array([self.uniform01() for _ in range(count)])

    def randbelow(self, n):
        return int(self.uniform01() * n)

    def normal(self):
        # Marsaglia polar method; the second variate is discarded.
        while True:
            u = 2.0 * self.uniform01() - 1.0
            v = 2.0 * self.uniform01() - 1.0
            s = u * u + v * v
            if 0.0 < s < 1.0:
                return u * math.sqrt(-2.0 * math.log(s) / s)

    def gamma(self, shape):
        if not shape > 0.0:
            raise ValueError("gamma shape must be positive")
        if shape < 1.0:
            g = self.gamma(shape + 1.0)
            return g * self.uniform01() ** (1.0 / shape)
        d = shape - 1.0 / 3.0
        c = 1.0 / math.sqrt(9.0 * d)
        while True:
            x = self.normal()
            v = 1.0 + c * x
            if v <= 0.0:
                continue
            v = v * v * v
            u = self.uniform01()
            x2 = x * x
            if u < 1.0 - 0.0331 * x2 * x2:
                return d * v
            if u > 0.0 and math.log(u) < 0.5 * x2 + d * (1.0 - v + math.log(v)):
                return d * v

    def beta(self, a, b):
        if not (a > 0.0 and b > 0.0):
            raise ValueError("beta shape parameters must be positive")
        g1 = self.gamma(a)
        g2 = self.gamma(b)
        total = g1 + g2
        if total == 0.0:
            r = 0.5 if a == b else (BETA_HI if a > b else BETA_LO)
        else:
            r = g1 / total
        if r <= 0.0:
            return BETA_LO
        if r >= 1.0:
            return BETA_HI
        return r


def thompson_select(alphas, betas, rng):
    best = 0
    best_theta = -1.0
    for i in range(len(alphas)):
        theta = rng.beta(alphas[i], betas[i])
        if theta > best_theta:
            best_theta = theta
            best = i
    return best


def tchebycheff(f, w, z, eps_w):
    g = 0.0
    for i in range(len(f)):
        wi = w[i] if w[i] > eps_w else eps_w
        v = abs(f[i] - z[i]) / wi
        if v > g:
            g = v
    return g


def fitness_improvement(child, F, Wg, z, scope):
    """Max over ``scope`` of g(incumbent) - g(child); ties go to the lowest index.

    ``Wg`` holds weights already clamped from below by the zero-weight guard.
    """
    scope = np.asarray(scope, dtype=np.intp)
    w = Wg[scope]
    g_inc = (np.abs(F[scope] - z) / w).max(axis=1)
    g_child = (np.abs(np.asarray(child) - z) / w).max(axis=1)
    diff = g_inc - g_child
    best_val = diff.max()
    best = int(scope[diff == best_val].min())
    return float(best_val), best


def tournament(utilities, boundary, count, depth, rng):
    n = len(utilities)
    chosen = list(boundary)
    taken = set(chosen)
    pool = [i for i in range(n) if i not in taken]
    for _ in range(count):
        size = len(pool)
        best_pos = rng.randbelow(size)
        best = pool[best_pos]
        for _ in range(depth - 1):
            pos = rng.randbelow(size)
            cand = pool[pos]
            if utilities[cand] > utilities[best]:
                best_pos = pos
                best = cand
        chosen.append(best)
        pool.pop(best_pos)
    return chosen


def select_distinct(scope, exclude, count, rng):
    """Draw ``count`` distinct members of ``scope`` other than ``exclude``.

    Rejection sampling; the caller guarantees enough eligible members.
    """
    size = len(scope)
    picked = []
    while len(picked) < count:
        cand = int(scope[rng.randbelow(size)])
        if cand != exclude and cand not in picked:
            picked.append(cand)
    return picked


def variation(op, target, parents, lower, upper, F, K, um_prob, rng):
    """Apply pool operator ``op`` then clamp into bounds. Returns a new array."""
    n = len(target)
    out = np.empty(n)
    if op == 4:
        for j in range(n):
            flip = rng.uniform01()
            step = rng.uniform01()
            v = target[j]
            if flip < um_prob:
                v = v + step * (upper[j] - lower[j])
            out[j] = v
    else:
        p = parents
        for j in range(n):
            x = target[j]
            if op == 0:
                v = x + F * (p[0][j] - p[1][j])
            elif op == 1:
                v = x + F * (p[0][j] - p[1][j]) + F * (p[2][j] - p[3][j])
            elif op == 2:
                v = x + K * (x - p[0][j]) + F * (p[1][j] - p[2][j])
            elif op == 3:
                v = x + K * (x - p[0][j]) + F * (p[1][j] - p[2][j]) + F * (p[3][j] - p[4][j])
            else:
                raise ValueError("unknown operator %r" % (op,))
            out[j] = v
    for j in range(n):
        if out[j] < lower[j]:
            out[j] = lower[j]
        elif out[j] > upper[j]:
            out[j] = upper[j]
    return out


def polynomial_mutation(x, lower, upper, eta, prob, rng):
    n = len(x)
    out = np.empty(n)
    expo = 1.0 / (eta + 1.0)
    for j in range(n):
        flip = rng.uniform01()
        u = rng.uniform01()
        v = x[j]
        if flip < prob:
            if u < 0.5:
                delta = (2.0 * u) ** expo - 1.0
            else:
                delta = 1.0 - (2.0 * (1.0 - u)) ** expo
            v = v + delta * (upper[j] - lower[j])
            if v < lower[j]:
                v = lower[j]
            elif v > upper[j]:
                v = upper[j]
        out[j] = v
    return out


# CEC-2009 unconstrained problems UF1-UF10 (Zhang et al., technical report
# CES-487, 2008). Index j below is the 1-based decision variable index.

def uf_evaluate(k, x):
    n = len(x)
    x1 = x[0]
    pi = math.pi
    if k in (1, 2, 4, 5, 6, 7):
        s1 = s2 = 0.0
        p1 = p2 = 1.0
        c1 = c2 = 0
        for j in range(2, n + 1):
            xj = x[j - 1]
            if k == 2:
                a = 0.3 * x1 * x1 * math.cos(24.0 * pi * x1 + 4.0 * j * pi / n) + 0.6 * x1
                if j % 2 == 1:
                    y = xj - a * math.cos(6.0 * pi * x1 + j * pi / n)
                else:
                    y = xj - a * math.sin(6.0 * pi * x1 + j * pi / n)
            else:
                y = xj - math.sin(6.0 * pi * x1 + j * pi / n)
            if k == 4:
                ay = abs(y)
                t = ay / (1.0 + math.exp(2.0 * ay))
            elif k == 5:
                t = 2.0 * y * y - math.cos(4.0 * pi * y) + 1.0
            else:
                t = y * y
            if j % 2 == 1:
                s1 += t
                c1 += 1
                if k == 6:
                    p1 *= math.cos(20.0 * y * pi / math.sqrt(j))
            else:
                s2 += t
                c2 += 1
                if k == 6:
                    p2 *= math.cos(20.0 * y * pi / math.sqrt(j))
        if k in (1, 2):
            f1 = x1 + 2.0 * s1 / c1
            f2 = 1.0 - math.sqrt(x1) + 2.0 * s2 / c2
        elif k == 4:
            f1 = x1 + 2.0 * s1 / c1
            f2 = 1.0 - x1 * x1 + 2.0 * s2 / c2
        elif k == 5:
            h = (0.5 / 10.0 + 0.1) * abs(math.sin(20.0 * pi * x1))
            f1 = x1 + h + 2.0 * s1 / c1
            f2 = 1.0 - x1 + h + 2.0 * s2 / c2
        elif k == 6:
            h = 2.0 * (0.5 / 2.0 + 0.1) * math.sin(4.0 * pi * x1)
            if h < 0.0:
                h = 0.0
            f1 = x1 + h + 2.0 * (4.0 * s1 - 2.0 * p1 + 2.0) / c1
            f2 = 1.0 - x1 + h + 2.0 * (4.0 * s2 - 2.0 * p2 + 2.0) / c2
        else:
            r = x1 ** 0.2
            f1 = r + 2.0 * s1 / c1
            f2 = 1.0 - r + 2.0 * s2 / c2
        return np.array([f1, f2])
    if k == 3:
        s1 = s2 = 0.0
        p1 = p2 = 1.0
        c1 = c2 = 0
        for j in range(2, n + 1):
            y = x[j - 1] - x1 ** (0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0)))
            cp = math.cos(20.0 * y * pi / math.sqrt(j))
            if j % 2 == 1:
                s1 += y * y
                p1 *= cp
                c1 += 1
            else:
                s2 += y * y
                p2 *= cp
                c2 += 1
        f1 = x1 + 2.0 * (4.0 * s1 - 2.0 * p1 + 2.0) / c1
        f2 = 1.0 - math.sqrt(x1) + 2.0 * (4.0 * s2 - 2.0 * p2 + 2.0) / c2
        return np.array([f1, f2])
    if k in (8, 9, 10):
        x2 = x[1]
        s = [0.0, 0.0, 0.0]
        c = [0, 0, 0]
        for j in range(3, n + 1):
            y = x[j - 1] - 2.0 * x2 * math.sin(2.0 * pi * x1 + j * pi / n)
            if k == 10:
                t = 4.0 * y * y - math.cos(8.0 * pi * y) + 1.0
            else:
                t = y * y
            # J1: j-1 divisible by 3, J2: j-2 divisible by 3, J3: j divisible by 3.
            g = (j - 1) % 3
            s[g] += t
            c[g] += 1
        if k == 9:
            e = 0.1
            h = (1.0 + e) * (1.0 - 4.0 * (2.0 * x1 - 1.0) ** 2)
            if h < 0.0:
                h = 0.0
            f1 = 0.5 * (h + 2.0 * x1) * x2 + 2.0 * s[0] / c[0]
            f2 = 0.5 * (h - 2.0 * x1 + 2.0) * x2 + 2.0 * s[1] / c[1]
            f3 = 1.0 - x2 + 2.0 * s[2] / c[2]
        else:
            a = 0.5 * pi * x1
            b = 0.5 * pi * x2
            f1 = math.cos(a) * math.cos(b) + 2.0 * s[0] / c[0]
            f2 = math.cos(a) * math.sin(b) + 2.0 * s[1] / c[1]
            f3 = math.sin(a) + 2.0 * s[2] / c[2]
        return np.array([f1, f2, f3])
    raise ValueError("unknown UF problem %r" % (k,))
