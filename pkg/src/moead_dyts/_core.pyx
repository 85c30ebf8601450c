# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels.

Same surface as ``_pycore``; every routine follows the pure-Python version
operation for operation so results are bit-identical.
"""
from libc.math cimport sqrt, log, pow, fabs, sin, cos, exp, M_PI
from libc.stdint cimport uint64_t

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL
cdef uint64_t STREAM_KEY = 0xD1B54A32D192ED03ULL
cdef double TWO_POW_M53 = 1.0 / 9007199254740992.0
cdef double BETA_LO = 5e-324
cdef double BETA_HI = 1.0 - 1.0 / 9007199254740992.0

N_OPERATORS = 5
PARENT_COUNTS = (2, 4, 3, 5, 0)


cdef inline uint64_t _fmix64(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline uint64_t _rotl(uint64_t x, int k) nogil:
    return (x << k) | (x >> (64 - k))


def fmix64(z):
    return _fmix64(<uint64_t>(z & 0xFFFFFFFFFFFFFFFF))


cdef class Xoshiro256:
    """xoshiro256** generator with Marsaglia-Tsang Gamma and Beta draws."""

    cdef uint64_t s0, s1, s2, s3

    def __init__(self, seed=0, stream_id=0):
        if seed < 0 or stream_id < 0:
            raise ValueError("seed and stream_id must be non-negative")
        cdef uint64_t sd = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
        cdef uint64_t st = <uint64_t>(stream_id & 0xFFFFFFFFFFFFFFFF)
        cdef uint64_t a = _fmix64(sd + GOLDEN)
        cdef uint64_t b = _fmix64((st ^ STREAM_KEY) + 2 * GOLDEN)
        self.s0 = a
        self.s1 = _fmix64(a ^ b)
        self.s2 = _fmix64(self.s1 + GOLDEN)
        self.s3 = _fmix64(self.s2 + GOLDEN)
        if self.s0 == 0 and self.s1 == 0 and self.s2 == 0 and self.s3 == 0:
            self.s3 = GOLDEN

    def getstate(self):
        return (int(self.s0), int(self.s1), int(self.s2), int(self.s3))

    def setstate(self, state):
        self.s0, self.s1, self.s2, self.s3 = [int(v) & 0xFFFFFFFFFFFFFFFF for v in state]

    def copy(self):
        cdef Xoshiro256 other = Xoshiro256.__new__(Xoshiro256)
        other.s0 = self.s0
        other.s1 = self.s1
        other.s2 = self.s2
        other.s3 = self.s3
        return other

    def __reduce__(self):
        return (_rebuild_xoshiro, (self.getstate(),))

    cdef inline uint64_t _next(self) nogil:
        cdef uint64_t result = _rotl(self.s1 * 5, 7) * 9
        cdef uint64_t t = self.s1 << 17
        self.s2 ^= self.s0
        self.s3 ^= self.s1
        self.s1 ^= self.s2
        self.s0 ^= self.s3
        self.s2 ^= t
        self.s3 = _rotl(self.s3, 45)
        return result

    cdef inline double _uniform(self) nogil:
        return <double>(self._next() >> 11) * TWO_POW_M53

    cdef inline Py_ssize_t _randbelow(self, Py_ssize_t n) nogil:
        return <Py_ssize_t>(self._uniform() * n)

    cdef double _normal(self) nogil:
        cdef double u, v, s
        while True:
            u = 2.0 * self._uniform() - 1.0
            v = 2.0 * self._uniform() - 1.0
            s = u * u + v * v
            if 0.0 < s < 1.0:
                return u * sqrt(-2.0 * log(s) / s)

    cdef double _gamma(self, double shape) nogil:
        cdef double g, d, c, x, v, u, x2
        if shape < 1.0:
            g = self._gamma(shape + 1.0)
            return g * pow(self._uniform(), 1.0 / shape)
        d = shape - 1.0 / 3.0
        c = 1.0 / sqrt(9.0 * d)
        while True:
            x = self._normal()
            v = 1.0 + c * x
            if v <= 0.0:
                continue
            v = v * v * v
            u = self._uniform()
            x2 = x * x
            if u < 1.0 - 0.0331 * x2 * x2:
                return d * v
            if u > 0.0 and log(u) < 0.5 * x2 + d * (1.0 - v + log(v)):
                return d * v

    cdef double _beta(self, double a, double b) nogil:
        cdef double g1 = self._gamma(a)
        cdef double g2 = self._gamma(b)
        cdef double total = g1 + g2
        cdef double r
        if total == 0.0:
            if a == b:
                r = 0.5
            elif a > b:
                r = BETA_HI
            else:
                r = BETA_LO
        else:
            r = g1 / total
        if r <= 0.0:
            return BETA_LO
        if r >= 1.0:
            return BETA_HI
        return r

    def next_u64(self):
        return int(self._next())

    def uniform01(self):
        return self._uniform()

    def randbelow(self, Py_ssize_t n):
        return self._randbelow(n)

    def normal(self):
        return self._normal()

    def gamma(self, double shape):
        if not shape > 0.0:
            raise ValueError("gamma shape must be positive")
        return self._gamma(shape)

    def beta(self, double a, double b):
        if not (a > 0.0 and b > 0.0):
            raise ValueError("beta shape parameters must be positive")
        return self._beta(a, b)

    def fill_uniform(self, Py_ssize_t count):
        cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(count)
        cdef Py_ssize_t i
        for i in range(count):
            out[i] = self._uniform()
        return out


def _rebuild_xoshiro(state):
    cdef Xoshiro256 r = Xoshiro256.__new__(Xoshiro256)
    r.setstate(state)
    return r


def thompson_select(alphas, betas, Xoshiro256 rng):
    cdef Py_ssize_t i, best = 0, k = len(alphas)
    cdef double theta, best_theta = -1.0, a, b
    for i in range(k):
        a = alphas[i]
        b = betas[i]
        if not (a > 0.0 and b > 0.0):
            raise ValueError("beta shape parameters must be positive")
        theta = rng._beta(a, b)
        if theta > best_theta:
            best_theta = theta
            best = i
    return best


def tchebycheff(const double[:] f, const double[:] w, const double[:] z, double eps_w):
    cdef Py_ssize_t i
    cdef double g = 0.0, wi, v
    for i in range(f.shape[0]):
        wi = w[i] if w[i] > eps_w else eps_w
        v = fabs(f[i] - z[i]) / wi
        if v > g:
            g = v
    return g


def fitness_improvement(const double[:] child, const double[:, :] F, const double[:, :] Wg,
                        const double[:] z, scope):
    cdef Py_ssize_t[:] sc = np.asarray(scope, dtype=np.intp)
    cdef Py_ssize_t m = F.shape[1], a, i, s
    cdef Py_ssize_t best = -1
    cdef double best_val = 0.0, gi, gc, v, wv, diff
    for a in range(sc.shape[0]):
        s = sc[a]
        gi = 0.0
        gc = 0.0
        for i in range(m):
            wv = Wg[s, i]
            v = fabs(F[s, i] - z[i]) / wv
            if v > gi:
                gi = v
            v = fabs(child[i] - z[i]) / wv
            if v > gc:
                gc = v
        diff = gi - gc
        if best < 0 or diff > best_val or (diff == best_val and s < best):
            best_val = diff
            best = s
    return best_val, best


def tournament(const double[:] utilities, boundary, Py_ssize_t count, Py_ssize_t depth,
               Xoshiro256 rng):
    cdef Py_ssize_t n = utilities.shape[0]
    chosen = list(boundary)
    taken = set(chosen)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] pool_arr = np.array(
        [i for i in range(n) if i not in taken], dtype=np.intp)
    cdef Py_ssize_t[:] pool = pool_arr
    cdef Py_ssize_t size = pool.shape[0]
    cdef Py_ssize_t t, d, pos, best_pos, best, cand, q
    for t in range(count):
        best_pos = rng._randbelow(size)
        best = pool[best_pos]
        for d in range(depth - 1):
            pos = rng._randbelow(size)
            cand = pool[pos]
            if utilities[cand] > utilities[best]:
                best_pos = pos
                best = cand
        chosen.append(best)
        # order-preserving removal, same as list.pop
        for q in range(best_pos, size - 1):
            pool[q] = pool[q + 1]
        size -= 1
    return chosen


def select_distinct(scope, Py_ssize_t exclude, Py_ssize_t count, Xoshiro256 rng):
    cdef Py_ssize_t[:] sc = np.asarray(scope, dtype=np.intp)
    cdef Py_ssize_t size = sc.shape[0], got = 0, cand, q
    cdef Py_ssize_t picked[8]
    cdef bint dup
    if count > 8:
        raise ValueError("at most 8 parents supported")
    while got < count:
        cand = sc[rng._randbelow(size)]
        if cand == exclude:
            continue
        dup = False
        for q in range(got):
            if picked[q] == cand:
                dup = True
                break
        if not dup:
            picked[got] = cand
            got += 1
    return [picked[q] for q in range(count)]


def variation(int op, const double[:] target, parents, const double[:] lower,
              const double[:] upper, double F, double K, double um_prob, Xoshiro256 rng):
    cdef Py_ssize_t n = target.shape[0], j
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out_arr = np.empty(n)
    cdef double[:] out = out_arr
    cdef const double[:, :] p
    cdef double x, v, flip, step
    if op == 4:
        for j in range(n):
            flip = rng._uniform()
            step = rng._uniform()
            v = target[j]
            if flip < um_prob:
                v = v + step * (upper[j] - lower[j])
            out[j] = v
    else:
        if op < 0 or op > 3:
            raise ValueError("unknown operator %r" % (op,))
        p = np.asarray(parents, dtype=np.float64)
        for j in range(n):
            x = target[j]
            if op == 0:
                v = x + F * (p[0, j] - p[1, j])
            elif op == 1:
                v = x + F * (p[0, j] - p[1, j]) + F * (p[2, j] - p[3, j])
            elif op == 2:
                v = x + K * (x - p[0, j]) + F * (p[1, j] - p[2, j])
            else:
                v = x + K * (x - p[0, j]) + F * (p[1, j] - p[2, j]) + F * (p[3, j] - p[4, j])
            out[j] = v
    for j in range(n):
        if out[j] < lower[j]:
            out[j] = lower[j]
        elif out[j] > upper[j]:
            out[j] = upper[j]
    return out_arr


def polynomial_mutation(const double[:] x, const double[:] lower, const double[:] upper,
                        double eta, double prob, Xoshiro256 rng):
    cdef Py_ssize_t n = x.shape[0], j
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out_arr = np.empty(n)
    cdef double[:] out = out_arr
    cdef double expo = 1.0 / (eta + 1.0)
    cdef double flip, u, v, delta
    for j in range(n):
        flip = rng._uniform()
        u = rng._uniform()
        v = x[j]
        if flip < prob:
            if u < 0.5:
                delta = pow(2.0 * u, expo) - 1.0
            else:
                delta = 1.0 - pow(2.0 * (1.0 - u), expo)
            v = v + delta * (upper[j] - lower[j])
            if v < lower[j]:
                v = lower[j]
            elif v > upper[j]:
                v = upper[j]
        out[j] = v
    return out_arr


def uf_evaluate(int k, const double[:] x):
    cdef Py_ssize_t n = x.shape[0], j, g
    cdef double x1 = x[0], x2, xj, a, y, ay, t, h, r, cp, pi = M_PI
    cdef double s1 = 0.0, s2 = 0.0, p1 = 1.0, p2 = 1.0, f1, f2, f3, e
    cdef Py_ssize_t c1 = 0, c2 = 0
    cdef double s[3]
    cdef Py_ssize_t c[3]
    if k == 1 or k == 2 or k == 4 or k == 5 or k == 6 or k == 7:
        for j in range(2, n + 1):
            xj = x[j - 1]
            if k == 2:
                a = 0.3 * x1 * x1 * cos(24.0 * pi * x1 + 4.0 * j * pi / n) + 0.6 * x1
                if j % 2 == 1:
                    y = xj - a * cos(6.0 * pi * x1 + j * pi / n)
                else:
                    y = xj - a * sin(6.0 * pi * x1 + j * pi / n)
            else:
                y = xj - sin(6.0 * pi * x1 + j * pi / n)
            if k == 4:
                ay = fabs(y)
                t = ay / (1.0 + exp(2.0 * ay))
            elif k == 5:
                t = 2.0 * y * y - cos(4.0 * pi * y) + 1.0
            else:
                t = y * y
            if j % 2 == 1:
                s1 += t
                c1 += 1
                if k == 6:
                    p1 *= cos(20.0 * y * pi / sqrt(<double>j))
            else:
                s2 += t
                c2 += 1
                if k == 6:
                    p2 *= cos(20.0 * y * pi / sqrt(<double>j))
        if k == 1 or k == 2:
            f1 = x1 + 2.0 * s1 / c1
            f2 = 1.0 - sqrt(x1) + 2.0 * s2 / c2
        elif k == 4:
            f1 = x1 + 2.0 * s1 / c1
            f2 = 1.0 - x1 * x1 + 2.0 * s2 / c2
        elif k == 5:
            h = (0.5 / 10.0 + 0.1) * fabs(sin(20.0 * pi * x1))
            f1 = x1 + h + 2.0 * s1 / c1
            f2 = 1.0 - x1 + h + 2.0 * s2 / c2
        elif k == 6:
            h = 2.0 * (0.5 / 2.0 + 0.1) * sin(4.0 * pi * x1)
            if h < 0.0:
                h = 0.0
            f1 = x1 + h + 2.0 * (4.0 * s1 - 2.0 * p1 + 2.0) / c1
            f2 = 1.0 - x1 + h + 2.0 * (4.0 * s2 - 2.0 * p2 + 2.0) / c2
        else:
            r = pow(x1, 0.2)
            f1 = r + 2.0 * s1 / c1
            f2 = 1.0 - r + 2.0 * s2 / c2
        return np.array([f1, f2])
    if k == 3:
        for j in range(2, n + 1):
            y = x[j - 1] - pow(x1, 0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0)))
            cp = cos(20.0 * y * pi / sqrt(<double>j))
            if j % 2 == 1:
                s1 += y * y
                p1 *= cp
                c1 += 1
            else:
                s2 += y * y
                p2 *= cp
                c2 += 1
        f1 = x1 + 2.0 * (4.0 * s1 - 2.0 * p1 + 2.0) / c1
        f2 = 1.0 - sqrt(x1) + 2.0 * (4.0 * s2 - 2.0 * p2 + 2.0) / c2
        return np.array([f1, f2])
    if k == 8 or k == 9 or k == 10:
        x2 = x[1]
        for g in range(3):
            s[g] = 0.0
            c[g] = 0
        for j in range(3, n + 1):
            y = x[j - 1] - 2.0 * x2 * sin(2.0 * pi * x1 + j * pi / n)
            if k == 10:
                t = 4.0 * y * y - cos(8.0 * pi * y) + 1.0
            else:
                t = y * y
            g = (j - 1) % 3
            s[g] += t
            c[g] += 1
        if k == 9:
            e = 0.1
            h = (1.0 + e) * (1.0 - 4.0 * pow(2.0 * x1 - 1.0, 2.0))
            if h < 0.0:
                h = 0.0
            f1 = 0.5 * (h + 2.0 * x1) * x2 + 2.0 * s[0] / c[0]
            f2 = 0.5 * (h - 2.0 * x1 + 2.0) * x2 + 2.0 * s[1] / c[1]
            f3 = 1.0 - x2 + 2.0 * s[2] / c[2]
        else:
            a = 0.5 * pi * x1
            t = 0.5 * pi * x2
            f1 = cos(a) * cos(t) + 2.0 * s[0] / c[0]
            f2 = cos(a) * sin(t) + 2.0 * s[1] / c[1]
            f3 = sin(a) + 2.0 * s[2] / c[2]
        return np.array([f1, f2, f3])
    raise ValueError("unknown UF problem %r" % (k,))
