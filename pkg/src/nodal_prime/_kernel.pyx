# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Word-sized kernels for moduli below 2**63.

Mirrors the pure-Python pipeline step for step (same ladder, same slope
scan) so both backends report identical verdicts and factors.
"""

cdef extern from *:
    """
    typedef unsigned __int128 nodal_u128;
    """
    ctypedef unsigned long long nodal_u128

ctypedef unsigned long long u64
ctypedef long long i64

# status codes for group operations
cdef enum:
    ELEMENT = 0
    IDENT = 1
    FACTOR = 2


cdef inline u64 mulmod(u64 a, u64 b, u64 n) nogil:
    return <u64>((<nodal_u128>a * b) % n)


cdef u64 powmod(u64 b, u64 e, u64 n) nogil:
    cdef u64 r = 1 % n
    b %= n
    while e:
        if e & 1:
            r = mulmod(r, b, n)
        b = mulmod(b, b, n)
        e >>= 1
    return r


cdef u64 gcd64(u64 a, u64 b) nogil:
    cdef u64 r
    while b:
        r = a % b
        a = b
        b = r
    return a


cdef int jacobi64(u64 top, u64 bottom) nogil:
    cdef int sign = 1
    cdef u64 tmp
    top %= bottom
    while top:
        while top & 1 == 0:
            top >>= 1
            if bottom & 7 == 3 or bottom & 7 == 5:
                sign = -sign
        tmp = top
        top = bottom
        bottom = tmp
        if top & 3 == 3 and bottom & 3 == 3:
            sign = -sign
        top %= bottom
    return sign if bottom == 1 else 0


cdef bint spsp2_64(u64 n) nogil:
    cdef u64 m = n - 1
    cdef int e = 0
    cdef u64 c
    cdef int k
    while m & 1 == 0:
        m >>= 1
        e += 1
    c = powmod(2, m, n)
    if c == 1 or c == n - 1:
        return True
    for k in range(e - 1):
        c = mulmod(c, c, n)
        if c == n - 1:
            return True
        if c == 1:
            return False
    return False


cdef bint is_prime_trial(u64 k) nogil:
    cdef u64 d = 3
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


cdef u64 next_prime_1mod4_64(u64 after) nogil:
    cdef u64 p = after + 1
    p += (5 - p % 4) % 4
    while not is_prime_trial(p):
        p += 4
    return p


cdef int invmod(u64 x, u64 n, u64 *out) nogil:
    # extended Euclid; on failure *out is gcd(x, n)
    cdef i64 s0 = 0, s1 = 1, tmp_s
    cdef u64 r0 = n, r1 = x % n, q, tmp_r
    while r1:
        q = r0 // r1
        tmp_r = r0 - q * r1
        r0 = r1
        r1 = tmp_r
        tmp_s = s0 - <i64>q * s1
        s0 = s1
        s1 = tmp_s
    if r0 != 1:
        out[0] = r0
        return 0
    if s0 < 0:
        out[0] = <u64>(s0 + <i64>n)
    else:
        out[0] = <u64>s0
    return 1


cdef int add_slopes(u64 t1, u64 t2, u64 a, u64 n, u64 *out) nogil:
    cdef u64 s = (t1 + t2) % n
    cdef u64 inv
    if s == 0:
        return IDENT
    if not invmod(s, n, &inv):
        out[0] = inv
        return FACTOR
    out[0] = mulmod((mulmod(t1, t2, n) + a) % n, inv, n)
    return ELEMENT


cdef int scalar_mul(u64 k, u64 t, u64 a, u64 n, u64 *out) nogil:
    # left-to-right double-and-add; *out holds the slope or the factor
    cdef int status = IDENT
    cdef u64 r = 0, res
    cdef int bit = 63
    if k == 0:
        return IDENT
    while not (k >> bit) & 1:
        bit -= 1
    while bit >= 0:
        if status == ELEMENT:
            status = add_slopes(r, r, a, n, &res)
            if status == FACTOR:
                out[0] = res
                return FACTOR
            r = res
        if (k >> bit) & 1:
            if status == IDENT:
                r = t
                status = ELEMENT
            else:
                status = add_slopes(r, t, a, n, &res)
                if status == FACTOR:
                    out[0] = res
                    return FACTOR
                r = res
        bit -= 1
    out[0] = r
    return status


def jacobi(u64 top, u64 bottom):
    return jacobi64(top, bottom)


def spsp2(u64 n):
    return spsp2_64(n)


def smallest_factor(u64 n):
    """Smallest prime factor of ``n >= 2`` by trial division (``n`` if prime)."""
    cdef u64 d
    if n % 2 == 0:
        return 2
    if n % 3 == 0:
        return 3
    d = 5
    while d * d <= n:
        if n % d == 0:
            return d
        if n % (d + 2) == 0:
            return d + 2
        d += 6
    return n


def quick_pipeline(u64 n, u64 t_start, int max_candidates):
    """Everything after the pretests for odd non-square ``5 <= n < 2**63``.

    Returns ``(code, a, t, factor)``: code 0 probable prime, 1 spsp2
    reject, 2 factor at base selection, 3 factor at point search, 4 group
    stage reject; -1 / -2 for exhausted base / point searches. Unused
    fields are 0.
    """
    cdef u64 a = 5, am, t = 0, g, r1, r2, q, res
    cdef int j, c, found = 0, s1, s2, sq
    cdef u64 i

    if not spsp2_64(n):
        return (1, 0, 0, 0)
    for c in range(max_candidates):
        j = jacobi64(n, a)
        if j == -1:
            found = 1
            break
        if j == 0 and a < n:
            return (2, 0, 0, a)
        a = next_prime_1mod4_64(a)
    if not found:
        return (-1, 0, 0, 0)
    am = a % n

    found = 0
    for i in range(n):
        t = (t_start + i) % n
        g = gcd64((mulmod(t, t, n) + n - am) % n, n)
        if g == 1:
            found = 1
            break
        if g != n:
            return (3, a, 0, g)
    if not found:
        return (-2, a, 0, 0)

    s1 = scalar_mul(n - 1, t, am, n, &r1)
    if s1 == FACTOR:
        return (4, a, t, r1)
    s2 = add_slopes(t, t, am, n, &r2)
    if s2 == FACTOR:
        return (4, a, t, r2)
    if s1 == IDENT:
        sq = s2
    elif s2 == IDENT:
        sq = s1
    else:
        sq = add_slopes(r1, r2, am, n, &res)
        if sq == FACTOR:
            return (4, a, t, res)
    return (0 if sq == IDENT else 4, a, t, 0)
