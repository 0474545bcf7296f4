# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled valuation sweep.  Same contract as ``_pykernels.valuation_sweep``."""

from libc.stdlib cimport calloc, malloc, free

BACKEND_NAME = "cython"

cdef enum:
    MAXDIGITS = 64


def valuation_sweep(long long p, long long limit):
    if p < 2:
        raise ValueError("p must be >= 2")
    if limit < 0:
        raise ValueError("limit must be >= 0")
    cdef long long size = limit + 1
    cdef long long *s = <long long *> malloc(size * sizeof(long long))
    cdef long long *floors = <long long *> malloc(size * sizeof(long long))
    cdef unsigned char *ndig = <unsigned char *> malloc(size * sizeof(unsigned char))
    # Zero-filled, so digits past a number's length read as 0.
    cdef unsigned char *digits = <unsigned char *> calloc(size * MAXDIGITS, sizeof(unsigned char))
    if not s or not floors or not ndig or not digits:
        free(s); free(floors); free(ndig); free(digits)
        raise MemoryError()

    cdef long long n, k, x, r, total, num, c, fdiff, pairs = 0, mismatches = 0
    cdef long long sn, fn, t, carry
    cdef int i, length, la, lb
    cdef unsigned char *da
    cdef unsigned char *db
    first = None
    try:
        for n in range(size):
            x = n
            total = 0
            length = 0
            while x:
                r = x % p
                x = x // p
                digits[n * MAXDIGITS + length] = <unsigned char> r
                length += 1
                total += r
            ndig[n] = <unsigned char> length
            s[n] = total
            x = n
            total = 0
            while x:
                x = x // p
                total += x
            floors[n] = total

        for n in range(size):
            num = n - s[n]
            if num != (p - 1) * floors[n]:
                mismatches += 1
                if first is None:
                    first = (n, -1, num // (p - 1), floors[n], 0)

        for n in range(size):
            sn = s[n]
            fn = floors[n]
            for k in range(n + 1):
                num = s[k] + s[n - k] - sn
                da = digits + k * MAXDIGITS
                db = digits + (n - k) * MAXDIGITS
                la = ndig[k]
                lb = ndig[n - k]
                length = la if la > lb else lb
                carry = 0
                c = 0
                for i in range(length):
                    t = da[i] + db[i] + carry
                    carry = t >= p
                    c += carry
                fdiff = fn - floors[k] - floors[n - k]
                if num != (p - 1) * c or c != fdiff:
                    mismatches += 1
                    if first is None:
                        first = (n, k, num // (p - 1), c, fdiff)
            pairs += n + 1
    finally:
        free(s)
        free(floors)
        free(ndig)
        free(digits)
    return size, pairs, mismatches, first
