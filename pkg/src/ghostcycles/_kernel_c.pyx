# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _kernel_py.cell_records.

Fixed-width arithmetic throughout: moduli, constants, and quotients live
in int64, residues in uint64 (wrapping multiplication gives reduction
mod 2^64 for free).  kernel.py routes a cell here only after proving the
values fit, so no overflow checks appear in the loop.
"""

from libc.stdint cimport int64_t, uint64_t


cdef uint64_t _inv_pow2_64(uint64_t a) noexcept:
    # Newton lifting; a odd makes a its own inverse mod 8, and each round
    # doubles the count of correct low bits: 3 -> 6 -> 12 -> 24 -> 48 -> 96.
    cdef uint64_t inv = a
    cdef int i
    for i in range(5):
        inv = inv * (2 - a * inv)
    return inv


def cell_records(int x, int y, int q, long long d, int precision):
    """Identical contract to _kernel_py.cell_records."""
    cdef uint64_t mask
    if precision == 64:
        mask = <uint64_t> 0 - 1
    else:
        mask = ((<uint64_t> 1) << precision) - 1

    cdef int64_t powq[64]
    cdef int k
    powq[y - 1] = 1
    for k in range(y - 2, -1, -1):
        powq[k] = powq[k + 1] * q

    cdef int64_t modulus = ((<int64_t> 1) << x) - powq[0] * q
    cdef uint64_t inv = _inv_pow2_64(<uint64_t> modulus)

    cdef int idx[64]
    cdef int r = y - 1          # mid entries sigma[1..y-1], values in [1, x-1]
    for k in range(r):
        idx[k] = k + 1

    cdef list out = []
    cdef int64_t c, quo
    cdef uint64_t n0
    cdef int j
    cdef tuple sigma
    while True:
        c = powq[0]
        for k in range(r):
            c += powq[k + 1] << idx[k]
        c *= d
        n0 = (inv * <uint64_t> c) & mask
        sigma = (0,) + tuple([idx[k] for k in range(r)])
        if c % modulus == 0:
            quo = c // modulus
            out.append((sigma, c, n0, quo))
        else:
            out.append((sigma, c, n0, None))

        # next combination: bump the rightmost index that has headroom
        j = r - 1
        while j >= 0 and idx[j] == x - 1 - (r - 1 - j):
            j -= 1
        if j < 0:
            break
        idx[j] += 1
        for k in range(j + 1, r):
            idx[k] = idx[k - 1] + 1
    return out
