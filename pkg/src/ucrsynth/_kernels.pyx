# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled statevector kernels.

Same contract as _kernels_py: in-place updates of a length-2**n complex
amplitude array, qubit addressed by bit position from the least significant
end. Pair indices are walked block-by-block with a unit-stride inner loop,
so each amplitude is touched exactly once and the C compiler can vectorize.
"""


cdef inline Py_ssize_t insert0(Py_ssize_t x, int pos) noexcept nogil:
    # Spread x by one bit: result has a 0 at `pos`, x's bits around it.
    return ((x >> pos) << (pos + 1)) | (x & ((<Py_ssize_t>1 << pos) - 1))


cpdef void rot(double complex[::1] amps, int t_pos,
               double complex r00, double complex r01,
               double complex r10, double complex r11) noexcept:
    """Apply a 2x2 matrix to the qubit at bit position t_pos, in place."""
    cdef Py_ssize_t dim = amps.shape[0]
    cdef Py_ssize_t stride = <Py_ssize_t>1 << t_pos
    cdef Py_ssize_t base = 0
    cdef Py_ssize_t off, i0, i1
    cdef double complex a0, a1
    with nogil:
        while base < dim:
            for off in range(stride):
                i0 = base + off
                i1 = i0 + stride
                a0 = amps[i0]
                a1 = amps[i1]
                amps[i0] = r00 * a0 + r01 * a1
                amps[i1] = r10 * a0 + r11 * a1
            base += stride << 1


cpdef void cnot(double complex[::1] amps, int c_pos, int t_pos) noexcept:
    """Swap amplitude pairs whose control bit is set, in place."""
    cdef Py_ssize_t quarter = amps.shape[0] >> 2
    cdef int lo = c_pos if c_pos < t_pos else t_pos
    cdef int hi = c_pos ^ t_pos ^ lo
    cdef Py_ssize_t c_bit = <Py_ssize_t>1 << c_pos
    cdef Py_ssize_t t_bit = <Py_ssize_t>1 << t_pos
    cdef Py_ssize_t x, i0, i1
    cdef double complex tmp
    with nogil:
        for x in range(quarter):
            i0 = insert0(insert0(x, lo), hi) | c_bit
            i1 = i0 | t_bit
            tmp = amps[i0]
            amps[i0] = amps[i1]
            amps[i1] = tmp
