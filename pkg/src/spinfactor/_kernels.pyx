# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: the raw triple product and the translation-field
RK4 flow.  Signatures match ``spinfactor._kernels_py``."""
from libc.math cimport ceil, fabs

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef double complex cplx


cdef inline cplx _conj(cplx z) noexcept nogil:
    return z.real - 1j * z.imag


def triple_product(a_in, b_in, c_in):
    """{a,b,c} = <a|b>c + <c|b>a - <a|conj(c)>conj(b) on raw arrays."""
    cdef const cplx[::1] a = np.ascontiguousarray(a_in, dtype=np.complex128)
    cdef const cplx[::1] b = np.ascontiguousarray(b_in, dtype=np.complex128)
    cdef const cplx[::1] c = np.ascontiguousarray(c_in, dtype=np.complex128)
    cdef Py_ssize_t n = a.shape[0]
    out_arr = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] out = out_arr
    cdef cplx ab = 0, cb = 0, ac = 0
    cdef Py_ssize_t i
    for i in range(n):
        ab += a[i] * _conj(b[i])
        cb += c[i] * _conj(b[i])
        ac += a[i] * c[i]
    for i in range(n):
        out[i] = ab * c[i] + cb * a[i] - ac * _conj(b[i])
    return out_arr


cdef inline void _field(const cplx[::1] a, const cplx[::1] w, cplx[::1] out,
                        Py_ssize_t n) noexcept nogil:
    # translation field: a - {w,a,w} = a - 2<w|a>w + (det w) conj(a)
    cdef cplx wa = 0, ww = 0
    cdef Py_ssize_t i
    for i in range(n):
        wa += w[i] * _conj(a[i])
        ww += w[i] * w[i]
    for i in range(n):
        out[i] = a[i] - 2.0 * wa * w[i] + ww * _conj(a[i])


def rk4_flow(a_in, z_in, double tau, double step):
    """Integrate dw/dtau = a - {w,a,w} from w(0)=z for time tau (fixed-step RK4)."""
    cdef const cplx[::1] a = np.ascontiguousarray(a_in, dtype=np.complex128)
    cdef Py_ssize_t n = a.shape[0]
    w_arr = np.array(z_in, dtype=np.complex128)
    cdef cplx[::1] w = w_arr
    cdef Py_ssize_t nsteps = <Py_ssize_t>ceil(fabs(tau) / step)
    if nsteps < 1:
        nsteps = 1
    cdef double h = tau / nsteps
    buf = np.empty((5, n), dtype=np.complex128)
    cdef cplx[:, ::1] k = buf
    cdef Py_ssize_t s, i
    with nogil:
        for s in range(nsteps):
            _field(a, w, k[0], n)
            for i in range(n):
                k[4, i] = w[i] + 0.5 * h * k[0, i]
            _field(a, k[4], k[1], n)
            for i in range(n):
                k[4, i] = w[i] + 0.5 * h * k[1, i]
            _field(a, k[4], k[2], n)
            for i in range(n):
                k[4, i] = w[i] + h * k[2, i]
            _field(a, k[4], k[3], n)
            for i in range(n):
                w[i] = w[i] + (h / 6.0) * (k[0, i] + 2.0 * (k[1, i] + k[2, i]) + k[3, i])
    return w_arr
