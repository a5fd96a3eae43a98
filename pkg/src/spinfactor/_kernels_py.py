"""Pure-numpy twins of the compiled kernels.

Same call signatures as the Cython module ``spinfactor._kernels``; operates on
raw contiguous complex128 arrays without validation.
"""
import numpy as np


def triple_product(a, b, c):
    """{a,b,c} = <a|b>c + <c|b>a - <a|conj(c)>conj(b) on raw arrays."""
    ab = np.vdot(b, a)
    cb = np.vdot(b, c)
    ac = np.dot(a, c)
    return ab * c + cb * a - ac * np.conjugate(b)


def _field(a, w):
    # translation field: a - {w,a,w} = a - 2<w|a>w + (det w) conj(a)
    wa = np.vdot(a, w)
    ww = np.dot(w, w)
    return a - 2.0 * wa * w + ww * np.conjugate(a)


def rk4_flow(a, z, tau, step):
    """Integrate dw/dtau = a - {w,a,w} from w(0)=z for time tau.

    Classical fixed-step 4th-order scheme; the step count is chosen so the
    uniform step never exceeds ``step``.
    """
    nsteps = max(1, int(np.ceil(abs(tau) / step)))
    h = tau / nsteps
    w = np.array(z, dtype=np.complex128)
    for _ in range(nsteps):
        k1 = _field(a, w)
        k2 = _field(a, w + (0.5 * h) * k1)
        k3 = _field(a, w + (0.5 * h) * k2)
        k4 = _field(a, w + h * k3)
        w = w + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
    return w
