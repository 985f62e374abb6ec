# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; contracts match zgf._kernels_py exactly."""

from cpython.array cimport array
from libc.stdlib cimport free, malloc

ctypedef long long i64


cdef inline i64 _m(i64 x, i64 p) nogil:
    x = x % p
    return x + p if x < 0 else x


cdef inline i64 _mul_re(i64 p, i64 ar, i64 ai, i64 br, i64 bi) nogil:
    return _m(ar * br - ai * bi, p)


cdef inline i64 _mul_im(i64 p, i64 ar, i64 ai, i64 br, i64 bi) nogil:
    return _m(ar * bi + ai * br, p)


cdef void _powc(i64 p, i64 re, i64 im, i64 k, i64 *out_re, i64 *out_im) nogil:
    cdef i64 rr = 1, ri = 0, br = _m(re, p), bi = _m(im, p), t
    while k:
        if k & 1:
            t = _mul_re(p, rr, ri, br, bi)
            ri = _mul_im(p, rr, ri, br, bi)
            rr = t
        t = _mul_re(p, br, bi, br, bi)
        bi = _mul_im(p, br, bi, br, bi)
        br = t
        k >>= 1
    out_re[0] = rr
    out_im[0] = ri


cdef i64 _gcd(i64 a, i64 b) nogil:
    cdef i64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


def gi_pow_table(p, re, im, count):
    """Successive powers x**0 .. x**(count-1) as parallel residue lists."""
    cdef i64 cp = p, cre = re, cim = im, n = count
    cdef list out_re = [0] * count
    cdef list out_im = [0] * count
    cdef i64 cr = 1, ci = 0, t
    cdef Py_ssize_t k
    for k in range(n):
        out_re[k] = cr
        out_im[k] = ci
        t = _mul_re(cp, cr, ci, cre, cim)
        ci = _mul_im(cp, cr, ci, cre, cim)
        cr = t
    return out_re, out_im


def stream_eval(p, trans_re, trans_im, tail, w_re, w_im, f_re, f_im):
    """Cesaro evaluation of a term stream with an eventually periodic tail.

    See the pure-Python twin for the full contract.
    """
    cdef i64 cp = p
    cdef i64 cwre = _m(w_re, cp), cwim = _m(w_im, cp)
    cdef Py_ssize_t T = len(tail)
    cdef Py_ssize_t t0 = len(trans_re)

    cdef array tail_a = array('q', [v % p for v in tail])
    cdef i64[:] tl = tail_a

    # w**(p*p-1) = 1 for every nonzero w, so lcm(T, p*p-1) is always a
    # period of the term word; the minimal one divides it
    cdef i64 group = cp * cp - 1
    cdef i64 span = (<i64> T) / _gcd(<i64> T, group) * group
    cdef i64 t

    # smallest divisor d of span that is a period of the term word
    cdef i64 d_star = span, d, wd_re, wd_im
    cdef Py_ssize_t m
    cdef bint ok
    cdef list divs = _divisors(span)
    for d in divs:
        _powc(cp, cwre, cwim, d, &wd_re, &wd_im)
        ok = True
        for m in range(T):
            if (tl[(m + d) % T] * wd_re) % cp != tl[m] or (tl[(m + d) % T] * wd_im) % cp != 0:
                ok = False
                break
        if ok:
            d_star = d
            break

    # one period of partial sums of the periodic part
    cdef i64 *ps_re = <i64 *> malloc((d_star + 1) * sizeof(i64))
    cdef i64 *ps_im = <i64 *> malloc((d_star + 1) * sizeof(i64))
    if ps_re == NULL or ps_im == NULL:
        free(ps_re)
        free(ps_im)
        raise MemoryError()
    cdef i64 cur_re = _m(f_re, cp), cur_im = _m(f_im, cp), v
    cdef i64 i
    try:
        ps_re[0] = 0
        ps_im[0] = 0
        for i in range(d_star):
            v = tl[i % T]
            ps_re[i + 1] = (ps_re[i] + v * cur_re) % cp
            ps_im[i + 1] = (ps_im[i] + v * cur_im) % cp
            t = _mul_re(cp, cur_re, cur_im, cwre, cwim)
            cur_im = _mul_im(cp, cur_re, cur_im, cwre, cwim)
            cur_re = t
        delta_re = ps_re[d_star]
        delta_im = ps_im[d_star]

        period = d_star if (delta_re == 0 and delta_im == 0) else d_star * cp
        converges = period % cp != 0

        # cumulative sums over the transient
        ts_re_a = array('q', [0] * t0)
        ts_im_a = array('q', [0] * t0)
        acc_re = 0
        acc_im = 0
        for m in range(t0):
            acc_re = (acc_re + trans_re[m]) % cp
            acc_im = (acc_im + trans_im[m]) % cp
            ts_re_a[m] = acc_re
            ts_im_a[m] = acc_im
        c_re = acc_re
        c_im = acc_im

        preperiod = t0
        while preperiod > 0:
            s1 = preperiod - 1
            s2 = preperiod - 1 + period
            if (
                _s_at(cp, s1, t0, ts_re_a, c_re, delta_re, ps_re, d_star)
                == _s_at(cp, s2, t0, ts_re_a, c_re, delta_re, ps_re, d_star)
                and _s_at(cp, s1, t0, ts_im_a, c_im, delta_im, ps_im, d_star)
                == _s_at(cp, s2, t0, ts_im_a, c_im, delta_im, ps_im, d_star)
            ):
                preperiod -= 1
            else:
                break

        sigma_re = 0
        sigma_im = 0
        if converges:
            total_re = d_star * c_re
            total_im = d_star * c_im
            for i in range(1, d_star + 1):
                total_re += ps_re[i]
                total_im += ps_im[i]
            d_inv = pow(d_star % cp, cp - 2, cp)
            sigma_re = total_re % cp * d_inv % cp
            sigma_im = total_im % cp * d_inv % cp

        return int(converges), int(sigma_re), int(sigma_im), int(preperiod), int(period)
    finally:
        free(ps_re)
        free(ps_im)


cdef i64 _s_at(i64 p, i64 s, i64 t0, ts, i64 c, i64 delta, i64 *ps, i64 d_star):
    cdef i64 q, r
    if s < t0:
        return ts[s]
    q = (s - t0 + 1) / d_star
    r = (s - t0 + 1) % d_star
    return (c + (q % p) * delta + ps[r]) % p


def _divisors(n):
    cdef i64 cn = n, d = 1
    small, large = [], []
    while d * d <= cn:
        if cn % d == 0:
            small.append(d)
            if d != cn / d:
                large.append(cn / d)
        d += 1
    return small + large[::-1]


def iffzt_window(p, z_re, z_im, v_re, v_im):
    """Inverse transform over the whole window; see the pure twin."""
    cdef i64 cp = p
    cdef Py_ssize_t mm = len(z_re)
    cdef array zr = array('q', z_re)
    cdef array zi = array('q', z_im)
    cdef array vr = array('q', v_re)
    cdef array vi = array('q', v_im)
    cdef array cr = array('q', [1] * mm)
    cdef array ci = array('q', [0] * mm)
    cdef i64[:] zrv = zr, ziv = zi, vrv = vr, viv = vi, crv = cr, civ = ci
    cdef i64 m_inv = pow(mm % cp, cp - 2, cp)
    out_re = [0] * mm
    out_im = [0] * mm
    cdef i64 acc_re, acc_im, t
    cdef Py_ssize_t n, k
    for n in range(mm):
        acc_re = 0
        acc_im = 0
        for k in range(mm):
            acc_re += vrv[k] * crv[k] - viv[k] * civ[k]
            acc_im += vrv[k] * civ[k] + viv[k] * crv[k]
        out_re[n] = _m(acc_re, cp) * m_inv % cp
        out_im[n] = _m(acc_im, cp) * m_inv % cp
        for k in range(mm):
            t = _mul_re(cp, crv[k], civ[k], zrv[k], ziv[k])
            civ[k] = _mul_im(cp, crv[k], civ[k], zrv[k], ziv[k])
            crv[k] = t
    return out_re, out_im
