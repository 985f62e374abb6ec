"""Pure-Python fallbacks for the hot numeric kernels.

Same contracts as the compiled extension ``zgf._kernels``; ``zgf.kernels``
picks whichever is available at import time.  Everything here works on raw
canonical residues, not element objects.
"""

from math import gcd


def _mul(p, ar, ai, br, bi):
    return (ar * br - ai * bi) % p, (ar * bi + ai * br) % p


def _pow(p, re, im, k):
    rr, ri = 1, 0
    br, bi = re % p, im % p
    while k:
        if k & 1:
            rr, ri = _mul(p, rr, ri, br, bi)
        br, bi = _mul(p, br, bi, br, bi)
        k >>= 1
    return rr, ri


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def gi_pow_table(p, re, im, count):
    """Successive powers x**0 .. x**(count-1) as parallel residue lists."""
    out_re = [0] * count
    out_im = [0] * count
    cr, ci = 1, 0
    for k in range(count):
        out_re[k] = cr
        out_im[k] = ci
        cr, ci = _mul(p, cr, ci, re, im)
    return out_re, out_im


def stream_eval(p, trans_re, trans_im, tail, w_re, w_im, f_re, f_im):
    """Cesaro evaluation of a term stream with an eventually periodic tail.

    The stream is ``trans`` followed by ``tail[m % T] * f * w**m`` for
    m = 0, 1, 2, ...  Returns ``(converges, sigma_re, sigma_im, preperiod,
    period)`` where ``period`` is the minimal period of the partial sums
    and ``sigma`` is their Cesaro mean (zeros when divergent).
    """
    T = len(tail)
    tail = [v % p for v in tail]
    # w**(p*p-1) = 1 for every nonzero w, so lcm(T, p*p-1) is always a
    # period of the term word; the minimal one divides it
    group = p * p - 1
    span = T // gcd(T, group) * group

    # minimal period of the periodic part: tail[(m+d) % T] * w**d == tail[m]
    d_star = span
    for d in _divisors(span):
        wd_re, wd_im = _pow(p, w_re, w_im, d)
        if all(
            tail[(m + d) % T] * wd_re % p == tail[m]
            and tail[(m + d) % T] * wd_im % p == 0
            for m in range(T)
        ):
            d_star = d
            break

    # one period of partial sums of the periodic part
    ps_re = [0] * (d_star + 1)
    ps_im = [0] * (d_star + 1)
    cur_re, cur_im = f_re % p, f_im % p
    for i in range(d_star):
        v = tail[i % T]
        ps_re[i + 1] = (ps_re[i] + v * cur_re) % p
        ps_im[i + 1] = (ps_im[i] + v * cur_im) % p
        cur_re, cur_im = _mul(p, cur_re, cur_im, w_re, w_im)
    delta_re, delta_im = ps_re[d_star], ps_im[d_star]

    period = d_star if (delta_re, delta_im) == (0, 0) else d_star * p
    converges = period % p != 0

    # cumulative sums over the transient
    t0 = len(trans_re)
    ts_re = [0] * t0
    ts_im = [0] * t0
    acc_re = acc_im = 0
    for i in range(t0):
        acc_re = (acc_re + trans_re[i]) % p
        acc_im = (acc_im + trans_im[i]) % p
        ts_re[i] = acc_re
        ts_im[i] = acc_im
    c_re, c_im = acc_re, acc_im

    def s_at(s):
        if s < t0:
            return ts_re[s], ts_im[s]
        q, r = divmod(s - t0 + 1, d_star)
        return (
            (c_re + q * delta_re + ps_re[r]) % p,
            (c_im + q * delta_im + ps_im[r]) % p,
        )

    preperiod = t0
    while preperiod > 0 and s_at(preperiod - 1) == s_at(preperiod - 1 + period):
        preperiod -= 1

    sigma_re = sigma_im = 0
    if converges:
        total_re = d_star * c_re
        total_im = d_star * c_im
        for r in range(1, d_star + 1):
            total_re += ps_re[r]
            total_im += ps_im[r]
        d_inv = pow(d_star % p, p - 2, p)
        sigma_re = total_re * d_inv % p
        sigma_im = total_im * d_inv % p

    return int(converges), sigma_re, sigma_im, preperiod, period


def iffzt_window(p, z_re, z_im, v_re, v_im):
    """Inverse transform x[n] = |GI*|**-1 * sum X(Z) * Z**n over the window.

    ``z_*`` enumerate the evaluation points and ``v_*`` the table values;
    returns the recovered values for n = 0 .. len(z)-1.
    """
    m = len(z_re)
    m_inv = pow(m % p, p - 2, p)
    cur_re = [1] * m
    cur_im = [0] * m
    out_re = [0] * m
    out_im = [0] * m
    for n in range(m):
        acc_re = acc_im = 0
        for k in range(m):
            acc_re += v_re[k] * cur_re[k] - v_im[k] * cur_im[k]
            acc_im += v_re[k] * cur_im[k] + v_im[k] * cur_re[k]
        out_re[n] = acc_re * m_inv % p
        out_im[n] = acc_im * m_inv % p
        for k in range(m):
            cur_re[k], cur_im[k] = (
                (cur_re[k] * z_re[k] - cur_im[k] * z_im[k]) % p,
                (cur_re[k] * z_im[k] + cur_im[k] * z_re[k]) % p,
            )
    return out_re, out_im
