# cython: boundscheck=False, wraparound=False, language_level=3
"""Marshalling layer over the C kernels. All math lives in core_kernels.c."""

import numpy as np

from libc.stdint cimport int32_t, int64_t

cdef extern from "core_kernels.h":
    void attn_fwd_f32(const float*, const float*, const float*, const float*, float, int, int, int, int, float*, float*, int) nogil
    void attn_fwd_f64(const double*, const double*, const double*, const double*, double, int, int, int, int, double*, double*, int) nogil
    void attn_bwd_f32(const float*, const float*, const float*, const float*, float, int, int, int, int, const float*, float*, float*, float*, int) nogil
    void attn_bwd_f64(const double*, const double*, const double*, const double*, double, int, int, int, int, const double*, double*, double*, double*, int) nogil
    void layernorm_fwd_f32(const float*, const float*, const float*, float, int64_t, int, float*, float*, float*, int) nogil
    void layernorm_fwd_f64(const double*, const double*, const double*, double, int64_t, int, double*, double*, double*, int) nogil
    void layernorm_bwd_f32(const float*, const float*, const float*, const float*, const float*, int64_t, int, float*, float*, float*, int) nogil
    void layernorm_bwd_f64(const double*, const double*, const double*, const double*, const double*, int64_t, int, double*, double*, double*, int) nogil
    void gelu_fwd_f32(const float*, int64_t, float*, int) nogil
    void gelu_fwd_f64(const double*, int64_t, double*, int) nogil
    void gelu_bwd_f32(const float*, const float*, int64_t, float*, int) nogil
    void gelu_bwd_f64(const double*, const double*, int64_t, double*, int) nogil
    void softmax_fwd_f32(const float*, const float*, int64_t, int, float*, int) nogil
    void softmax_fwd_f64(const double*, const double*, int64_t, int, double*, int) nogil
    void softmax_bwd_f32(const float*, const float*, int64_t, int, float*, int) nogil
    void softmax_bwd_f64(const double*, const double*, int64_t, int, double*, int) nogil
    void embedding_fwd_f32(const float*, const int32_t*, int64_t, int, float*, int) nogil
    void embedding_fwd_f64(const double*, const int32_t*, int64_t, int, double*, int) nogil
    void embedding_bwd_f32(const int32_t*, const float*, int64_t, int, float*) nogil
    void embedding_bwd_f64(const int32_t*, const double*, int64_t, int, double*) nogil
    void ce_fwd_f32(const float*, const int32_t*, int64_t, int, float*, float*, int) nogil
    void ce_fwd_f64(const double*, const int32_t*, int64_t, int, double*, double*, int) nogil
    void ce_bwd_f32(const float*, const int32_t*, const float*, int64_t, int, float*, int) nogil
    void ce_bwd_f64(const double*, const int32_t*, const double*, int64_t, int, double*, int) nogil
    void adam_step_f32(float*, const float*, float*, float*, int64_t, float, float, float, float, float, float) nogil
    void adam_step_f64(double*, const double*, double*, double*, int64_t, double, double, double, double, double, double) nogil
    void bmm_f32(const float*, const float*, int64_t, int, int, int, float*, int) nogil
    void bmm_f64(const double*, const double*, int64_t, int, int, int, double*, int) nogil

ctypedef fused F:
    float
    double


cdef inline object _dtype_of(F* dummy):
    return np.float32 if F is float else np.float64


def attn_fwd(F[:, :, :, ::1] q, F[:, :, :, ::1] k, F[:, :, :, ::1] v,
             F[:, ::1] keymask, double scale, bint capture, int nthreads):
    cdef int B = q.shape[0], H = q.shape[1], S = q.shape[2], dh = q.shape[3]
    dt = np.float32 if F is float else np.float64
    ctx = np.empty((B, H, S, dh), dtype=dt)
    probs = np.empty((B, H, S, S), dtype=dt) if capture else None
    cdef F[:, :, :, ::1] ctxv = ctx
    cdef F[:, :, :, ::1] probsv
    cdef F* pp = NULL
    if capture:
        probsv = probs
        pp = &probsv[0, 0, 0, 0]
    if F is float:
        attn_fwd_f32(&q[0,0,0,0], &k[0,0,0,0], &v[0,0,0,0], &keymask[0,0],
                     <float>scale, B, H, S, dh, <float*>&ctxv[0,0,0,0], <float*>pp, nthreads)
    else:
        attn_fwd_f64(&q[0,0,0,0], &k[0,0,0,0], &v[0,0,0,0], &keymask[0,0],
                     scale, B, H, S, dh, <double*>&ctxv[0,0,0,0], <double*>pp, nthreads)
    return ctx, probs


def attn_bwd(F[:, :, :, ::1] q, F[:, :, :, ::1] k, F[:, :, :, ::1] v,
             F[:, ::1] keymask, double scale, F[:, :, :, ::1] dctx, int nthreads):
    cdef int B = q.shape[0], H = q.shape[1], S = q.shape[2], dh = q.shape[3]
    dt = np.float32 if F is float else np.float64
    dq = np.empty((B, H, S, dh), dtype=dt)
    dk = np.empty((B, H, S, dh), dtype=dt)
    dv = np.empty((B, H, S, dh), dtype=dt)
    cdef F[:, :, :, ::1] dqv = dq, dkv = dk, dvv = dv
    if F is float:
        attn_bwd_f32(&q[0,0,0,0], &k[0,0,0,0], &v[0,0,0,0], &keymask[0,0], <float>scale,
                     B, H, S, dh, &dctx[0,0,0,0],
                     <float*>&dqv[0,0,0,0], <float*>&dkv[0,0,0,0], <float*>&dvv[0,0,0,0], nthreads)
    else:
        attn_bwd_f64(&q[0,0,0,0], &k[0,0,0,0], &v[0,0,0,0], &keymask[0,0], scale,
                     B, H, S, dh, &dctx[0,0,0,0],
                     <double*>&dqv[0,0,0,0], <double*>&dkv[0,0,0,0], <double*>&dvv[0,0,0,0], nthreads)
    return dq, dk, dv


def layernorm_fwd(F[:, ::1] x, F[::1] gamma, F[::1] beta, double eps, int nthreads):
    cdef int64_t R = x.shape[0]
    cdef int d = x.shape[1]
    dt = np.float32 if F is float else np.float64
    y = np.empty((R, d), dtype=dt)
    mean = np.empty(R, dtype=dt)
    rstd = np.empty(R, dtype=dt)
    cdef F[:, ::1] yv = y
    cdef F[::1] meanv = mean, rstdv = rstd
    if F is float:
        layernorm_fwd_f32(&x[0,0], &gamma[0], &beta[0], <float>eps, R, d,
                          <float*>&yv[0,0], <float*>&meanv[0], <float*>&rstdv[0], nthreads)
    else:
        layernorm_fwd_f64(&x[0,0], &gamma[0], &beta[0], eps, R, d,
                          <double*>&yv[0,0], <double*>&meanv[0], <double*>&rstdv[0], nthreads)
    return y, mean, rstd


def layernorm_bwd(F[:, ::1] dy, F[:, ::1] x, F[::1] gamma, F[::1] mean, F[::1] rstd, int nthreads):
    cdef int64_t R = x.shape[0]
    cdef int d = x.shape[1]
    dt = np.float32 if F is float else np.float64
    dx = np.empty((R, d), dtype=dt)
    dgamma = np.empty(d, dtype=dt)
    dbeta = np.empty(d, dtype=dt)
    cdef F[:, ::1] dxv = dx
    cdef F[::1] dgv = dgamma, dbv = dbeta
    if F is float:
        layernorm_bwd_f32(&dy[0,0], &x[0,0], &gamma[0], &mean[0], &rstd[0], R, d,
                          <float*>&dxv[0,0], <float*>&dgv[0], <float*>&dbv[0], nthreads)
    else:
        layernorm_bwd_f64(&dy[0,0], &x[0,0], &gamma[0], &mean[0], &rstd[0], R, d,
                          <double*>&dxv[0,0], <double*>&dgv[0], <double*>&dbv[0], nthreads)
    return dx, dgamma, dbeta


def gelu_fwd(F[::1] x, int nthreads):
    cdef int64_t n = x.shape[0]
    dt = np.float32 if F is float else np.float64
    y = np.empty(n, dtype=dt)
    cdef F[::1] yv = y
    if F is float:
        gelu_fwd_f32(&x[0], n, <float*>&yv[0], nthreads)
    else:
        gelu_fwd_f64(&x[0], n, <double*>&yv[0], nthreads)
    return y


def gelu_bwd(F[::1] x, F[::1] dy, int nthreads):
    cdef int64_t n = x.shape[0]
    dt = np.float32 if F is float else np.float64
    dx = np.empty(n, dtype=dt)
    cdef F[::1] dxv = dx
    if F is float:
        gelu_bwd_f32(&x[0], &dy[0], n, <float*>&dxv[0], nthreads)
    else:
        gelu_bwd_f64(&x[0], &dy[0], n, <double*>&dxv[0], nthreads)
    return dx


def softmax_fwd(F[:, ::1] x, mask, int nthreads):
    cdef int64_t R = x.shape[0]
    cdef int S = x.shape[1]
    dt = np.float32 if F is float else np.float64
    y = np.empty((R, S), dtype=dt)
    cdef F[:, ::1] yv = y
    cdef F[:, ::1] maskv
    cdef F* mp = NULL
    if mask is not None:
        maskv = mask
        mp = &maskv[0, 0]
    if F is float:
        softmax_fwd_f32(&x[0,0], <float*>mp, R, S, <float*>&yv[0,0], nthreads)
    else:
        softmax_fwd_f64(&x[0,0], <double*>mp, R, S, <double*>&yv[0,0], nthreads)
    return y


def softmax_bwd(F[:, ::1] y, F[:, ::1] dy, int nthreads):
    cdef int64_t R = y.shape[0]
    cdef int S = y.shape[1]
    dt = np.float32 if F is float else np.float64
    dx = np.empty((R, S), dtype=dt)
    cdef F[:, ::1] dxv = dx
    if F is float:
        softmax_bwd_f32(&y[0,0], &dy[0,0], R, S, <float*>&dxv[0,0], nthreads)
    else:
        softmax_bwd_f64(&y[0,0], &dy[0,0], R, S, <double*>&dxv[0,0], nthreads)
    return dx


def embedding_fwd(F[:, ::1] table, int32_t[::1] ids, int nthreads):
    cdef int64_t R = ids.shape[0]
    cdef int d = table.shape[1]
    dt = np.float32 if F is float else np.float64
    out = np.empty((R, d), dtype=dt)
    cdef F[:, ::1] outv = out
    if F is float:
        embedding_fwd_f32(&table[0,0], &ids[0], R, d, <float*>&outv[0,0], nthreads)
    else:
        embedding_fwd_f64(&table[0,0], &ids[0], R, d, <double*>&outv[0,0], nthreads)
    return out


def embedding_bwd(int32_t[::1] ids, F[:, ::1] dy, int vocab):
    cdef int64_t R = ids.shape[0]
    cdef int d = dy.shape[1]
    dt = np.float32 if F is float else np.float64
    dtable = np.zeros((vocab, d), dtype=dt)
    cdef F[:, ::1] dtv = dtable
    if F is float:
        embedding_bwd_f32(&ids[0], &dy[0,0], R, d, <float*>&dtv[0,0])
    else:
        embedding_bwd_f64(&ids[0], &dy[0,0], R, d, <double*>&dtv[0,0])
    return dtable


def ce_fwd(F[:, ::1] logits, int32_t[::1] targets, int nthreads):
    cdef int64_t R = logits.shape[0]
    cdef int C = logits.shape[1]
    dt = np.float32 if F is float else np.float64
    loss = np.empty(R, dtype=dt)
    probs = np.empty((R, C), dtype=dt)
    cdef F[::1] lossv = loss
    cdef F[:, ::1] probsv = probs
    if F is float:
        ce_fwd_f32(&logits[0,0], &targets[0], R, C, <float*>&lossv[0], <float*>&probsv[0,0], nthreads)
    else:
        ce_fwd_f64(&logits[0,0], &targets[0], R, C, <double*>&lossv[0], <double*>&probsv[0,0], nthreads)
    return loss, probs


def ce_bwd(F[:, ::1] probs, int32_t[::1] targets, F[::1] dloss, int nthreads):
    cdef int64_t R = probs.shape[0]
    cdef int C = probs.shape[1]
    dt = np.float32 if F is float else np.float64
    dlogits = np.empty((R, C), dtype=dt)
    cdef F[:, ::1] dlv = dlogits
    if F is float:
        ce_bwd_f32(&probs[0,0], &targets[0], &dloss[0], R, C, <float*>&dlv[0,0], nthreads)
    else:
        ce_bwd_f64(&probs[0,0], &targets[0], &dloss[0], R, C, <double*>&dlv[0,0], nthreads)
    return dlogits


def adam_step(F[::1] p, F[::1] g, F[::1] m, F[::1] v,
              double lr, double b1, double b2, double eps, double bc1, double bc2):
    cdef int64_t n = p.shape[0]
    if F is float:
        adam_step_f32(<float*>&p[0], &g[0], <float*>&m[0], <float*>&v[0], n,
                      <float>lr, <float>b1, <float>b2, <float>eps, <float>bc1, <float>bc2)
    else:
        adam_step_f64(<double*>&p[0], &g[0], <double*>&m[0], <double*>&v[0], n,
                      lr, b1, b2, eps, bc1, bc2)


def bmm(F[:, :, ::1] a, F[:, :, ::1] b, int nthreads):
    cdef int64_t nb = a.shape[0]
    cdef int m = a.shape[1], kk = a.shape[2], p = b.shape[2]
    dt = np.float32 if F is float else np.float64
    out = np.empty((nb, m, p), dtype=dt)
    cdef F[:, :, ::1] outv = out
    if F is float:
        bmm_f32(&a[0,0,0], &b[0,0,0], nb, m, kk, p, <float*>&outv[0,0,0], nthreads)
    else:
        bmm_f64(&a[0,0,0], &b[0,0,0], nb, m, kk, p, <double*>&outv[0,0,0], nthreads)
    return out
