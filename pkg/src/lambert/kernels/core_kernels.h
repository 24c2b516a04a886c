#ifndef LAMBERT_CORE_KERNELS_H
#define LAMBERT_CORE_KERNELS_H

#include <stdint.h>

/* All arrays are contiguous row-major. Parallel loops use static scheduling
 * with disjoint output ownership so results are bitwise reproducible for a
 * fixed thread count. */

#define LAMBERT_DECL(T, suf)                                                   \
  void attn_fwd_##suf(const T *q, const T *k, const T *v, const T *keymask,   \
                      T scale, int B, int H, int S, int dh, T *ctx, T *probs, \
                      int nthreads);                                           \
  void attn_bwd_##suf(const T *q, const T *k, const T *v, const T *keymask,   \
                      T scale, int B, int H, int S, int dh, const T *dctx,    \
                      T *dq, T *dk, T *dv, int nthreads);                      \
  void layernorm_fwd_##suf(const T *x, const T *gamma, const T *beta, T eps,  \
                           int64_t R, int d, T *y, T *mean, T *rstd,          \
                           int nthreads);                                      \
  void layernorm_bwd_##suf(const T *dy, const T *x, const T *gamma,           \
                           const T *mean, const T *rstd, int64_t R, int d,    \
                           T *dx, T *dgamma, T *dbeta, int nthreads);          \
  void gelu_fwd_##suf(const T *x, int64_t n, T *y, int nthreads);              \
  void gelu_bwd_##suf(const T *x, const T *dy, int64_t n, T *dx,              \
                      int nthreads);                                           \
  void softmax_fwd_##suf(const T *x, const T *mask, int64_t R, int S, T *y,   \
                         int nthreads);                                        \
  void softmax_bwd_##suf(const T *y, const T *dy, int64_t R, int S, T *dx,    \
                         int nthreads);                                        \
  void embedding_fwd_##suf(const T *table, const int32_t *ids, int64_t R,     \
                           int d, T *out, int nthreads);                       \
  void embedding_bwd_##suf(const int32_t *ids, const T *dy, int64_t R, int d, \
                           T *dtable);                                         \
  void ce_fwd_##suf(const T *logits, const int32_t *targets, int64_t R,       \
                    int C, T *loss, T *probs, int nthreads);                   \
  void ce_bwd_##suf(const T *probs, const int32_t *targets, const T *dloss,   \
                    int64_t R, int C, T *dlogits, int nthreads);               \
  void adam_step_##suf(T *p, const T *g, T *m, T *v, int64_t n, T lr, T b1,   \
                       T b2, T eps, T bc1, T bc2);                             \
  void bmm_##suf(const T *a, const T *b, int64_t nb, int m, int kk, int p,    \
                 T *out, int nthreads);

LAMBERT_DECL(float, f32)
LAMBERT_DECL(double, f64)

#undef LAMBERT_DECL

#endif
