"""Compiled-kernel backend: forwards to the Cython extension.

Thread count is module state (see kernels.set_num_threads). Arrays must be
C-contiguous float32/float64; ids/targets int32.
"""

import numpy as np

from . import _cy_core

NAME = "cython"

_NTHREADS = 1


def set_num_threads(n):
    global _NTHREADS
    _NTHREADS = max(1, int(n))


def get_num_threads():
    return _NTHREADS


def _c(a):
    return np.ascontiguousarray(a)


def attn_fwd(q, k, v, keymask, scale, capture):
    return _cy_core.attn_fwd(_c(q), _c(k), _c(v), _c(keymask), float(scale),
                             bool(capture), _NTHREADS)


def attn_bwd(q, k, v, keymask, scale, dctx):
    return _cy_core.attn_bwd(_c(q), _c(k), _c(v), _c(keymask), float(scale),
                             _c(dctx), _NTHREADS)


def layernorm_fwd(x, gamma, beta, eps):
    return _cy_core.layernorm_fwd(_c(x), _c(gamma), _c(beta), float(eps), _NTHREADS)


def layernorm_bwd(dy, x, gamma, mean, rstd):
    return _cy_core.layernorm_bwd(_c(dy), _c(x), _c(gamma), _c(mean), _c(rstd), _NTHREADS)


def gelu_fwd(x):
    flat = _c(x).reshape(-1)
    return _cy_core.gelu_fwd(flat, _NTHREADS).reshape(x.shape)


def gelu_bwd(x, dy):
    flat = _c(x).reshape(-1)
    dflat = _c(dy).reshape(-1)
    return _cy_core.gelu_bwd(flat, dflat, _NTHREADS).reshape(x.shape)


def softmax_fwd(x, mask):
    return _cy_core.softmax_fwd(_c(x), None if mask is None else _c(mask), _NTHREADS)


def softmax_bwd(y, dy):
    return _cy_core.softmax_bwd(_c(y), _c(dy), _NTHREADS)


def embedding_fwd(table, ids):
    return _cy_core.embedding_fwd(_c(table), _c(ids), _NTHREADS)


def embedding_bwd(ids, dy, vocab):
    return _cy_core.embedding_bwd(_c(ids), _c(dy), int(vocab))


def ce_fwd(logits, targets):
    return _cy_core.ce_fwd(_c(logits), _c(targets), _NTHREADS)


def ce_bwd(probs, targets, dloss):
    return _cy_core.ce_bwd(_c(probs), _c(targets), _c(dloss), _NTHREADS)


def adam_step(p, g, m, v, lr, b1, b2, eps, bc1, bc2):
    _cy_core.adam_step(p.reshape(-1), _c(g).reshape(-1), m.reshape(-1), v.reshape(-1),
                       float(lr), float(b1), float(b2), float(eps), float(bc1), float(bc2))


def bmm(a, b):
    return _cy_core.bmm(_c(a), _c(b), _NTHREADS)
