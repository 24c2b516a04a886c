"""Pure-numpy reference implementations of the hot kernels.

Same API as the compiled backend; used as the import-time fallback and as the
slow side of the kernel benchmark. Shapes follow the compiled kernels: masks
are 0/1 float arrays of the same dtype as the activations, ids are int32.
"""

import numpy as np

NAME = "numpy"

_NEG = -1e30
_GELU_C0 = 0.7978845608028654
_GELU_C1 = 0.044715


def attn_fwd(q, k, v, keymask, scale, capture):
    s = np.matmul(q, k.transpose(0, 1, 3, 2)) * scale
    s = np.where(keymask[:, None, None, :] == 0, _NEG, s)
    e = np.exp(s - s.max(axis=-1, keepdims=True))
    p = e / e.sum(axis=-1, keepdims=True)
    p = p * keymask[:, None, None, :]
    ctx = np.matmul(p, v)
    return ctx, (p if capture else None)


def attn_bwd(q, k, v, keymask, scale, dctx):
    _, p = attn_fwd(q, k, v, keymask, scale, True)
    dv = np.matmul(p.transpose(0, 1, 3, 2), dctx)
    dp = np.matmul(dctx, v.transpose(0, 1, 3, 2))
    rd = (dp * p).sum(axis=-1, keepdims=True)
    ds = (dp - rd) * p * scale
    dq = np.matmul(ds, k)
    dk = np.matmul(ds.transpose(0, 1, 3, 2), q)
    return dq, dk, dv


def layernorm_fwd(x, gamma, beta, eps):
    mean = x.mean(axis=1)
    var = x.var(axis=1)
    rstd = 1.0 / np.sqrt(var + eps)
    y = (x - mean[:, None]) * rstd[:, None] * gamma + beta
    return y.astype(x.dtype, copy=False), mean, rstd


def layernorm_bwd(dy, x, gamma, mean, rstd):
    d = x.shape[1]
    xhat = (x - mean[:, None]) * rstd[:, None]
    g = dy * gamma
    c1 = g.mean(axis=1, keepdims=True)
    c2 = (g * xhat).mean(axis=1, keepdims=True)
    dx = (g - c1 - xhat * c2) * rstd[:, None]
    dgamma = (dy * xhat).sum(axis=0)
    dbeta = dy.sum(axis=0)
    return dx.astype(x.dtype, copy=False), dgamma, dbeta


def gelu_fwd(x):
    u = _GELU_C0 * (x + _GELU_C1 * x**3)
    return (0.5 * x * (1.0 + np.tanh(u))).astype(x.dtype, copy=False)


def gelu_bwd(x, dy):
    x2 = x * x
    u = _GELU_C0 * (x + _GELU_C1 * x * x2)
    t = np.tanh(u)
    du = _GELU_C0 * (1.0 + 3.0 * _GELU_C1 * x2)
    g = 0.5 * (1.0 + t) + 0.5 * x * (1.0 - t * t) * du
    return (dy * g).astype(x.dtype, copy=False)


def softmax_fwd(x, mask):
    if mask is not None:
        x = np.where(mask == 0, _NEG, x)
    e = np.exp(x - x.max(axis=-1, keepdims=True))
    y = e / e.sum(axis=-1, keepdims=True)
    if mask is not None:
        y = y * mask
    return y.astype(x.dtype, copy=False)


def softmax_bwd(y, dy):
    rd = (y * dy).sum(axis=-1, keepdims=True)
    return (y * (dy - rd)).astype(y.dtype, copy=False)


def embedding_fwd(table, ids):
    return table[ids]


def embedding_bwd(ids, dy, vocab):
    dtable = np.zeros((vocab, dy.shape[1]), dtype=dy.dtype)
    np.add.at(dtable, ids, dy)
    return dtable


def ce_fwd(logits, targets):
    mx = logits.max(axis=1, keepdims=True)
    e = np.exp(logits - mx)
    ssum = e.sum(axis=1, keepdims=True)
    probs = e / ssum
    rows = np.arange(logits.shape[0])
    loss = np.log(ssum[:, 0]) - (logits[rows, targets] - mx[:, 0])
    return loss.astype(logits.dtype, copy=False), probs.astype(logits.dtype, copy=False)


def ce_bwd(probs, targets, dloss):
    dlogits = probs * dloss[:, None]
    rows = np.arange(probs.shape[0])
    dlogits[rows, targets] -= dloss
    return dlogits


def adam_step(p, g, m, v, lr, b1, b2, eps, bc1, bc2):
    m *= b1
    m += (1.0 - b1) * g
    v *= b2
    v += (1.0 - b2) * g * g
    p -= lr * (m / bc1) / (np.sqrt(v / bc2) + eps)


def bmm(a, b):
    return np.matmul(a, b)
