"""Backend selection for the multivariate convolution kernel.

The compiled extension is used when it imports; otherwise the Kronecker
fallback in ``_pykernels`` takes over.  Set ``KUMMER_MODELS_BACKEND=python``
to force the fallback.
"""
import os
from functools import lru_cache

import numpy as np

from . import _pykernels

BACKEND = "python"
_compiled = None
if os.environ.get("KUMMER_MODELS_BACKEND", "").lower() != "python":
    try:
        from . import _ckernels as _compiled
        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        _compiled = None


@lru_cache(maxsize=4096)
def _offsets(shape_in, shape_out):
    if not shape_in:
        return np.zeros(1, dtype=np.int64)
    idx = np.indices(shape_in).reshape(len(shape_in), -1)
    return np.ravel_multi_index(idx, shape_out).astype(np.int64)


def conv(a, b, red, q, backend=None):
    """Full convolution of two coefficient arrays over Z/q[x]/(E).

    ``a`` and ``b`` have shapes ``(*na, e)`` and ``(*nb, e)`` with the same
    number of axes; the result has shape ``(*(na+nb-1), e)``.
    """
    na, nb = a.shape[:-1], b.shape[:-1]
    e = a.shape[-1]
    out_shape = tuple(x + y - 1 for x, y in zip(na, nb))
    nout = int(np.prod(out_shape, dtype=np.int64)) if out_shape else 1
    ar = np.ascontiguousarray(a, dtype=np.int64).reshape(-1, e)
    br = np.ascontiguousarray(b, dtype=np.int64).reshape(-1, e)
    oa, ob = _offsets(na, out_shape), _offsets(nb, out_shape)
    which = backend or BACKEND
    bound = min(ar.shape[0], br.shape[0]) * e * (q - 1) ** 2 + (e - 1) * (q - 1) ** 2
    if which == "cython" and _compiled is not None and bound < 2**62:
        out = _compiled.conv_reduce(ar, oa, br, ob, nout, red, q)
    else:
        out = _pykernels.conv_reduce(ar, oa, br, ob, nout, red, q)
    return out.reshape(out_shape + (e,))
