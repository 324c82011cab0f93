"""Pure-Python fallback for the convolution kernel.

Kronecker substitution: both operands are packed into Python integers with
fixed-width slots laid out like the output array, multiplied once, and
unpacked through numpy.  Results match the compiled kernel bit for bit.
"""
import numpy as np


def _slot_dtype(bound):
    if bound < 2**32:
        return np.dtype("<u4")
    if bound < 2**64:
        return np.dtype("<u8")
    return None


def _pack(rows, off, nslots, width, dtype):
    e = rows.shape[1]
    buf = np.zeros((nslots, 2 * e - 1), dtype=dtype)
    buf[off, :e] = rows
    return int.from_bytes(buf.tobytes(), "little")


def conv_reduce(a, off_a, b, off_b, nout, red, q):
    e = a.shape[1]
    terms = min(a.shape[0], b.shape[0]) * e
    dtype = _slot_dtype(terms * (q - 1) ** 2 + 1)
    if dtype is None:
        return _conv_slow(a, off_a, b, off_b, nout, red, q)
    width = dtype.itemsize
    prod = _pack(a, off_a, nout, width, dtype) * _pack(b, off_b, nout, width, dtype)
    nbytes = nout * (2 * e - 1) * width
    acc = np.frombuffer(prod.to_bytes(nbytes, "little"), dtype=dtype)
    acc = (acc % q).astype(np.int64).reshape(nout, 2 * e - 1)
    out = acc[:, :e] + acc[:, e:] @ red
    return out % q


def _conv_slow(a, off_a, b, off_b, nout, red, q):
    # object arithmetic, only reached for moduli too wide for 64-bit slots
    e = a.shape[1]
    acc = np.zeros((nout, 2 * e - 1), dtype=object)
    for i in range(a.shape[0]):
        ai = [int(v) for v in a[i]]
        if not any(ai):
            continue
        for j in range(b.shape[0]):
            bj = [int(v) for v in b[j]]
            if not any(bj):
                continue
            row = acc[int(off_a[i]) + int(off_b[j])]
            for s, x in enumerate(ai):
                if x:
                    for t, y in enumerate(bj):
                        row[s + t] += x * y
    acc %= q
    out = acc[:, :e] + acc[:, e:].dot(red.astype(object))
    return (out % q).astype(np.int64)
