"""Pure-Python reduction kernel on de Bruijn tuples.

Same contract as the compiled kernel in _kernel.pyx: normal-order
(leftmost-outermost) beta reduction with an exact contraction budget,
optionally followed by exhaustive eta-contraction of the beta-normal
form.  On fuel exhaustion the partial term is not materialized; callers
get (None, fuel, STATUS_FUEL).

Term encoding: (0,k) bound var | (1,name) free var | (2,f,a) | (3,body,hint).
"""

from __future__ import annotations

import sys
from contextlib import contextmanager

KERNEL_NAME = "pure"

STATUS_NF = 0
STATUS_FUEL = 1

_V, _F, _A, _L = 0, 1, 2, 3


class _OutOfFuel(Exception):
    pass


@contextmanager
def _deep(limit=120_000):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _shift(t, d, cutoff):
    tag = t[0]
    if tag == _V:
        k = t[1]
        return (_V, k + d) if k >= cutoff else t
    if tag == _F:
        return t
    if tag == _A:
        return (_A, _shift(t[1], d, cutoff), _shift(t[2], d, cutoff))
    return (_L, _shift(t[1], d, cutoff + 1), t[2])


def _subst_top(t, s, depth):
    # body[depth := s], decrementing indices above depth.
    tag = t[0]
    if tag == _V:
        k = t[1]
        if k == depth:
            return _shift(s, depth, 0) if depth else s
        return (_V, k - 1) if k > depth else t
    if tag == _F:
        return t
    if tag == _A:
        return (_A, _subst_top(t[1], s, depth), _subst_top(t[2], s, depth))
    return (_L, _subst_top(t[1], s, depth + 1), t[2])


def _whnf(t, st):
    while True:
        if t[0] != _A:
            return t
        f = _whnf(t[1], st)
        if f[0] == _L:
            if st[0] == 0:
                raise _OutOfFuel
            st[0] -= 1
            t = _subst_top(f[1], t[2], 0)
        else:
            return t if f is t[1] else (_A, f, t[2])


def _nf(t, st):
    t = _whnf(t, st)
    tag = t[0]
    if tag == _L:
        return (_L, _nf(t[1], st), t[2])
    if tag == _A:
        return (_A, _nf_spine(t[1], st), _nf(t[2], st))
    return t


def _nf_spine(t, st):
    # t is the function part of a neutral application: head is a variable,
    # only the arguments hanging off the spine still need normalizing.
    if t[0] == _A:
        return (_A, _nf_spine(t[1], st), _nf(t[2], st))
    return t


def _uses_idx0(t, depth):
    tag = t[0]
    if tag == _V:
        return t[1] == depth
    if tag == _F:
        return False
    if tag == _A:
        return _uses_idx0(t[1], depth) or _uses_idx0(t[2], depth)
    return _uses_idx0(t[1], depth + 1)


def _eta(t, st):
    tag = t[0]
    if tag == _A:
        return (_A, _eta(t[1], st), _eta(t[2], st))
    if tag == _L:
        body = _eta(t[1], st)
        if (
            body[0] == _A
            and body[2][0] == _V
            and body[2][1] == 0
            and not _uses_idx0(body[1], 0)
        ):
            if st[0] == 0:
                raise _OutOfFuel
            st[0] -= 1
            return _shift(body[1], -1, 0)
        return t if body is t[1] else (_L, body, t[2])
    return t


def nf_db(t, fuel, eta):
    """Normalize; returns (term-or-None, contractions-used, status)."""
    st = [fuel]
    try:
        with _deep():
            out = _nf(t, st)
            if eta:
                out = _eta(out, st)
    except _OutOfFuel:
        return None, fuel, STATUS_FUEL
    except RecursionError:
        # Treat blown traversal depth like an exhausted budget: the term
        # grew beyond what this kernel can walk, so the result is unknown.
        return None, fuel - st[0], STATUS_FUEL
    return out, fuel - st[0], STATUS_NF
