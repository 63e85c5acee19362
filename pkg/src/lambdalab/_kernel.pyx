# cython: language_level=3, boundscheck=False
"""Compiled reduction kernel.

Mirror of _kernel_py: normal-order beta reduction with an exact
contraction budget, then exhaustive eta-contraction when requested.
Operates on cdef node objects converted from/to the shared de Bruijn
tuple encoding at the boundary.  Recursion depth is bounded explicitly
because cdef recursion bypasses the interpreter's stack check.
"""

KERNEL_NAME = "cython"

STATUS_NF = 0
STATUS_FUEL = 1

cdef int T_V = 0
cdef int T_F = 1
cdef int T_A = 2
cdef int T_L = 3

cdef int MAX_DEPTH = 50000


cdef class Node:
    cdef int tag
    cdef int k
    cdef object name
    cdef Node f
    cdef Node a
    cdef Node b
    cdef object hint


cdef inline Node mk_var(int k):
    cdef Node n = Node.__new__(Node)
    n.tag = T_V
    n.k = k
    return n


cdef inline Node mk_free(object name):
    cdef Node n = Node.__new__(Node)
    n.tag = T_F
    n.name = name
    return n


cdef inline Node mk_app(Node f, Node a):
    cdef Node n = Node.__new__(Node)
    n.tag = T_A
    n.f = f
    n.a = a
    return n


cdef inline Node mk_abs(Node b, object hint):
    cdef Node n = Node.__new__(Node)
    n.tag = T_L
    n.b = b
    n.hint = hint
    return n


class _OutOfFuel(Exception):
    pass


class _TooDeep(Exception):
    pass


cdef Node _decode(object t, int d):
    cdef int tag
    if d > MAX_DEPTH:
        raise _TooDeep()
    tag = t[0]
    if tag == T_V:
        return mk_var(t[1])
    if tag == T_F:
        return mk_free(t[1])
    if tag == T_A:
        return mk_app(_decode(t[1], d + 1), _decode(t[2], d + 1))
    return mk_abs(_decode(t[1], d + 1), t[2])


cdef object _encode(Node t, int d):
    if d > MAX_DEPTH:
        raise _TooDeep()
    if t.tag == T_V:
        return (0, t.k)
    if t.tag == T_F:
        return (1, t.name)
    if t.tag == T_A:
        return (2, _encode(t.f, d + 1), _encode(t.a, d + 1))
    return (3, _encode(t.b, d + 1), t.hint)


cdef Node _shift(Node t, int d, int cutoff, int depth):
    if depth > MAX_DEPTH:
        raise _TooDeep()
    if t.tag == T_V:
        if t.k >= cutoff:
            return mk_var(t.k + d)
        return t
    if t.tag == T_F:
        return t
    if t.tag == T_A:
        return mk_app(_shift(t.f, d, cutoff, depth + 1),
                      _shift(t.a, d, cutoff, depth + 1))
    return mk_abs(_shift(t.b, d, cutoff + 1, depth + 1), t.hint)


cdef Node _subst_top(Node t, Node s, int depth, int rec):
    if rec > MAX_DEPTH:
        raise _TooDeep()
    if t.tag == T_V:
        if t.k == depth:
            if depth:
                return _shift(s, depth, 0, 0)
            return s
        if t.k > depth:
            return mk_var(t.k - 1)
        return t
    if t.tag == T_F:
        return t
    if t.tag == T_A:
        return mk_app(_subst_top(t.f, s, depth, rec + 1),
                      _subst_top(t.a, s, depth, rec + 1))
    return mk_abs(_subst_top(t.b, s, depth + 1, rec + 1), t.hint)


cdef class _Fuel:
    cdef long long left


cdef Node _whnf(Node t, _Fuel st, int rec):
    cdef Node f
    if rec > MAX_DEPTH:
        raise _TooDeep()
    while True:
        if t.tag != T_A:
            return t
        f = _whnf(t.f, st, rec + 1)
        if f.tag == T_L:
            if st.left == 0:
                raise _OutOfFuel()
            st.left -= 1
            t = _subst_top(f.b, t.a, 0, 0)
        else:
            if f is t.f:
                return t
            return mk_app(f, t.a)


cdef Node _nf(Node t, _Fuel st, int rec):
    if rec > MAX_DEPTH:
        raise _TooDeep()
    t = _whnf(t, st, rec)
    if t.tag == T_L:
        return mk_abs(_nf(t.b, st, rec + 1), t.hint)
    if t.tag == T_A:
        return mk_app(_nf_spine(t.f, st, rec + 1), _nf(t.a, st, rec + 1))
    return t


cdef Node _nf_spine(Node t, _Fuel st, int rec):
    if rec > MAX_DEPTH:
        raise _TooDeep()
    if t.tag == T_A:
        return mk_app(_nf_spine(t.f, st, rec + 1), _nf(t.a, st, rec + 1))
    return t


cdef bint _uses_idx0(Node t, int depth, int rec) except -1:
    if rec > MAX_DEPTH:
        raise _TooDeep()
    if t.tag == T_V:
        return t.k == depth
    if t.tag == T_F:
        return False
    if t.tag == T_A:
        return _uses_idx0(t.f, depth, rec + 1) or _uses_idx0(t.a, depth, rec + 1)
    return _uses_idx0(t.b, depth + 1, rec + 1)


cdef Node _eta(Node t, _Fuel st, int rec):
    cdef Node body
    if rec > MAX_DEPTH:
        raise _TooDeep()
    if t.tag == T_A:
        return mk_app(_eta(t.f, st, rec + 1), _eta(t.a, st, rec + 1))
    if t.tag == T_L:
        body = _eta(t.b, st, rec + 1)
        if body.tag == T_A and body.a.tag == T_V and body.a.k == 0 and not _uses_idx0(body.f, 0, 0):
            if st.left == 0:
                raise _OutOfFuel()
            st.left -= 1
            return _shift(body.f, -1, 0, 0)
        if body is t.b:
            return t
        return mk_abs(body, t.hint)
    return t


def nf_db(t, fuel, eta):
    """Normalize; returns (term-or-None, contractions-used, status)."""
    cdef _Fuel st = _Fuel.__new__(_Fuel)
    st.left = fuel
    cdef Node out
    try:
        out = _nf(_decode(t, 0), st, 0)
        if eta:
            out = _eta(out, st, 0)
        return _encode(out, 0), fuel - st.left, STATUS_NF
    except _OutOfFuel:
        return None, fuel, STATUS_FUEL
    except _TooDeep:
        # The term outgrew the kernel's traversal depth; result unknown.
        return None, fuel - st.left, STATUS_FUEL
