"""Lambda-term syntax and the binding toolkit.

Terms are immutable trees over named variables.  Alpha-equality,
capture-avoiding substitution and the de Bruijn conversions used by the
reduction kernels all live here.  Helpers that walk terms of unbounded
depth are either iterative or wrapped in `deep_recursion`, so Church
numerals in the thousands do not hit the interpreter recursion limit.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class App:
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True)
class Abs:
    param: str
    body: "Term"


Term = Union[Var, App, Abs]


@contextmanager
def deep_recursion(limit=120_000):
    """Temporarily raise the recursion limit for deep-term traversals."""
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def size(t: Term) -> int:
    """Number of nodes (variables, applications and abstractions)."""
    n = 0
    stack = [t]
    while stack:
        node = stack.pop()
        n += 1
        if isinstance(node, App):
            stack.append(node.fun)
            stack.append(node.arg)
        elif isinstance(node, Abs):
            stack.append(node.body)
    return n


def height(t: Term) -> int:
    out = 0
    stack = [(t, 1)]
    while stack:
        node, h = stack.pop()
        if h > out:
            out = h
        if isinstance(node, App):
            stack.append((node.fun, h + 1))
            stack.append((node.arg, h + 1))
        elif isinstance(node, Abs):
            stack.append((node.body, h + 1))
    return out


def subterms(t: Term) -> Iterator[Term]:
    """Preorder iterator over all subterms, including t itself."""
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, App):
            stack.append(node.arg)
            stack.append(node.fun)
        elif isinstance(node, Abs):
            stack.append(node.body)


def free_vars(t: Term) -> frozenset:
    out = set()
    stack = [(t, frozenset())]
    while stack:
        node, bound = stack.pop()
        if isinstance(node, Var):
            if node.name not in bound:
                out.add(node.name)
        elif isinstance(node, App):
            stack.append((node.fun, bound))
            stack.append((node.arg, bound))
        else:
            stack.append((node.body, bound | {node.param}))
    return frozenset(out)


def all_names(t: Term) -> frozenset:
    """Every variable name occurring in t, free or bound."""
    out = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            out.add(node.name)
        elif isinstance(node, App):
            stack.append(node.fun)
            stack.append(node.arg)
        else:
            out.add(node.param)
            stack.append(node.body)
    return frozenset(out)


def is_closed(t: Term) -> bool:
    return not free_vars(t)


def fresh_name(base: str, avoid) -> str:
    """Prime `base` until it avoids the given names ("x" -> "x'")."""
    name = base
    while name in avoid:
        name = name + "'"
    return name


def alpha_eq(a: Term, b: Term) -> bool:
    """Alpha-convertibility, by parallel traversal with binder maps."""
    stack = [(a, b, {}, {}, 0)]
    while stack:
        ta, tb, enva, envb, depth = stack.pop()
        if isinstance(ta, Var):
            if not isinstance(tb, Var):
                return False
            da = enva.get(ta.name)
            db = envb.get(tb.name)
            if da is None and db is None:
                if ta.name != tb.name:
                    return False
            elif da != db:
                return False
        elif isinstance(ta, App):
            if not isinstance(tb, App):
                return False
            stack.append((ta.fun, tb.fun, enva, envb, depth))
            stack.append((ta.arg, tb.arg, enva, envb, depth))
        else:
            if not isinstance(tb, Abs):
                return False
            enva2 = dict(enva)
            enva2[ta.param] = depth
            envb2 = dict(envb)
            envb2[tb.param] = depth
            stack.append((ta.body, tb.body, enva2, envb2, depth + 1))
    return True


def alpha_key(t: Term):
    """Canonical hashable form: de Bruijn indices, free names verbatim.

    Two terms are alpha-equal iff their keys are equal, which makes the
    key usable for hashing alpha-classes in corpora and reduct searches.
    """
    # Postorder construction with an explicit stack; envs are shared dicts
    # extended functionally at each binder.
    out = []
    EXIT = object()
    stack = [(t, {}, 0)]
    while stack:
        item = stack.pop()
        if item[0] is EXIT:
            kind = item[1]
            if kind == "a":
                arg = out.pop()
                fun = out.pop()
                out.append(("a", fun, arg))
            else:
                body = out.pop()
                out.append(("l", body))
            continue
        node, env, depth = item
        if isinstance(node, Var):
            d = env.get(node.name)
            if d is None:
                out.append(("f", node.name))
            else:
                out.append(("v", depth - 1 - d))
        elif isinstance(node, App):
            stack.append((EXIT, "a"))
            stack.append((node.arg, env, depth))
            stack.append((node.fun, env, depth))
        else:
            stack.append((EXIT, "l"))
            env2 = dict(env)
            env2[node.param] = depth
            stack.append((node.body, env2, depth + 1))
    return out[0]


def substitute(body: Term, var: str, value: Term) -> Term:
    """Capture-avoiding substitution body[var := value].

    Bound variables that would capture a free variable of `value` are
    renamed by priming.
    """
    fv_value = free_vars(value)

    def go(t):
        if isinstance(t, Var):
            return value if t.name == var else t
        if isinstance(t, App):
            return App(go(t.fun), go(t.arg))
        if t.param == var:
            return t
        if t.param in fv_value and var in free_vars(t.body):
            fresh = fresh_name(t.param, free_vars(t.body) | fv_value | {var})
            renamed = substitute(t.body, t.param, Var(fresh))
            return Abs(fresh, go(renamed))
        return Abs(t.param, go(t.body))

    with deep_recursion():
        return go(body)


# --- de Bruijn conversion used by the reduction kernels ---------------------
#
# Kernel form is nested tuples:
#   (0, k)          bound variable, de Bruijn index k
#   (1, name)       free variable
#   (2, fun, arg)   application
#   (3, body, hint) abstraction; hint is the original binder name

DB_VAR, DB_FREE, DB_APP, DB_ABS = 0, 1, 2, 3


def to_db(t: Term):
    out = []
    EXIT = object()
    stack = [(t, {}, 0)]
    while stack:
        item = stack.pop()
        if item[0] is EXIT:
            if item[1] == "a":
                arg = out.pop()
                fun = out.pop()
                out.append((DB_APP, fun, arg))
            else:
                body = out.pop()
                out.append((DB_ABS, body, item[2]))
            continue
        node, env, depth = item
        if isinstance(node, Var):
            d = env.get(node.name)
            if d is None:
                out.append((DB_FREE, node.name))
            else:
                out.append((DB_VAR, depth - 1 - d))
        elif isinstance(node, App):
            stack.append((EXIT, "a"))
            stack.append((node.arg, env, depth))
            stack.append((node.fun, env, depth))
        else:
            stack.append((EXIT, "l", node.param))
            env2 = dict(env)
            env2[node.param] = depth
            stack.append((node.body, env2, depth + 1))
    return out[0]


def _db_free_names(t) -> set:
    out = set()
    stack = [t]
    while stack:
        node = stack.pop()
        tag = node[0]
        if tag == DB_FREE:
            out.add(node[1])
        elif tag == DB_APP:
            stack.append(node[1])
            stack.append(node[2])
        elif tag == DB_ABS:
            stack.append(node[1])
    return out


def from_db(t) -> Term:
    """Read back a kernel term with stable names.

    Binder hints are kept where possible and primed against enclosing
    binders and every free name, so distinct binders never print alike.
    """
    taken = _db_free_names(t)

    def go(node, env):
        tag = node[0]
        if tag == DB_VAR:
            return Var(env[-1 - node[1]])
        if tag == DB_FREE:
            return Var(node[1])
        if tag == DB_APP:
            return App(go(node[1], env), go(node[2], env))
        name = fresh_name(node[2] or "x", taken.union(env))
        return Abs(name, go(node[1], env + [name]))

    with deep_recursion():
        return go(t, [])
