"""Standard combinators, Church numerals, tuples and selectors."""

from __future__ import annotations

from .errors import LambdaLabError
from .terms import Abs, App, Term, Var, all_names, alpha_key, fresh_name


def _abs(params, body):
    for p in reversed(params):
        body = Abs(p, body)
    return body


def _app(*ts):
    out = ts[0]
    for t in ts[1:]:
        out = App(out, t)
    return out


x, y, z, f, a, b = Var("x"), Var("y"), Var("z"), Var("f"), Var("a"), Var("b")

I = Abs("x", x)
K = _abs(["x", "y"], x)
# K* is KI; the literal expands to its beta-normal form.
K_STAR = _abs(["x", "y"], y)
S = _abs(["x", "y", "z"], _app(x, z, App(y, z)))
C = _abs(["x", "y", "z"], _app(x, z, y))
B = _abs(["x", "y", "z"], App(x, App(y, z)))
Y = Abs("f", App(Abs("x", App(f, App(x, x))), Abs("x", App(f, App(x, x)))))
_THETA_HALF = _abs(["a", "b"], App(b, _app(a, a, b)))
THETA = App(_THETA_HALF, _THETA_HALF)
OMEGA_SMALL = Abs("x", App(x, x))
OMEGA_BIG = App(OMEGA_SMALL, OMEGA_SMALL)

COMBINATORS = {
    "I": I,
    "K": K,
    "K*": K_STAR,
    "S": S,
    "C": C,
    "B": B,
    "Y": Y,
    "Theta": THETA,
    "omega": OMEGA_SMALL,
    "Omega": OMEGA_BIG,
}

# Programmatic alias for the starred name.
_ALIASES = {"Kstar": "K*"}

del x, y, z, f, a, b


def combinator(name: str) -> Term:
    key = _ALIASES.get(name, name)
    if key not in COMBINATORS:
        raise LambdaLabError(f"unknown combinator: {name}")
    return COMBINATORS[key]


def church(n: int) -> Term:
    """Church numeral: n-fold application of f under two binders."""
    if n < 0:
        raise ValueError("Church numerals encode naturals only")
    body: Term = Var("x")
    for _ in range(n):
        body = App(Var("f"), body)
    return Abs("f", Abs("x", body))


def church_of(t: Term):
    """Recognize an alpha-instance of a Church numeral; None otherwise."""
    if not isinstance(t, Abs) or not isinstance(t.body, Abs):
        return None
    fn = t.param
    xn = t.body.param
    cur = t.body.body
    if fn == xn:
        # The inner binder shadows; only the zero shape is possible.
        return 0 if cur == Var(xn) else None
    n = 0
    while isinstance(cur, App) and cur.fun == Var(fn):
        n += 1
        cur = cur.arg
    if cur == Var(xn):
        return n
    return None


def tuple_term(ms) -> Term:
    """<M1 ... Mn> = \\z.z M1 ... Mn with z fresh for every component."""
    ms = list(ms)
    if not ms:
        raise ValueError("tuple of no components")
    avoid = set()
    for m in ms:
        avoid |= all_names(m)
    zname = fresh_name("z", avoid)
    body: Term = Var(zname)
    for m in ms:
        body = App(body, m)
    return Abs(zname, body)


def selector(n: int, k: int) -> Term:
    """U^n_k = \\x1 ... xn.xk."""
    if n < 1 or not 1 <= k <= n:
        raise IndexError(f"selector index out of range: n={n}, k={k}")
    return _abs([f"x{i}" for i in range(1, n + 1)], Var(f"x{k}"))


_FOLD_TABLE = None


def fold_label(t: Term):
    """Name of the combinator or numeral this term alpha-equals, if any.

    Combinators take precedence over numerals, so \\x y.y reads "K*"
    rather than "0".
    """
    global _FOLD_TABLE
    if _FOLD_TABLE is None:
        _FOLD_TABLE = {alpha_key(term): name for name, term in COMBINATORS.items()}
    label = _FOLD_TABLE.get(alpha_key(t))
    if label is not None:
        return label
    n = church_of(t)
    if n is not None:
        return str(n)
    return None
