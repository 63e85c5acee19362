"""Term corpora: exhaustive enumeration and seeded random generation.

Size is the number of nodes (variables, applications, abstractions).
Enumerated terms use canonical binder names x0, x1, ... by depth, so each
alpha-class appears exactly once; optional ambient free names make open
corpora.  Normal forms are generated structurally (abstractions over
neutral spines), and eta-long shapes can be filtered out on the fly.
"""

from __future__ import annotations

import random

from .reduce import BETA, FUEL_EXHAUSTED, NORMAL_FORM, contract, find_redex, is_beta_redex
from .terms import Abs, App, Term, Var, free_vars


class _Enumerator:
    """Memoized bottom-up enumeration of normal forms by size."""

    def __init__(self, free_names=(), eta_free=True):
        self.free_names = tuple(free_names)
        self.eta_free = eta_free
        self._nf_cache = {}
        self._neutral_cache = {}

    def _env(self, depth):
        return self.free_names + tuple(f"x{i}" for i in range(depth))

    def _is_eta_redex(self, t):
        return (
            isinstance(t, Abs)
            and isinstance(t.body, App)
            and t.body.arg == Var(t.param)
            and t.param not in free_vars(t.body.fun)
        )

    def normal_forms(self, n, depth):
        key = (n, depth)
        if key not in self._nf_cache:
            out = []
            if n >= 2:
                param = f"x{depth}"
                for body in self.normal_forms(n - 1, depth + 1):
                    t = Abs(param, body)
                    if self.eta_free and self._is_eta_redex(t):
                        continue
                    out.append(t)
            out.extend(self.neutrals(n, depth))
            self._nf_cache[key] = tuple(out)
        return self._nf_cache[key]

    def neutrals(self, n, depth):
        key = (n, depth)
        if key not in self._neutral_cache:
            out = []
            if n == 1:
                out.extend(Var(name) for name in self._env(depth))
            elif n >= 3:
                for i in range(1, n - 1):
                    for fun in self.neutrals(i, depth):
                        for arg in self.normal_forms(n - 1 - i, depth):
                            out.append(App(fun, arg))
            self._neutral_cache[key] = tuple(out)
        return self._neutral_cache[key]


def enumerate_normal_forms(max_size, free_names=(), eta_free=True):
    """All beta(-eta) normal forms of size <= max_size, one per alpha-class."""
    enum = _Enumerator(free_names, eta_free)
    for n in range(1, max_size + 1):
        yield from enum.normal_forms(n, 0)


def count_normal_forms(max_size, free_names=(), eta_free=True) -> int:
    return sum(1 for _ in enumerate_normal_forms(max_size, free_names, eta_free))


class RandomTerms:
    """Seeded generators for random terms and random normal forms."""

    def __init__(self, seed=0, free_names=("a", "b")):
        self.rng = random.Random(seed)
        self.free_names = tuple(free_names)

    def term(self, max_size: int) -> Term:
        """Arbitrary term (not necessarily normal) with size <= max_size."""

        def go(budget, env):
            choices = ["var"] if env else []
            if budget >= 2:
                choices.append("abs")
            if budget >= 3 and env:
                choices.append("app")
            if not choices:
                choices = ["abs"]
            kind = self.rng.choice(choices)
            if kind == "var":
                return Var(self.rng.choice(env)), 1
            if kind == "abs":
                name = f"x{len(env)}"
                body, used = go(budget - 1, env + (name,))
                return Abs(name, body), used + 1
            split = self.rng.randint(1, budget - 2)
            fun, used_f = go(split, env)
            arg, used_a = go(budget - 1 - used_f, env)
            return App(fun, arg), used_f + used_a + 1

        out, _ = go(max(2, max_size), self.free_names)
        return out

    def normal_form(self, size: int, eta_free=True, closed=True) -> Term | None:
        """Uniform random normal form of exactly `size`, or None if none exist."""
        enum = _Enumerator(() if closed else self.free_names, eta_free)
        terms = enum.normal_forms(size, 0)
        if not terms:
            return None
        return self.rng.choice(terms)

    def distinct_pair(self, max_size: int, eta_free=True):
        """Two alpha-distinct closed normal forms, each of size <= max_size."""
        enum = _Enumerator((), eta_free)
        pool = []
        for n in range(1, max_size + 1):
            pool.extend(enum.normal_forms(n, 0))
        while True:
            m0 = self.rng.choice(pool)
            m1 = self.rng.choice(pool)
            if m0 != m1:
                return m0, m1


def random_redex_normalize(t: Term, fuel: int, rng: random.Random):
    """Contract uniformly random beta redexes; (term, steps, status)."""
    cur = t
    for used in range(fuel):
        paths = _all_beta_redexes(cur)
        if not paths:
            return cur, used, NORMAL_FORM
    # pragma: no cover - loop body continues below
        cur = contract(cur, rng.choice(paths), BETA)
    if find_redex(cur, is_beta_redex) is None:
        return cur, fuel, NORMAL_FORM
    return cur, fuel, FUEL_EXHAUSTED


def _all_beta_redexes(t: Term):
    out = []
    stack = [(t, ())]
    while stack:
        node, path = stack.pop()
        if is_beta_redex(node):
            out.append(path)
        if isinstance(node, App):
            stack.append((node.arg, path + (1,)))
            stack.append((node.fun, path + (0,)))
        elif isinstance(node, Abs):
            stack.append((node.body, path + (0,)))
    return out
