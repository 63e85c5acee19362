"""Reduction: traced leftmost-outermost normalization and fast kernels.

`normalize` is the observable operation: it contracts one leftmost-
outermost redex at a time on named terms and records every step with its
root-to-redex path, so traces can be replayed.  `beta_nf`/`beta_eta_nf`
compute the same normal forms (same contraction counts) through the de
Bruijn kernel, compiled when available, and are what the bulk corpus
work uses.

Fuel counts individual beta (or eta) contractions.  Reaching the normal
form on the last unit of fuel still reports NormalForm; FuelExhausted
means a further contraction was required.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import NoNormalFormError
from .terms import (
    Abs,
    App,
    Term,
    Var,
    alpha_key,
    deep_recursion,
    free_vars,
    from_db,
    size,
    substitute,
    to_db,
)

if os.environ.get("LAMBDALAB_PURE_KERNEL"):
    from . import _kernel_py as _kernel
else:
    try:
        from . import _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _kernel

KERNEL_NAME = _kernel.KERNEL_NAME

DEFAULT_FUEL = 100_000

NORMAL_FORM = "NormalForm"
FUEL_EXHAUSTED = "FuelExhausted"

BETA = "beta"
BETA_ETA = "beta_eta"


@dataclass(frozen=True)
class Step:
    rule: str  # "beta" | "eta"
    position: tuple  # root-to-redex child indices (App: 0 fun, 1 arg; Abs: 0 body)
    result_size: int


@dataclass(frozen=True)
class ReductionTrace:
    initial: Term
    steps: tuple
    status: str
    final: Term
    step_count: int


def is_beta_redex(t: Term) -> bool:
    return isinstance(t, App) and isinstance(t.fun, Abs)


def is_eta_redex(t: Term) -> bool:
    return (
        isinstance(t, Abs)
        and isinstance(t.body, App)
        and t.body.arg == Var(t.param)
        and t.param not in free_vars(t.body.fun)
    )


def find_redex(t: Term, pred) -> tuple | None:
    """Path of the leftmost-outermost redex under `pred`, or None."""
    stack = [(t, ())]
    while stack:
        node, path = stack.pop()
        if pred(node):
            return path
        if isinstance(node, App):
            stack.append((node.arg, path + (1,)))
            stack.append((node.fun, path + (0,)))
        elif isinstance(node, Abs):
            stack.append((node.body, path + (0,)))
    return None


def contract(t: Term, path: tuple, rule: str) -> Term:
    """Contract the redex of the given kind at `path`."""

    def go(node, i):
        if i == len(path):
            if rule == BETA:
                if not is_beta_redex(node):
                    raise ValueError(f"no beta redex at {path}")
                return substitute(node.fun.body, node.fun.param, node.arg)
            if not is_eta_redex(node):
                raise ValueError(f"no eta redex at {path}")
            return node.body.fun
        step = path[i]
        if isinstance(node, App):
            if step == 0:
                return App(go(node.fun, i + 1), node.arg)
            if step == 1:
                return App(node.fun, go(node.arg, i + 1))
        elif isinstance(node, Abs) and step == 0:
            return Abs(node.param, go(node.body, i + 1))
        raise ValueError(f"path {path} does not exist in term")

    with deep_recursion():
        return go(t, 0)


def normalize(t: Term, mode: str = BETA, fuel: int = DEFAULT_FUEL) -> ReductionTrace:
    """Stepwise leftmost-outermost normalization with a full trace."""
    if mode not in (BETA, BETA_ETA):
        raise ValueError(f"unknown mode: {mode}")
    steps = []
    cur = t
    left = fuel
    status = NORMAL_FORM
    while True:
        path = find_redex(cur, is_beta_redex)
        if path is None:
            break
        if left == 0:
            status = FUEL_EXHAUSTED
            break
        cur = contract(cur, path, BETA)
        left -= 1
        steps.append(Step(BETA, path, size(cur)))
    if mode == BETA_ETA and status == NORMAL_FORM:
        while True:
            path = find_redex(cur, is_eta_redex)
            if path is None:
                break
            if left == 0:
                status = FUEL_EXHAUSTED
                break
            cur = contract(cur, path, "eta")
            left -= 1
            steps.append(Step("eta", path, size(cur)))
    return ReductionTrace(
        initial=t, steps=tuple(steps), status=status, final=cur, step_count=len(steps)
    )


def replay(trace: ReductionTrace) -> Term:
    """Re-apply every recorded step to the initial term."""
    cur = trace.initial
    for step in trace.steps:
        cur = contract(cur, step.position, step.rule)
    return cur


def beta_nf(t: Term, fuel: int = DEFAULT_FUEL):
    """Kernel beta normalization: (term_or_None, steps, status)."""
    out, steps, code = _kernel.nf_db(to_db(t), fuel, False)
    if code == _kernel.STATUS_FUEL:
        return None, steps, FUEL_EXHAUSTED
    return from_db(out), steps, NORMAL_FORM


def beta_eta_nf(t: Term, fuel: int = DEFAULT_FUEL):
    """Kernel beta-eta normalization: (term_or_None, steps, status)."""
    out, steps, code = _kernel.nf_db(to_db(t), fuel, True)
    if code == _kernel.STATUS_FUEL:
        return None, steps, FUEL_EXHAUSTED
    return from_db(out), steps, NORMAL_FORM


def require_beta_nf(t: Term, fuel: int = DEFAULT_FUEL) -> Term:
    nf, _, status = beta_nf(t, fuel)
    if status != NORMAL_FORM:
        raise NoNormalFormError(f"no beta normal form within fuel {fuel}")
    return nf


def require_beta_eta_nf(t: Term, fuel: int = DEFAULT_FUEL) -> Term:
    nf, _, status = beta_eta_nf(t, fuel)
    if status != NORMAL_FORM:
        raise NoNormalFormError(f"no beta-eta normal form within fuel {fuel}")
    return nf


def leftmost_sequence(t: Term, fuel: int):
    """Yield t and successive leftmost-outermost beta reducts (<= fuel steps).

    Stops after the normal form or when fuel runs out; the caller can
    tell the cases apart by probing the last yielded term for a redex.
    """
    cur = t
    yield cur
    for _ in range(fuel):
        path = find_redex(cur, is_beta_redex)
        if path is None:
            return
        cur = contract(cur, path, BETA)
        yield cur


def beta_convertible(a: Term, b: Term, fuel: int = DEFAULT_FUEL):
    """Semi-decide a =beta b: True / False / None (indeterminate).

    Normalizes both sides when possible; otherwise falls back to a
    bounded search for a common reduct along the leftmost reduction
    sequences of both terms.
    """
    nfa, _, sta = beta_nf(a, fuel)
    nfb, _, stb = beta_nf(b, fuel)
    if sta == NORMAL_FORM and stb == NORMAL_FORM:
        return alpha_key(nfa) == alpha_key(nfb)
    # Reducts beyond this size are dropped from the search; the walk then
    # reports indeterminate rather than chasing an exploding term.
    size_cap = 50_000
    seen_a = set()
    seen_b = set()
    gen_a = leftmost_sequence(a, fuel)
    gen_b = leftmost_sequence(b, fuel)
    live_a, live_b = True, True
    while live_a or live_b:
        if live_a:
            try:
                ta = next(gen_a)
            except StopIteration:
                live_a = False
            else:
                if size(ta) > size_cap:
                    live_a = False
                else:
                    ka = alpha_key(ta)
                    if ka in seen_b:
                        return True
                    seen_a.add(ka)
        if live_b:
            try:
                tb = next(gen_b)
            except StopIteration:
                live_b = False
            else:
                if size(tb) > size_cap:
                    live_b = False
                else:
                    kb = alpha_key(tb)
                    if kb in seen_a:
                        return True
                    seen_b.add(kb)
    return None
