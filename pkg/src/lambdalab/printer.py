"""Printing and JSON (de)serialization of terms.

Text formats round-trip through the parser up to alpha-equality; the JSON
AST {"var":s} | {"app":[t,t]} | {"abs":{"param":s,"body":t}} round-trips
exactly.
"""

from __future__ import annotations

import json
import re

from .combinators import fold_label
from .errors import ParseError
from .terms import Abs, App, Term, Var, deep_recursion

_IDENT = re.compile(r"[a-z][a-zA-Z0-9_']*\Z")

# Precedence levels: 0 top/lambda body, 1 function position, 2 argument.


def _render(t, prec, lam, fold):
    if fold:
        label = fold_label(t)
        if label is not None:
            return label
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Abs):
        params = [t.param]
        body = t.body
        while isinstance(body, Abs) and (not fold or fold_label(body) is None):
            params.append(body.param)
            body = body.body
        out = lam + " ".join(params) + "." + _render(body, 0, lam, fold)
        return "(" + out + ")" if prec > 0 else out
    out = _render(t.fun, 1, lam, fold) + " " + _render(t.arg, 2, lam, fold)
    return "(" + out + ")" if prec > 1 else out


def term_to_json(t: Term):
    def go(node):
        if isinstance(node, Var):
            return {"var": node.name}
        if isinstance(node, App):
            return {"app": [go(node.fun), go(node.arg)]}
        return {"abs": {"param": node.param, "body": go(node.body)}}

    with deep_recursion():
        return go(t)


def term_from_json(obj) -> Term:
    def go(node):
        if not isinstance(node, dict) or len(node) != 1:
            raise ParseError(f"malformed term JSON: {node!r}")
        if "var" in node:
            name = node["var"]
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ParseError(f"bad variable name in JSON: {name!r}")
            return Var(name)
        if "app" in node:
            pair = node["app"]
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"malformed application JSON: {node!r}")
            return App(go(pair[0]), go(pair[1]))
        if "abs" in node:
            inner = node["abs"]
            if not isinstance(inner, dict) or set(inner) != {"param", "body"}:
                raise ParseError(f"malformed abstraction JSON: {node!r}")
            name = inner["param"]
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ParseError(f"bad binder name in JSON: {name!r}")
            return Abs(name, go(inner["body"]))
        raise ParseError(f"malformed term JSON: {node!r}")

    with deep_recursion():
        return go(obj)


def print_term(t: Term, format: str = "ascii", fold_combinators: bool = False) -> str:
    if format == "json":
        return json.dumps(term_to_json(t), separators=(",", ":"))
    if format == "ascii":
        lam = "\\"
    elif format == "unicode":
        lam = "λ"
    else:
        raise ValueError(f"unknown format: {format}")
    with deep_recursion():
        return _render(t, 0, lam, fold_combinators)
