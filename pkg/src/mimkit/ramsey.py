"""Ramsey upper bounds and evaluation of symbolic width bounds."""

import ast
from functools import lru_cache

from .errors import ParameterError


@lru_cache(maxsize=None)
def ramsey_upper(a, b):
    """Upper bound on the Ramsey number ``R(a, b)``.

    ``R(1, b) = R(a, 1) = 1``, ``R(2, b) = b``, ``R(a, 2) = a``, and otherwise
    ``R(a-1, b) + R(a, b-1)``, minus one when both terms are even.

    Examples
    --------
    >>> ramsey_upper(3, 3), ramsey_upper(3, 4)
    (6, 9)
    """
    if a < 1 or b < 1:
        raise ParameterError("Ramsey arguments must be positive")
    if a == 1 or b == 1:
        return 1
    if a == 2:
        return b
    if b == 2:
        return a
    x, y = ramsey_upper(a - 1, b), ramsey_upper(a, b - 1)
    return x + y - 1 if x % 2 == 0 and y % 2 == 0 else x + y


def evaluate_bound(expr, **env):
    """Numeric value of a bound such as ``"R(r,R(r,t))"`` or ``"max{6,r}-1"``.

    Supports integers, names from ``env``, ``+``, ``-``, ``*``, ``R(a,b)``
    (via :func:`ramsey_upper`) and ``max{...}``/``min{...}``.

    Examples
    --------
    >>> evaluate_bound("max{6,r}-1", r=3)
    5
    >>> evaluate_bound("R(r,R(r,t))", r=2, t=2)
    2
    """
    if isinstance(expr, int):
        return expr
    text = str(expr).replace("{", "(").replace("}", ")")
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ParameterError(f"cannot parse bound {expr!r}") from exc
    return _eval(tree.body, env, expr)


def _eval(node, env, expr):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise ParameterError(f"bound {expr!r} needs a value for {node.id}")
        return int(env[node.id])
    if isinstance(node, ast.BinOp) and isinstance(node.op, (ast.Add, ast.Sub, ast.Mult)):
        a, b = _eval(node.left, env, expr), _eval(node.right, env, expr)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        return a * b
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        args = [_eval(x, env, expr) for x in node.args]
        if node.func.id == "R" and len(args) == 2:
            return ramsey_upper(*args)
        if node.func.id == "max" and args:
            return max(args)
        if node.func.id == "min" and args:
            return min(args)
    raise ParameterError(f"unsupported construct in bound {expr!r}")
