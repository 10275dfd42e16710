"""Subtraction-free rational expressions as hash-consed DAGs.

Nodes are built only from variables, positive integer constants, ``+``,
``*`` and ``/``.  Structurally equal nodes are the same Python object, so
shared subexpressions are evaluated once.  The same expression can be
evaluated in several semifields:

* rationals (``eval_rational``),
* the tropical semifield ``(min, +, -)`` on integers or integer arrays
  (``eval_tropical``),
* Laurent fractions in an auxiliary variable ``eps`` (``valuation_probe``),
  whose lowest exponent must agree with the tropical value.
"""
from __future__ import annotations

import itertools
import weakref
from fractions import Fraction

import numpy as np

from .laurent import LaurentFraction, LaurentPoly


class DomainError(ValueError):
    """A value lies outside the domain where an operation is defined."""


class MissingBindingError(KeyError):
    """An expression variable has no value in the environment."""


_serial = itertools.count()
_table: "weakref.WeakValueDictionary[tuple, Expr]" = weakref.WeakValueDictionary()

VAR, CONST, ADD, MUL, DIV = "var", "const", "add", "mul", "div"


class Expr:
    __slots__ = ("op", "args", "serial", "_order", "_vars", "__weakref__")

    def __new__(cls, op, args):
        if op in (VAR, CONST):
            key = (op, args[0])
        else:
            key = (op,) + tuple(a.serial for a in args)
        node = _table.get(key)
        if node is not None:
            return node
        node = object.__new__(cls)
        node.op = op
        node.args = tuple(args)
        node.serial = next(_serial)
        node._order = None
        node._vars = None
        _table[key] = node
        return node

    # ---- arithmetic -------------------------------------------------
    def __add__(self, other):
        other = as_expr(other)
        a, b = sorted((self, other), key=lambda e: e.serial)
        return Expr(ADD, (a, b))

    __radd__ = __add__

    def __mul__(self, other):
        other = as_expr(other)
        if other.op == CONST and other.args[0] == 1:
            return self
        if self.op == CONST and self.args[0] == 1:
            return other
        a, b = sorted((self, other), key=lambda e: e.serial)
        return Expr(MUL, (a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_expr(other)
        if other.op == CONST and other.args[0] == 1:
            return self
        return Expr(DIV, (self, other))

    def __rtruediv__(self, other):
        return as_expr(other) / self

    def __pow__(self, m):
        if not isinstance(m, int):
            return NotImplemented
        if m == 0:
            return const(1)
        if m < 0:
            return const(1) / self ** (-m)
        out, base = None, self
        while m:
            if m & 1:
                out = base if out is None else out * base
            base = base * base if m > 1 else base
            m >>= 1
        return out

    def __sub__(self, other):
        raise TypeError("subtraction-free expressions have no subtraction")

    __rsub__ = __sub__

    def __neg__(self):
        raise TypeError("subtraction-free expressions have no negation")

    # ---- inspection -------------------------------------------------
    def topo_order(self):
        if self._order is None:
            self._order = _topo([self])
        return self._order

    def variables(self) -> frozenset:
        if self._vars is None:
            self._vars = frozenset(n.args[0] for n in self.topo_order() if n.op == VAR)
        return self._vars

    def size(self) -> int:
        return len(self.topo_order())

    def depth(self) -> int:
        d = {}
        for n in self.topo_order():
            d[n] = 0 if n.op in (VAR, CONST) else 1 + max(d[a] for a in n.args)
        return d[self]

    def __repr__(self):
        return to_string(self)

    def __bool__(self):
        return True


def var(name: str) -> Expr:
    return Expr(VAR, (str(name),))


def const(m: int) -> Expr:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"constants must be positive integers, got {m!r}")
    return Expr(CONST, (m,))


def as_expr(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return const(x)
    if isinstance(x, Fraction) and x > 0:
        return const(x.numerator) / const(x.denominator) if x.denominator != 1 else const(x.numerator)
    raise TypeError(f"cannot coerce {x!r} to a subtraction-free expression")


def expr_sum(terms) -> Expr:
    """Balanced sum of a non-empty iterable of expressions."""
    terms = [as_expr(t) for t in terms]
    if not terms:
        raise ValueError("empty sum has no subtraction-free representative")
    while len(terms) > 1:
        terms = [terms[i] + terms[i + 1] if i + 1 < len(terms) else terms[i]
                 for i in range(0, len(terms), 2)]
    return terms[0]


def expr_prod(factors) -> Expr:
    factors = [as_expr(f) for f in factors]
    if not factors:
        return const(1)
    while len(factors) > 1:
        factors = [factors[i] * factors[i + 1] if i + 1 < len(factors) else factors[i]
                   for i in range(0, len(factors), 2)]
    return factors[0]


def _topo(roots):
    order, seen = [], set()
    for root in roots:
        if root.serial in seen:
            continue
        stack = [(root, False)]
        while stack:
            node, done = stack.pop()
            if done:
                order.append(node)
                continue
            if node.serial in seen:
                continue
            seen.add(node.serial)
            stack.append((node, True))
            for a in node.args if node.op not in (VAR, CONST) else ():
                if a.serial not in seen:
                    stack.append((a, False))
    return order


def to_string(e: Expr) -> str:
    memo = {}
    for n in e.topo_order():
        if n.op == VAR:
            memo[n] = n.args[0]
        elif n.op == CONST:
            memo[n] = str(n.args[0])
        else:
            sym = {ADD: " + ", MUL: "*", DIV: "/"}[n.op]
            memo[n] = "(" + memo[n.args[0]] + sym + memo[n.args[1]] + ")"
    return memo[e]


# ---- semifields -----------------------------------------------------------

class Semifield:
    """Interpretation of the expression operations."""

    def const(self, m):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError


class FieldSemifield(Semifield):
    """Ordinary field arithmetic on any exact field element."""

    def const(self, m):
        return Fraction(m)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise DomainError("division by zero while evaluating an expression")
        return a / b


class TropicalSemifield(Semifield):
    """``(min, +, -)`` with constants sent to 0; works elementwise on arrays."""

    def const(self, m):
        return 0

    def add(self, a, b):
        return np.minimum(a, b)

    def mul(self, a, b):
        return a + b

    def div(self, a, b):
        return a - b


class EpsilonSemifield(Semifield):
    """Laurent fractions in an auxiliary variable ``eps``."""

    def const(self, m):
        return LaurentFraction(LaurentPoly.const(m))

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b


FIELD = FieldSemifield()
TROPICAL = TropicalSemifield()
EPSILON = EpsilonSemifield()


def evaluate(exprs, env, semifield: Semifield = FIELD, leaf=None):
    """Evaluate one expression or a list of expressions sharing one memo.

    ``leaf(name, value)`` converts environment values for the semifield.
    """
    single = isinstance(exprs, Expr)
    roots = [exprs] if single else list(exprs)
    order = roots[0].topo_order() if single else _topo(roots)
    memo = {}
    for n in order:
        op = n.op
        if op == VAR:
            name = n.args[0]
            if name not in env:
                raise MissingBindingError(name)
            v = env[name]
            memo[n.serial] = leaf(name, v) if leaf else v
        elif op == CONST:
            memo[n.serial] = semifield.const(n.args[0])
        else:
            a, b = memo[n.args[0].serial], memo[n.args[1].serial]
            if op == ADD:
                memo[n.serial] = semifield.add(a, b)
            elif op == MUL:
                memo[n.serial] = semifield.mul(a, b)
            else:
                memo[n.serial] = semifield.div(a, b)
    out = [memo[r.serial] for r in roots]
    return out[0] if single else out


def _positive_rational(name, v):
    if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
        raise DomainError(f"binding for {name} must be a rational number, got {v!r}")
    v = Fraction(v)
    if v <= 0:
        raise DomainError(f"binding for {name} must be positive, got {v}")
    return v


def eval_rational(exprs, env):
    """Evaluate at positive rational bindings; result is exact."""
    return evaluate(exprs, env, FIELD, _positive_rational)


def _as_int(v):
    if isinstance(v, np.ndarray):
        return v
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


def _tropical_leaf(name, v):
    if isinstance(v, np.ndarray):
        if not np.issubdtype(v.dtype, np.integer):
            raise DomainError(f"tropical binding for {name} must be integral")
        return v.astype(np.int64, copy=False)
    if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
        raise DomainError(f"tropical binding for {name} must be an integer, got {v!r}")
    return int(v)


def eval_tropical(exprs, env):
    """Tropicalization: ``+ -> min``, ``* -> +``, ``/ -> -``, constants -> 0.

    Bindings may be integers or integer numpy arrays (evaluated elementwise).
    """
    out = evaluate(exprs, env, TROPICAL, _tropical_leaf)
    if isinstance(exprs, Expr):
        return _as_int(out)
    return [_as_int(v) for v in out]


def _eps_leaf(name, a):
    if isinstance(a, bool) or not isinstance(a, (int, np.integer)):
        raise DomainError(f"probe exponent for {name} must be an integer")
    return LaurentFraction(LaurentPoly.monomial(1, int(a)))


def valuation_probe(exprs, env):
    """Substitute ``eps**a`` for each variable and return the lowest exponent
    of the resulting Laurent fraction in ``eps``."""
    out = evaluate(exprs, env, EPSILON, _eps_leaf)
    if isinstance(exprs, Expr):
        return out.valuation()
    return [v.valuation() for v in out]


def substitute(exprs, mapping):
    """Replace variables by expressions; unmapped variables stay put."""
    single = isinstance(exprs, Expr)
    roots = [exprs] if single else list(exprs)
    memo = {}
    for n in _topo(roots):
        if n.op == VAR:
            memo[n.serial] = as_expr(mapping[n.args[0]]) if n.args[0] in mapping else n
        elif n.op == CONST:
            memo[n.serial] = n
        else:
            a, b = memo[n.args[0].serial], memo[n.args[1].serial]
            memo[n.serial] = a + b if n.op == ADD else a * b if n.op == MUL else a / b
    out = [memo[r.serial] for r in roots]
    return out[0] if single else out


def random_expr(rng, variables=("a", "b", "c", "d", "e", "f"), depth=8, max_const=5, leaf_bias=0.3):
    """Random expression of depth at most ``depth``.

    Earlier nodes are reused with some probability so the result is a DAG
    rather than a tree.
    """
    pool = []

    def build(d):
        if d == 0 or rng.random() < leaf_bias:
            if rng.random() < 0.8:
                return var(rng.choice(variables))
            return const(rng.randint(1, max_const))
        if pool and rng.random() < 0.25:
            cand = [p for p in pool if p.depth() < d]
            if cand:
                return rng.choice(cand)
        op = rng.choice((ADD, MUL, DIV))
        a, b = build(d - 1), build(d - 1)
        node = a + b if op == ADD else a * b if op == MUL else a / b
        pool.append(node)
        return node

    return build(depth)
