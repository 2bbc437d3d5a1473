"""Reduced ordered binary decision diagrams.

Nodes are plain integers minted by a `Manager`.
`FALSE` (0) and `TRUE` (1) are the sinks; every other
integer indexes the manager's node arrays.
Variable `i` is tested before variable `j` iff `i < j`.

Because all nodes go through `Manager.mk_node` and the
unique table, two node ids of one manager are equal iff
they denote the same Boolean function.

A partial valuation is a sequence of length `num_vars`
holding `0`, `1` or `None` (unconstrained).
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence

import numpy as np


FALSE = 0
TRUE = 1

PartialValuation = tuple  # tuple[int | None, ...]


class OrderingError(ValueError):
    """A node would test a variable out of order."""


class AuditError(AssertionError):
    """Structural audit found a malformed node."""


class Manager:
    """Shared ROBDD store: unique table plus computed tables.

    A manager is not thread-safe. Node ids from one manager
    are meaningless in another.
    """

    def __init__(self, num_vars: int):
        if num_vars < 0:
            raise ValueError(f'num_vars must be >= 0, got {num_vars}')
        self.num_vars = num_vars
        # sinks sit below every variable
        self._var = [num_vars, num_vars]
        self._hi = [FALSE, TRUE]
        self._lo = [FALSE, TRUE]
        # (var, hi, lo) -> node
        self._unique: dict[tuple[int, int, int], int] = {}
        self._or_cache: dict[tuple[int, int], int] = {}
        self._and_cache: dict[tuple[int, int], int] = {}
        self._not_cache: dict[int, int] = {}
        self._restrict_cache: dict[tuple[int, int, int], int] = {}

    def __len__(self):
        """Number of nodes, sinks included."""
        return len(self._var)

    def __repr__(self):
        return f'Manager(num_vars={self.num_vars}, nodes={len(self)})'

    # node access

    def var_of(self, u: int) -> int:
        """Variable tested at `u`; `num_vars` for sinks."""
        return self._var[u]

    def hi(self, u: int) -> int:
        return self._hi[u]

    def lo(self, u: int) -> int:
        return self._lo[u]

    def is_sink(self, u: int) -> bool:
        return u < 2

    def clear_caches(self):
        """Drop all computed tables. Nodes are kept."""
        self._or_cache.clear()
        self._and_cache.clear()
        self._not_cache.clear()
        self._restrict_cache.clear()

    # construction

    def mk_node(self, var: int, hi: int, lo: int) -> int:
        """Return the canonical node for `ite(var, hi, lo)`."""
        if hi == lo:
            return hi
        vars_ = self._var
        if not (0 <= var < vars_[hi] and var < vars_[lo]):
            raise OrderingError(
                f'variable {var} must precede children '
                f'(hi tests {vars_[hi]}, lo tests {vars_[lo]})')
        key = (var, hi, lo)
        u = self._unique.get(key)
        if u is None:
            u = len(vars_)
            vars_.append(var)
            self._hi.append(hi)
            self._lo.append(lo)
            self._unique[key] = u
        return u

    def var(self, i: int) -> int:
        """Node for the positive literal of variable `i`."""
        return self.mk_node(i, TRUE, FALSE)

    def nvar(self, i: int) -> int:
        """Node for the negative literal of variable `i`."""
        return self.mk_node(i, FALSE, TRUE)

    def cube(self, valuation: Sequence[int | None]) -> int:
        """Conjunction of the literals fixed by `valuation`."""
        self._check_width(valuation)
        u = TRUE
        for i in range(self.num_vars - 1, -1, -1):
            b = valuation[i]
            if b is None:
                continue
            u = self.mk_node(i, u, FALSE) if b else self.mk_node(i, FALSE, u)
        return u

    # Boolean algebra

    def bdd_or(self, a: int, b: int) -> int:
        """Disjunction."""
        if a == TRUE or b == TRUE:
            return TRUE
        if a == FALSE or a == b:
            return b
        if b == FALSE:
            return a
        if a > b:
            a, b = b, a
        key = (a, b)
        r = self._or_cache.get(key)
        if r is not None:
            return r
        var, hi, lo = self._var, self._hi, self._lo
        va, vb = var[a], var[b]
        if va < vb:
            r = self.mk_node(va, self.bdd_or(hi[a], b), self.bdd_or(lo[a], b))
        elif vb < va:
            r = self.mk_node(vb, self.bdd_or(a, hi[b]), self.bdd_or(a, lo[b]))
        else:
            r = self.mk_node(
                va, self.bdd_or(hi[a], hi[b]), self.bdd_or(lo[a], lo[b]))
        self._or_cache[key] = r
        return r

    def bdd_and(self, a: int, b: int) -> int:
        """Conjunction."""
        if a == FALSE or b == FALSE:
            return FALSE
        if a == TRUE or a == b:
            return b
        if b == TRUE:
            return a
        if a > b:
            a, b = b, a
        key = (a, b)
        r = self._and_cache.get(key)
        if r is not None:
            return r
        var, hi, lo = self._var, self._hi, self._lo
        va, vb = var[a], var[b]
        if va < vb:
            r = self.mk_node(
                va, self.bdd_and(hi[a], b), self.bdd_and(lo[a], b))
        elif vb < va:
            r = self.mk_node(
                vb, self.bdd_and(a, hi[b]), self.bdd_and(a, lo[b]))
        else:
            r = self.mk_node(
                va, self.bdd_and(hi[a], hi[b]), self.bdd_and(lo[a], lo[b]))
        self._and_cache[key] = r
        return r

    def bdd_not(self, a: int) -> int:
        """Complement."""
        if a < 2:
            return 1 - a
        r = self._not_cache.get(a)
        if r is not None:
            return r
        r = self.mk_node(
            self._var[a], self.bdd_not(self._hi[a]), self.bdd_not(self._lo[a]))
        self._not_cache[a] = r
        self._not_cache[r] = a
        return r

    def bdd_xor(self, a: int, b: int) -> int:
        """Exclusive or, built from the other connectives."""
        return self.bdd_or(
            self.bdd_and(a, self.bdd_not(b)),
            self.bdd_and(self.bdd_not(a), b))

    def restrict(self, a: int, v: int, value: int) -> int:
        """Cofactor of `a` with variable `v` fixed to `value`."""
        var = self._var
        if a < 2 or var[a] > v:
            return a
        key = (a, v, value)
        r = self._restrict_cache.get(key)
        if r is not None:
            return r
        if var[a] == v:
            r = self._hi[a] if value else self._lo[a]
        else:
            r = self.mk_node(
                var[a],
                self.restrict(self._hi[a], v, value),
                self.restrict(self._lo[a], v, value))
        self._restrict_cache[key] = r
        return r

    def exists(self, a: int, v: int) -> int:
        """Existentially quantify variable `v` out of `a`."""
        return self.bdd_or(self.restrict(a, v, 0), self.restrict(a, v, 1))

    def entails(self, a: int, b: int) -> bool:
        """Return `True` iff every model of `a` is a model of `b`."""
        return self.bdd_and(a, self.bdd_not(b)) == FALSE

    # queries

    def eval(self, a: int, valuation: Sequence[int]) -> int:
        """Truth value of `a` under a total valuation."""
        self._check_width(valuation)
        if any(b is None for b in valuation):
            raise ValueError('eval needs a total valuation')
        var, hi, lo = self._var, self._hi, self._lo
        while a > 1:
            a = hi[a] if valuation[var[a]] else lo[a]
        return a

    def get_model(self, a: int) -> PartialValuation | None:
        """Return a partial model of `a`, or `None` if `a` is `FALSE`.

        Walks from the root preferring then-branches. Since the
        diagram is reduced, any non-`FALSE` child leads to `TRUE`,
        so no backtracking is ever needed. Variables not on the
        walked path stay `None`; every completion of them is a model.
        """
        if a == FALSE:
            return None
        mu: list[int | None] = [None] * self.num_vars
        var, hi, lo = self._var, self._hi, self._lo
        while a > 1:
            if hi[a] != FALSE:
                mu[var[a]] = 1
                a = hi[a]
            else:
                mu[var[a]] = 0
                a = lo[a]
        return tuple(mu)

    def vars_of(self, a: int) -> set[int]:
        """Variables labelling nodes reachable from `a`."""
        return {self._var[u] for u in self.descendants(a) if u > 1}

    def descendants(self, a: int) -> set[int]:
        """All nodes reachable from `a`, `a` and sinks included."""
        seen = set()
        stack = [a]
        hi, lo = self._hi, self._lo
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            if u > 1:
                stack.append(hi[u])
                stack.append(lo[u])
        return seen

    def sat_count(self, a: int) -> int:
        """Number of models of `a` over all `num_vars` variables."""
        var, hi, lo = self._var, self._hi, self._lo
        memo = {FALSE: 0, TRUE: 1}

        def count(u):
            # models over variables var[u] .. num_vars - 1
            r = memo.get(u)
            if r is None:
                h, l = hi[u], lo[u]
                r = ((count(h) << (var[h] - var[u] - 1))
                     + (count(l) << (var[l] - var[u] - 1)))
                memo[u] = r
            return r

        return count(a) << var[a]

    def enumerate_models(self, a: int) -> Iterator[tuple[int, ...]]:
        """Yield the models of `a` in lexicographic order.

        Variable 0 is the most significant position.
        """
        n = self.num_vars
        var, hi, lo = self._var, self._hi, self._lo
        prefix: list[int] = []

        def rec(u, level):
            if u == FALSE:
                return
            if level == n:
                yield tuple(prefix)
                return
            if var[u] > level:
                children = (u, u)
            else:
                children = (lo[u], hi[u])
            for bit, child in enumerate(children):
                prefix.append(bit)
                yield from rec(child, level + 1)
                prefix.pop()

        yield from rec(a, 0)

    def model_array(self, a: int) -> np.ndarray:
        """Sorted `int64` array of the models of `a` as integers.

        Bit `num_vars - 1 - i` of each entry holds variable `i`,
        so integer order equals bitstring order.
        """
        n = self.num_vars
        var, hi, lo = self._var, self._hi, self._lo
        memo: dict[tuple[int, int], np.ndarray] = {}
        empty = np.zeros(0, dtype=np.int64)
        unit = np.zeros(1, dtype=np.int64)

        def rec(u, level):
            if u == FALSE:
                return empty
            if level == n:
                return unit
            key = (u, level)
            r = memo.get(key)
            if r is not None:
                return r
            bit = np.int64(1 << (n - 1 - level))
            if var[u] > level:
                sub = rec(u, level + 1)
                r = np.concatenate((sub, sub | bit))
            else:
                r = np.concatenate(
                    (rec(lo[u], level + 1), rec(hi[u], level + 1) | bit))
            memo[key] = r
            return r

        return rec(a, 0)

    def audit(self, a: int):
        """Raise `AuditError` unless every node below `a` is reduced,
        ordered and registered in the unique table."""
        var, hi, lo = self._var, self._hi, self._lo
        for u in self.descendants(a):
            if u < 2:
                continue
            h, l = hi[u], lo[u]
            if h == l:
                raise AuditError(f'node {u} has equal children')
            if not (var[u] < var[h] and var[u] < var[l]):
                raise AuditError(f'node {u} breaks the variable order')
            if self._unique.get((var[u], h, l)) != u:
                raise AuditError(f'node {u} missing from unique table')

    def node_count(self, a: int) -> int:
        """Number of nodes reachable from `a`, sinks included."""
        return len(self.descendants(a))

    def _check_width(self, valuation):
        if len(valuation) != self.num_vars:
            raise ValueError(
                f'valuation has {len(valuation)} entries, '
                f'manager has {self.num_vars} variables')
