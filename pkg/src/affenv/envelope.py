"""Affine envelopes of ROBDDs.

The envelope of `R` is the strongest affine function that
`R` entails: its models are the closure of the models of `R`
under three-way xor. It is computed by moving a model of `R`
to the origin (`translate`), closing the result into a vector
space (`xor_close`) and moving back.

Variables that a path skips are existentially eliminated as
soon as they are met (see `cons`): a skipped variable means
two models differ in exactly that variable, so the envelope
cannot depend on it.
"""
from __future__ import annotations

from collections.abc import Sequence

from affenv.bdd import FALSE, TRUE, Manager


class MisalignedError(AssertionError):
    """`extend` met two nodes testing different variables."""


def _valuation(mgr: Manager, mu: Sequence) -> list:
    if len(mu) != mgr.num_vars:
        raise ValueError(
            f'valuation has {len(mu)} entries, '
            f'manager has {mgr.num_vars} variables')
    return [None if b is None or b in ('x', '-') else int(b) for b in mu]


def cons(mgr: Manager, x: int, t: int, e: int, mu: Sequence) -> int:
    """`mk_node`, except that `x` is eliminated where `mu` leaves it open."""
    if mu[x] is None:
        return mgr.bdd_or(t, e)
    return mgr.mk_node(x, t, e)


def _translator(mgr: Manager, mu: list):
    var, hi, lo = mgr._var, mgr._hi, mgr._lo
    unique = mgr._unique
    memo: dict[int, int] = {}

    def tr(u):
        if u < 2:
            return u
        r = memo.get(u)
        if r is not None:
            return r
        x = var[u]
        b = mu[x]
        t, e = tr(hi[u]), tr(lo[u])
        if b is None:
            r = mgr.bdd_or(t, e)
        elif t == e:
            r = t
        else:
            if b:
                t, e = e, t
            # swapping children keeps the order, so skip mk_node's checks
            key = (x, t, e)
            r = unique.get(key)
            if r is None:
                r = len(var)
                var.append(x)
                hi.append(t)
                lo.append(e)
                unique[key] = r
        memo[u] = r
        return r

    return tr


def translate(mgr: Manager, r: int, mu: Sequence) -> int:
    """Xor every model of `r` with `mu`.

    Children are swapped at nodes whose variable `mu` sets to 1.
    Variables left open by `mu` get no swap and are eliminated.
    """
    return _translator(mgr, _valuation(mgr, mu))(r)


def satisfies(mgr: Manager, mu: Sequence, s: int) -> bool:
    """Whether partial valuation `mu` is known to satisfy `s`.

    Returns `False` as soon as the walk meets a variable that
    `mu` leaves open.
    """
    var, hi, lo = mgr._var, mgr._hi, mgr._lo
    while s > 1:
        b = mu[var[s]]
        if b is None:
            return False
        s = hi[s] if b else lo[s]
    return s == TRUE


def extend(mgr: Manager, r: int, s: int, mu: Sequence) -> int:
    """Return `r | translate(s, mu)`, eliminating variables open in `mu`.

    Meant for `extend(S, S, mu)` with `S` a vector space, whose
    paths to `TRUE` all test the same variables. Any two nodes
    met together then test the same variable; anything else
    raises `MisalignedError`.
    """
    mu = _valuation(mgr, mu)
    var, hi, lo = mgr._var, mgr._hi, mgr._lo
    tr = _translator(mgr, mu)
    memo: dict[tuple[int, int], int] = {}

    def ext(r, s):
        if r == TRUE or s == TRUE:
            return TRUE
        if r == FALSE:
            return tr(s)
        key = (r, s)
        res = memo.get(key)
        if res is not None:
            return res
        x = var[r]
        if s == FALSE:
            res = cons(mgr, x, ext(hi[r], FALSE), ext(lo[r], FALSE), mu)
        elif var[s] != x:
            raise MisalignedError(
                f'extend met variables {x} and {var[s]} at one step')
        elif mu[x] == 1:
            res = mgr.mk_node(x, ext(hi[r], lo[s]), ext(lo[r], hi[s]))
        else:
            res = cons(mgr, x, ext(hi[r], hi[s]), ext(lo[r], lo[s]), mu)
        memo[key] = res
        return res

    return ext(r, s)


def trav(mgr: Manager, r: int, mu: Sequence, s: int) -> int:
    """Grow the vector space `s` until it covers every path of `r`.

    Paths are visited else-branch first. A path whose valuation
    already satisfies `s` is skipped; otherwise `s` is extended
    by it.
    """
    return _trav(mgr, r, _valuation(mgr, mu), s, None)


def _trav(mgr, r, mu, s, shift):
    # With `shift`, paths of `r` are read as paths of
    # translate(r, shift) without building that diagram.
    var, hi, lo = mgr._var, mgr._hi, mgr._lo
    n = mgr.num_vars

    def walk(p, limit):
        # follow mu through the nodes of s testing variables < limit;
        # None once an open variable is met
        while p is not None and var[p] < limit:
            b = mu[var[p]]
            p = None if b is None else (hi[p] if b else lo[p])
        return p

    def go(u, s, p):
        # p: node of s reached by following mu above var[u]
        if s == TRUE or p == TRUE:
            # every path through u already satisfies s
            return s
        if u == FALSE:
            return s
        if u == TRUE:
            if walk(p, n) == TRUE:
                return s
            return extend(mgr, s, s, mu)
        x = var[u]
        f = 0 if shift is None else shift[x]
        if f == 0:
            branches = ((0, lo[u]), (1, hi[u]))
        elif f == 1:
            branches = ((0, hi[u]), (1, lo[u]))
        else:
            branches = ((None, lo[u]), (None, hi[u]))
        old = mu[x]
        for b, child in branches:
            mu[x] = b
            s2 = go(child, s, walk(p, var[child]))
            if s2 != s:
                s = s2
                mu[x] = old
                p = walk(s, x)
        mu[x] = old
        return s

    return go(r, s, walk(s, var[r]))


def zero_vector(mgr: Manager, variables) -> int:
    """Node for the conjunction of negative literals of `variables`."""
    u = TRUE
    for v in sorted(variables, reverse=True):
        u = mgr.mk_node(v, FALSE, u)
    return u


def xor_close(mgr: Manager, r: int) -> int:
    """Smallest vector space containing the models of `r`.

    Expects the zero valuation (on `vars_of(r)`) to be a model.
    """
    start = zero_vector(mgr, mgr.vars_of(r))
    return trav(mgr, r, [None] * mgr.num_vars, start)


def xor_close_translated(mgr: Manager, r: int, mu: Sequence) -> int:
    """Same function as `xor_close(translate(r, mu))`.

    Traverses `r` itself, xoring each path with `mu` on the fly.
    Variables open in `mu` are read as open on every path.
    """
    mu = _valuation(mgr, mu)
    start = zero_vector(
        mgr, (v for v in mgr.vars_of(r) if mu[v] is not None))
    return _trav(mgr, r, [None] * mgr.num_vars, start, mu)


def to_aff(mgr: Manager, r: int, model: Sequence | None = None) -> int:
    """Affine envelope of `r`.

    `model` picks the translation point; it defaults to
    `mgr.get_model(r)`. Any partial valuation whose completions
    are all models of `r` gives the same result.
    """
    if r == FALSE:
        return FALSE
    if model is None:
        mu = list(mgr.get_model(r))
    else:
        mu = _valuation(mgr, model)
        if not mgr.entails(mgr.cube(mu), r):
            raise ValueError('model does not satisfy the function')
    return translate(mgr, xor_close_translated(mgr, r, mu), mu)


def to_aff_literal(mgr: Manager, r: int, model: Sequence | None = None) -> int:
    """`to_aff` with the first translation built explicitly."""
    if r == FALSE:
        return FALSE
    mu = list(mgr.get_model(r)) if model is None else _valuation(mgr, model)
    return translate(mgr, xor_close(mgr, translate(mgr, r, mu)), mu)


def is_affine(mgr: Manager, r: int) -> bool:
    return to_aff(mgr, r) == r


def path_variables(mgr: Manager, r: int) -> tuple[int, ...] | None:
    """Common variable sequence of all paths from `r` to `TRUE`.

    Returns `None` if two such paths test different variables,
    and `()` when `r` is a sink.
    """
    var, hi, lo = mgr._var, mgr._hi, mgr._lo
    memo: dict[int, tuple | None] = {TRUE: ()}
    mixed = object()

    def seq(u):
        if u in memo:
            r = memo[u]
            return mixed if r is None else r
        found = set()
        for child in (hi[u], lo[u]):
            if child != FALSE:
                s = seq(child)
                if s is mixed:
                    found.add(mixed)
                else:
                    found.add(s)
        if len(found) != 1 or mixed in found:
            memo[u] = None
            return mixed
        s = (var[u],) + found.pop()
        memo[u] = s
        return s

    if r == FALSE:
        return ()
    s = seq(r)
    return None if s is mixed else s


def has_uniform_paths(mgr: Manager, r: int) -> bool:
    """True iff every path from `r` to `TRUE` tests the same variables."""
    return path_variables(mgr, r) is not None
