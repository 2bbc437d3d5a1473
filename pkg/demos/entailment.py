"""Answering queries against an envelope.

Run: python3 demos/entailment.py

A query that follows from the envelope follows from the
function itself, since the function entails its envelope. When
the envelope does not entail the query, the function still
might, so that answer needs the full check.
"""
from affenv import GenConfig, Manager, rand_bdd, to_aff


n = 10
mgr = Manager(n)
# a parity constraint and a fact, conjoined with random noise
parity = mgr.bdd_xor(mgr.bdd_xor(mgr.var(0), mgr.var(1)), mgr.var(2))
kb = mgr.bdd_and(mgr.bdd_and(parity, mgr.var(5)),
                 rand_bdd(mgr, GenConfig(n, 2, seed=3)))
env = to_aff(mgr, kb)
print(f'knowledge base: {mgr.sat_count(kb)} models, '
      f'{mgr.node_count(kb)} nodes')
print(f'envelope:       {mgr.sat_count(env)} models, '
      f'{mgr.node_count(env)} nodes')

queries = {}
for i in range(n - 1):
    x, y = mgr.var(i), mgr.var(i + 1)
    queries[f'x{i} xor x{i + 1}'] = mgr.bdd_xor(x, y)
    queries[f'x{i} or x{i + 1}'] = mgr.bdd_or(x, y)
    queries[f'x{i}'] = x
queries['x0 xor x1 xor x2'] = parity
queries['kb or x9'] = mgr.bdd_or(kb, mgr.var(9))

for name, q in queries.items():
    fast = mgr.entails(env, q)
    if fast:
        assert mgr.entails(kb, q)
        print(f'{name:16s} entailed (envelope suffices)')
    elif mgr.entails(kb, q):
        print(f'{name:16s} entailed (needed the full check)')
