"""Affine envelope of four models, computed on explicit sets.

Run: python3 demos/sets_of_models.py
"""
from affenv.models import (
    ModelSet, aff_fixpoint, aff_incremental, translate_set, xor3_closure)


m = ModelSet.from_strings(['01011', '01100', '10111', '11001'])
print('M         ', m.to_strings())

# Translating by a member puts the zero vector in the set.
mu = '01100'
shifted = translate_set(m, mu)
print('M ^ 01100 ', shifted.to_strings())

# Three engines, one answer: the smallest superset closed under
# a ^ b ^ c. It is an affine space and so has 2**k members.
for engine in (aff_fixpoint, aff_incremental, xor3_closure):
    env = engine(m)
    print(f'{engine.__name__:16s}', len(env), env.to_strings())

# Back in the shifted frame the envelope is a vector space.
space = translate_set(aff_fixpoint(m), mu)
print('space     ', space.to_strings())
