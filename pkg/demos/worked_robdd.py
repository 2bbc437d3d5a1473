"""The ROBDD envelope algorithm, step by step, on five models.

Run: python3 demos/worked_robdd.py
"""
from affenv import Manager, to_aff, translate, xor_close
from affenv.envelope import extend, path_variables, zero_vector
from affenv.models import ModelSet, modelset_from_bdd, modelset_to_bdd


NAMES = 'vwxyz'


def show(label, mgr, r):
    models = modelset_from_bdd(mgr, r).to_strings()
    used = ''.join(NAMES[v] for v in sorted(mgr.vars_of(r)))
    print(f'{label:22s} {len(models):2d} models over {used or "-"}: '
          + ' '.join(models if len(models) <= 8 else models[:8] + ['...']))


mgr = Manager(5)
r = modelset_to_bdd(mgr, ModelSet.from_strings(
    ['00011', '00110', '01001', '01101', '10101']))
show('R', mgr, r)

mu = (0, 0, 0, 1, 1)
shifted = translate(mgr, r, mu)
show('R translated by 00011', mgr, shifted)

# The accumulator starts as the zero vector and is extended to
# cover each path of the translated diagram in turn. A path that
# skips x leaves it open, which removes x from the accumulator.
s = zero_vector(mgr, mgr.vars_of(shifted))
show('start', mgr, s)
for path in [(0, 0, 1, 0, 1), (0, 1, None, 1, 0), (1, 0, 1, 1, 0)]:
    s = extend(mgr, s, s, path)
    label = ''.join('x' if b is None else str(b) for b in path)
    show('cover ' + label, mgr, s)

assert s == xor_close(mgr, shifted)
env = translate(mgr, s, mu)
assert env == to_aff(mgr, r)
show('envelope', mgr, env)
print('every path tests', ', '.join(NAMES[v] for v in path_variables(mgr, env)))
