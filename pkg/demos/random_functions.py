"""Random functions of calibrated density and their envelopes.

Run: python3 demos/random_functions.py
"""
from affenv import GenConfig, Manager, rand_bdd, to_aff


n = 12
print(f'{"pr":>3} {"target":>9} {"mean":>9} {"false":>6} {"envelope":>9}')
for pr in range(0, n + 1, 2):
    draws, falses, env_total, total = 400, 0, 0, 0
    for seed in range(draws):
        mgr = Manager(n)
        r = rand_bdd(mgr, GenConfig(n, pr, seed))
        total += mgr.sat_count(r)
        falses += r == 0
        env_total += mgr.sat_count(to_aff(mgr, r))
    print(f'{pr:3d} {2 ** -pr:9.5f} {total / draws / 2 ** n:9.5f} '
          f'{falses / draws:6.2f} {env_total / draws / 2 ** n:9.5f}')

# Sparse functions have small envelopes, dense ones fill the space.
