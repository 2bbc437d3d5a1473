"""Envelope engines behind one signature.

Every engine maps `(mgr, root)` to the envelope's root in the
same manager. Set-based engines convert at the boundary.
"""
from __future__ import annotations

from affenv.bdd import Manager
from affenv.envelope import to_aff
from affenv.models import (
    aff_fixpoint, aff_incremental, modelset_from_bdd, modelset_to_bdd,
    xor3_closure)


SET_ENGINES = {
    'models-fixpoint': aff_fixpoint,
    'models-incremental': aff_incremental,
    'brute': xor3_closure,
}
ENGINE_NAMES = ('robdd', *SET_ENGINES)


def envelope(engine: str, mgr: Manager, root: int,
             max_models: int | None = None) -> int:
    if engine == 'robdd':
        return to_aff(mgr, root)
    try:
        fn = SET_ENGINES[engine]
    except KeyError:
        raise ValueError(
            f'unknown engine {engine!r}; choose from {ENGINE_NAMES}') from None
    return modelset_to_bdd(mgr, fn(modelset_from_bdd(mgr, root), max_models))
