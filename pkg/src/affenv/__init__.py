"""Affine envelopes of Boolean functions represented as ROBDDs."""
from affenv.bdd import FALSE, TRUE, Manager
from affenv.envelope import is_affine, to_aff, translate, xor_close
from affenv.models import (
    ModelSet, aff_fixpoint, aff_incremental, modelset_from_bdd,
    modelset_to_bdd, xor3_closure)
from affenv.randgen import GenConfig, rand_bdd

__all__ = [
    'FALSE', 'TRUE', 'Manager',
    'to_aff', 'translate', 'xor_close', 'is_affine',
    'ModelSet', 'aff_fixpoint', 'aff_incremental', 'xor3_closure',
    'modelset_from_bdd', 'modelset_to_bdd',
    'GenConfig', 'rand_bdd',
]
