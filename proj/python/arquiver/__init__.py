"""Exact stable Auslander-Reiten quiver computations for the domestic finite
group schemes over SL(2): McKay quivers, Euclidean component windows with
module labels and almost split sequences, and tube ranks from ramification
data.

All results are plain dicts deserialized from the deterministic JSON emitted
by the C++ core.
"""

import json

try:
    from . import _arquiver
except ImportError:  # extension built out of tree (test setups)
    import _arquiver

__all__ = [
    "char_table",
    "mckay",
    "separated",
    "ar_component",
    "tubes",
    "check",
    "expected_affine_type",
    "tube_window",
]


def char_table(family, n=1, p=5, r=1):
    return json.loads(_arquiver.char_table_json(family, n, p, r))


def mckay(family, n=1, p=5, r=1):
    return json.loads(_arquiver.mckay_json(family, n, p, r))


def separated(family, n=1, p=5, r=1):
    return json.loads(_arquiver.separated_json(family, n, p, r))


def ar_component(family, n=1, p=5, r=1, l=0, seed=0, nu_min=-3, nu_max=3):
    return json.loads(
        _arquiver.ar_component_json(family, n, p, r, l, seed, nu_min, nu_max)
    )


def tubes(family, n=1, p=5, r=1):
    return json.loads(_arquiver.tubes_json(family, n, p, r))


def check(family, n=1, p=5, r=1):
    text, ok = _arquiver.check_json(family, n, p, r)
    return json.loads(text), ok


def expected_affine_type(family, n=1, p=5, r=1):
    return _arquiver.expected_affine_type(family, n, p, r)


def tube_window(e, L):
    return _arquiver.tube_window(e, L)
