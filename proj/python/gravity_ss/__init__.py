"""Dict-level wrappers around the compiled gravity spectral sequence core."""

import json

from ._core import (
    GravityError,
    gravity_degree as _gravity_degree,
    skewer_degree as _skewer_degree,
    u_value as _u_value,
    sigma as _sigma,
    overlap_d,
    m_clamp,
    koszul_sign,
)
from . import _core

__all__ = [
    "GravityError",
    "geometry",
    "page",
    "page_csv",
    "cotor",
    "verify",
    "gen_config",
    "gravity_degree",
    "skewer_degree",
    "u_value",
    "sigma",
    "overlap_d",
    "m_clamp",
    "koszul_sign",
]


def _with_exit(packed):
    text, code = packed
    report = json.loads(text)
    report["exit_code"] = code
    return report


def geometry(config):
    """Degrees, u values, sigma values, and decomposability of a configuration."""
    return _with_exit(_core.geometry_report(json.dumps(config)))


def page(request, matrices=False):
    """E1 (and in e2 mode E2) of the gravity filtration for a sphere wedge."""
    return _with_exit(_core.page_report(json.dumps(request), matrices))


def page_csv(request):
    return _core.page_csv(json.dumps(request))


def cotor(coalgebra, max_s=5, max_degree=20, matrices=False):
    return _with_exit(_core.cotor_report(json.dumps(coalgebra), max_s, max_degree, matrices))


def verify(request):
    """d^2 = 0 on both routes, route agreement, and Euler conservation."""
    return _with_exit(_core.verify_report(json.dumps(request)))


def gen_config(n, j, seed=0):
    return json.loads(_core.gen_config(n, j, seed))


def gravity_degree(config):
    return _gravity_degree(json.dumps(config))


def skewer_degree(config):
    return _skewer_degree(json.dumps(config))


def u_value(config, s):
    return _u_value(json.dumps(config), s)


def sigma(config, s):
    return _sigma(json.dumps(config), s)
