"""Validated enclosures for the Blasius boundary-layer profile.

Thin wrapper over the C++ core: the heavy lifting (exact rational interval
arithmetic, the certificate pipeline, the shooting oracle) lives in `_core`.
"""

import json as _json

from ._core import (  # noqa: F401
    __version__,
    c2_triple,
    erfc_enclosure,
    eval_point,
    range_bound,
    shooting,
)
from ._core import certify_json as _certify_json


def certify(T="", c_max="", rho0="", eps_inner=(), digits=0):
    """Run the full certificate pipeline; returns the certificate as a dict.

    Arguments are decimal or fraction strings (e.g. T="1.99", rho0="5e-5");
    empty strings keep the defaults.
    """
    return _json.loads(_certify_json(T=T, c_max=c_max, rho0=rho0,
                                     eps_inner=list(eps_inner), digits=digits))


def wall_stress(**config):
    """Certified enclosure of the wall stress, as (lo, hi) float pair."""
    cert = certify(**config)
    for section in cert["sections"]:
        if section["name"] == "wall-stress":
            for item in section["items"]:
                if item["name"] == "fpp0":
                    return float(item["computed"]["lo"]), float(item["computed"]["hi"])
    raise RuntimeError("certificate has no wall-stress enclosure")
