"""Charged multipartitions, abaci, level-rank transpose and sl_e crystals.

Thin wrapper over the compiled _cylabacus module.  Multipartitions and
charges travel as their text notation (``"3.1/-/1^3"``, ``"0,1,1"``);
structured results come back as JSON strings or plain tuples.
"""

from _cylabacus import (
    GuardError,
    NotationError,
    abacus_json,
    component_json,
    count_multipartitions,
    dual,
    dual_inverse,
    enumerate_multipartitions,
    from_abacus_json,
    is_cylindric,
    is_flotw,
    is_source,
    is_totally_periodic,
    periods,
    verify_cylindric_equivalence,
    verify_duality_transport,
    verify_periodicity_source,
)

__all__ = [
    "GuardError",
    "NotationError",
    "abacus_json",
    "component_json",
    "count_multipartitions",
    "dual",
    "dual_inverse",
    "enumerate_multipartitions",
    "from_abacus_json",
    "is_cylindric",
    "is_flotw",
    "is_source",
    "is_totally_periodic",
    "periods",
    "verify_cylindric_equivalence",
    "verify_duality_transport",
    "verify_periodicity_source",
]

__version__ = "0.1.0"
