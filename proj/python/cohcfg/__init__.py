"""Coherent configurations: WL closure, Cartan schemes, analysis, recognition."""

from ._core import (  # noqa: F401
    analyze,
    aut_order,
    base_number,
    build_cartan,
    iso,
    lie_bound,
    lie_order,
    m_extension,
    point_extension,
    recognize,
    verify,
    wl_close,
)

__version__ = "0.1.0"
