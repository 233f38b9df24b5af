"""Exact curve counts on K3 and rational elliptic surfaces."""

from .counting import (
    CountQuery,
    Surface,
    count_by_components,
    count_closed_form,
    count_convolution,
    cross_validate,
)
from .modforms import k3_generating_series, re_generating_series

__all__ = [
    "CountQuery",
    "Surface",
    "count_by_components",
    "count_closed_form",
    "count_convolution",
    "cross_validate",
    "k3_generating_series",
    "re_generating_series",
]
