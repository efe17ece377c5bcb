"""Python bindings for the nilcover C++ library."""

from ._core import (
    CapExceeded,
    ClosureCapExceeded,
    ConstructionFailure,
    ElementNotInGroup,
    Group,
    NilcoverError,
    ParseError,
    Timeout,
    a5_sylow_witness,
    analyze,
    build,
    check_condition,
    check_ids,
    classify_pair,
    clique_number,
    s5_witness,
    sl25_witness,
    sylow,
    to_dot,
    verify_paper,
    verify_witness,
)

__all__ = [
    "CapExceeded",
    "ClosureCapExceeded",
    "ConstructionFailure",
    "ElementNotInGroup",
    "Group",
    "NilcoverError",
    "ParseError",
    "Timeout",
    "a5_sylow_witness",
    "analyze",
    "build",
    "check_condition",
    "check_ids",
    "classify_pair",
    "clique_number",
    "omega",
    "satisfies",
    "s5_witness",
    "sl25_witness",
    "sylow",
    "to_dot",
    "verify_paper",
    "verify_witness",
]


def omega(spec, kind="nilpotent", **limits):
    """Clique number of the non-`kind` pair graph of the group named by `spec`."""
    group = spec if isinstance(spec, Group) else build(spec)
    return clique_number(group, kind, **limits)["omega"]


def satisfies(spec, kind, n, **limits):
    group = spec if isinstance(spec, Group) else build(spec)
    return check_condition(group, kind, n, **limits)["satisfied"]
