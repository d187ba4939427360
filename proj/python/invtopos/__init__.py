"""Finite inverse semigroup actions vs functors on Loganathan's category."""

from ._invtopos import (
    InverseSemigroup,
    PartialAction,
    SetFunctor,
    ValidationError,
    beta_counit,
    closed_inverse_subsemigroups,
    coset_action,
    filters_in_e,
    filters_in_s,
    fixture_action,
    fixture_action_names,
    fixture_semigroup,
    fixture_semigroup_names,
    flatness_spotcheck,
    logan_summary,
    phi,
    psi,
    random_action,
    run_suite,
    schein_decompose,
    tensor_with_representable,
)

__all__ = [
    "InverseSemigroup",
    "PartialAction",
    "SetFunctor",
    "ValidationError",
    "beta_counit",
    "closed_inverse_subsemigroups",
    "coset_action",
    "filters_in_e",
    "filters_in_s",
    "fixture_action",
    "fixture_action_names",
    "fixture_semigroup",
    "fixture_semigroup_names",
    "flatness_spotcheck",
    "logan_summary",
    "phi",
    "psi",
    "random_action",
    "run_suite",
    "schein_decompose",
    "tensor_with_representable",
]
