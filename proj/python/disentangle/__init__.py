"""Disentanglement of two-qubit pure states by local isotropic cloning."""

from ._core import (
    Alpha2Window,
    ClonerSpec,
    IsotropyFit,
    SeparabilityVerdict,
    broadcast_local_closed_form,
    broadcast_local_separable_window,
    broadcast_nonlocal_closed_form,
    broadcast_nonlocal_window,
    build_dilation,
    clone_qubit_via_dilation,
    compare_schemes,
    density_matrix,
    disentangle_by_double_cloning,
    disentangle_by_single_cloning,
    fidelity_from_eta,
    find_threshold,
    hermitian_eigenvalues,
    isotropy_fit,
    optimal_cloning_fidelity,
    optimal_cloning_fidelity_exact,
    partial_trace,
    partial_transpose,
    ppt_test,
    reduced_pair,
    split_inseparability_predicate,
    split_output_closed_form,
    sweep,
    tensor_product,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
