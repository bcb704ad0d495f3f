"""Python bindings for the matroid workbench core."""

from ._matroidwb import (
    Matroid,
    MatroidError,
    atlas,
    basis_poly,
    graphic,
    hpp,
    is_balanced,
    is_paving,
    is_sparse_paving,
    lattice_path,
    neg_corr,
    positroid_order,
    principal_extension,
    principal_truncation,
    rayleigh,
    rayleigh_diff,
    reference_fixtures,
    sparse_paving_family,
    strong_rayleigh,
    uniform,
    whirl,
)

__all__ = [name for name in dir() if not name.startswith("_")]
