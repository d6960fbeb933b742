"""Finite magmas, neutrosophic extensions and Smarandache classification."""

from ._core import (
    DomainError,
    Error,
    IoError,
    Magma,
    ParamError,
    PreconditionError,
    ResourceLimitError,
    atlas_ln_csv,
    cauchy,
    check_law,
    classify_basic,
    cosets,
    cyclic,
    detect_s_kind,
    dihedral,
    direct_product,
    enumerate_closed_subsets,
    extend_tagged,
    is_closed,
    lagrange,
    ln,
    ln_count,
    run_corpus,
    sylow,
    symmetric_group,
    zmod_mult,
    zn,
    zn_full_neutro,
    zn_line_neutro,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
