"""Exact affine Weyl group combinatorics for GL_n and GSp_2n and EO strata of basic ADLVs."""

from .adlv_sets import (
    admissible_set, classify_coxeter_type, emptiness, geq_S, is_nonempty,
    is_sigma_coxeter, kr_decompose, length_positive, max_ad_stable,
    s_adm_nonempty, sigma_support,
)
from .affine_weyl import AffineElement, AffineWeylGroup, Word, WordSyntaxError, parse_word
from .reduction import (
    CertificateStore, reduce_step, reduction_tree, stratification, stratum_shape,
)
from .root_datum import Family, RootDatum, build_root_datum

__all__ = [
    "AffineElement", "AffineWeylGroup", "Word", "WordSyntaxError", "parse_word",
    "Family", "RootDatum", "build_root_datum",
    "admissible_set", "classify_coxeter_type", "emptiness", "geq_S", "is_nonempty",
    "is_sigma_coxeter", "kr_decompose", "length_positive", "max_ad_stable",
    "s_adm_nonempty", "sigma_support",
    "CertificateStore", "reduce_step", "reduction_tree", "stratification", "stratum_shape",
]
