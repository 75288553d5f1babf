"""Inversion statistics and cycling bijections on standard Young tableaux."""

from .enumeration import (
    DistributionPolynomial,
    EquidistributionReport,
    brute_force_count,
    count_syt,
    distribution,
    enumerate_syt,
    equidistribution_report,
    normalize_shape,
    partitions_of,
    skew_catalog,
)
from .foata import (
    BridgeReport,
    bridge_check,
    foata,
    foata_inverse,
    format_permutation,
    parse_permutation,
    perm_inv,
    perm_inverse,
    perm_maj,
    perm_phi_direct,
    perm_phi_stages,
    read_staircase,
    staircase_shape,
    staircase_tableau,
)
from .inversion import (
    ABOVE,
    BELOW,
    AlgorithmError,
    BlockPartition,
    InversionPathSet,
    LatticePath,
    cinv_statistic,
    classify_side,
    comaj_map,
    forward_blocks,
    inv_code,
    inv_statistic,
    inversion_pairs,
    inversion_path,
    inversion_path_set,
    ne_blocks,
    ne_inversion_path,
    ne_inversion_path_set,
    phi,
    phi_k,
    phi_trace,
    psi,
    psi_k,
    psi_trace,
)
from .model import (
    Cell,
    Shape,
    ShapeError,
    Tableau,
    TableauError,
    conjugate,
    corner_cells,
    format_shape,
    make_tableau,
    parse_shape,
    parse_tableau_text,
    render,
    rotate_complement,
    tableau_from_json_dict,
    tableau_from_rows,
    tableau_to_json_dict,
    tableau_to_text,
    validate_filling,
)
from .stats import comaj, descent_set, maj

__all__ = [name for name in dir() if not name.startswith("_")]
