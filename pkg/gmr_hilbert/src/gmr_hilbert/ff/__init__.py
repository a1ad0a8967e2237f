"""Finite-field verification of predicted Hilbert series."""

from gmr_hilbert.ff.field import EchelonForm, PrimeFieldMatrix
from gmr_hilbert.ff.instance import (
    Instance,
    PlantedInstance,
    gen_instance,
    planted_instance,
)
from gmr_hilbert.ff.macaulay import (
    MonomialIndex,
    PluckerBasis,
    SmEquation,
    SmTerm,
    expand_plucker,
    macaulay_matrix,
    macaulay_rank,
    plucker_basis,
    plucker_vars,
    sm_equations,
    x_monomials,
)
from gmr_hilbert.ff.verifier import (
    genericity_trials,
    predicted_coefficient,
    trial_seeds,
    verify_series,
)

__all__ = [
    "EchelonForm",
    "PrimeFieldMatrix",
    "Instance",
    "PlantedInstance",
    "gen_instance",
    "planted_instance",
    "MonomialIndex",
    "PluckerBasis",
    "SmEquation",
    "SmTerm",
    "expand_plucker",
    "macaulay_matrix",
    "macaulay_rank",
    "plucker_basis",
    "plucker_vars",
    "sm_equations",
    "x_monomials",
    "genericity_trials",
    "predicted_coefficient",
    "trial_seeds",
    "verify_series",
]
