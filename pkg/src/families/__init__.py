from src.families.density import density_report, predicted_count
from src.families.generators import (
    generate,
    generate_thm1,
    generate_thm2,
    generate_thm3,
    make_target,
    match_family,
)
from src.families.landau import landau_count, landau_report, mertens_window_sum, qualifying_cofactors
from src.families.models import Family, FamilyTarget, Witness
from src.families.sweep import sweep
from src.families.witness import verify_witness, witness

__all__ = [
    "Family",
    "FamilyTarget",
    "Witness",
    "density_report",
    "generate",
    "generate_thm1",
    "generate_thm2",
    "generate_thm3",
    "landau_count",
    "landau_report",
    "make_target",
    "match_family",
    "mertens_window_sum",
    "predicted_count",
    "qualifying_cofactors",
    "sweep",
    "verify_witness",
    "witness",
]
