"""Exact forcing and anti-forcing invariants of hexagonal systems."""

from types import ModuleType as _ModuleType

from .altcycles import (AltCycle, CycleCapExceeded, alternating_hexagons, compatible,
                        enumerate_alt_cycles, is_linear_chain_interior, non_crossing)
from .forcing import (InvariantReport, MatchingAnalysis, anti_forcing_edges,
                      anti_forcing_number, clar_number, forcing_number, fries_number,
                      max_compatible_set, max_disjoint_cycles, sextet_count, spectra)
from .hexcore import (BudgetExceededError, HexSystem, InvalidSystemError, build,
                      enumerate_all_systems, gen_linear_chain, gen_named, gen_Rn,
                      gen_truncated_parallelogram, is_truncated_parallelogram)
from .matchings import (enumerate_matchings, has_perfect_matching, has_unique_pm, is_nice,
                        kekule_count, ring_matchings, rotate)
from .theorems import (Verdict, gen_Rn_validate, has_nice_coronene, has_nice_triphenylene,
                       verify, verify_af1, verify_main, verify_structure,
                       verify_triphenylene_theorem)

__all__ = sorted(name for name, obj in globals().items()
                 if not name.startswith("_") and not isinstance(obj, _ModuleType))
