"""f-ideals: squarefree monomial ideals whose Stanley-Reisner and facet complexes share an f-vector."""
from importlib.resources import files

from .complexes import (
    AbcdRow, AbcdTable, FIdealReport, FVector,
    abcd_partition, f_ideal_report, facet_fvector, in_ideal, is_f_ideal, sr_fvector,
)
from .constructors import (
    ALGORITHMS, LEX, Construction, ConstructionTrace, SelectionPolicy,
    block_signature, construct_block_even, construct_block_odd, construct_mixed_even,
    construct_mixed_odd_a, construct_mixed_odd_b, construct_pure, newton_dual, residue_blocks,
)
from .density import (
    BoundReport, DensityEstimate, ExactCounts,
    bound_report, enumerate_exact, lp_lower_bound, sample_densities, trend_report, up_cover_bound,
)
from .errors import (
    ConstructionFailed, FIdealError, InvalidArgument, StructurallyImpossible,
    TooLarge, UndefinedBound, UnsupportedIdeal,
)
from .monomial import (
    GeneratorSet, Monomial, complement_monomial, divides, enumerate_monomials,
    minimalize, rank_monomial, unrank_monomial,
)
from .perfect import (
    DegreeSlice, SliceIndex, Verdict,
    is_lower_perfect, is_perfect, is_pure_f_ideal, is_upper_perfect, pure_f_ideal_verdict,
)


def fixture_path(name: str):
    """Path of a bundled example generator set, e.g. ``fixture_path("van_tuyl_printed")``."""
    return files(__name__) / "fixtures" / f"{name}.json"


def load_fixture(name: str) -> GeneratorSet:
    return GeneratorSet.from_json(fixture_path(name).read_text(encoding="utf-8"))


__all__ = [k for k in dir() if not k.startswith("_") and k != "files"]
