from .base_check import BaseCheck
from .center_checks import (
    CenterCheck,
    CenterInvariantsCheck,
    SeparabilityCheck,
    SubgroupHeredityCheck,
)
from .character_checks import CharacterDualityCheck, ElementsDualityCheck
from .crossed_checks import CocycleAssociativityCheck, CrossedTripleCheck
from .decomposition_checks import (
    AlmostSplitCheck,
    CrossedRadicalCheck,
    ElDecomposeCheck,
    KrullSchmidtCheck,
    NuCheck,
    RadicalCheck,
    RadicalGeneratorsCheck,
    StabilizerReductionCheck,
)
from .element_checks import (
    AdjunctionCheck,
    ElHomCheck,
    InducedActionCheck,
    PhiCheck,
    PsiCheck,
    SummandCheck,
)
from .structure_checks import ActionCheck, FactorSystemCheck, GroupCheck, TripleCheck

__all__ = [
    "BaseCheck",
    "TripleCheck",
    "GroupCheck",
    "ActionCheck",
    "FactorSystemCheck",
    "CrossedTripleCheck",
    "CocycleAssociativityCheck",
    "ElHomCheck",
    "InducedActionCheck",
    "PhiCheck",
    "PsiCheck",
    "AdjunctionCheck",
    "SummandCheck",
    "CenterCheck",
    "CenterInvariantsCheck",
    "SeparabilityCheck",
    "SubgroupHeredityCheck",
    "RadicalCheck",
    "CrossedRadicalCheck",
    "KrullSchmidtCheck",
    "ElDecomposeCheck",
    "NuCheck",
    "StabilizerReductionCheck",
    "AlmostSplitCheck",
    "RadicalGeneratorsCheck",
    "CharacterDualityCheck",
    "ElementsDualityCheck",
]
