"""Wire format of instance files.

Only structure is checked here; references between sections are resolved
when the instance is built (see ``api.builder``).
"""

from pathlib import Path
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..errors import InstanceError
from ..utils.file_utils import read_instance_data

ScalarText = Union[str, int]
SparseVector = Dict[str, ScalarText]
BlockMatrix = List[List[SparseVector]]


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class FieldModel(_Section):
    kind: Literal["prime", "rational"]
    p: Optional[int] = Field(
        None, description="Characteristic, required for prime fields"
    )

    @model_validator(mode="after")
    def _p_matches_kind(self):
        if self.kind == "prime" and self.p is None:
            raise ValueError("prime field needs p")
        if self.kind == "rational" and self.p is not None:
            raise ValueError("rational field takes no p")
        return self


class SpaceModel(_Section):
    src: str
    dst: str
    basis: List[str] = Field(default_factory=list)


class CompositionModel(_Section):
    outer: str = Field(..., description="Basis id of b in b∘a")
    inner: str = Field(..., description="Basis id of a in b∘a")
    value: SparseVector


class CategoryModel(_Section):
    objects: List[str]
    homs: List[SpaceModel] = Field(default_factory=list)
    identities: Dict[str, SparseVector] = Field(default_factory=dict)
    composition: List[CompositionModel] = Field(default_factory=list)

    @model_validator(mode="after")
    def _unique_ids(self):
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("object ids must be unique")
        seen = set()
        for space in self.homs:
            for b in space.basis:
                if b in seen:
                    raise ValueError(f"basis id {b!r} is used twice")
                seen.add(b)
        return self


class LeftActionModel(_Section):
    morphism: str
    element: str
    value: SparseVector


class RightActionModel(_Section):
    element: str
    morphism: str
    value: SparseVector


class BimoduleModel(_Section):
    regular: bool = False
    elements: List[SpaceModel] = Field(default_factory=list)
    left: List[LeftActionModel] = Field(default_factory=list)
    right: List[RightActionModel] = Field(default_factory=list)

    @model_validator(mode="after")
    def _regular_is_exclusive(self):
        if self.regular and (self.elements or self.left or self.right):
            raise ValueError("a regular bimodule takes no elements or actions")
        seen = set()
        for space in self.elements:
            for x in space.basis:
                if x in seen:
                    raise ValueError(f"element id {x!r} is used twice")
                seen.add(x)
        return self


class DifferentiationMapModel(_Section):
    morphism: str
    value: SparseVector


class DifferentiationModel(_Section):
    maps: List[DifferentiationMapModel] = Field(default_factory=list)


class GroupModel(_Section):
    elements: List[str]
    unit: str
    table: List[List[str]] = Field(..., description="Row σ, column τ holds στ")

    @model_validator(mode="after")
    def _square_table(self):
        n = len(self.elements)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError(f"table must be {n}x{n}")
        return self


class ActionEntryModel(_Section):
    objects: Dict[str, str] = Field(default_factory=dict)
    morphisms: Dict[str, SparseVector] = Field(default_factory=dict)
    elements: Dict[str, SparseVector] = Field(default_factory=dict)


class ScalarFactorModel(_Section):
    s: str
    t: str
    value: ScalarText


class MorphismFactorModel(_Section):
    s: str
    t: str
    object: str
    value: SparseVector


class FactorsModel(_Section):
    scalar: List[ScalarFactorModel] = Field(default_factory=list)
    morphisms: List[MorphismFactorModel] = Field(default_factory=list)


class ElObjectRequest(_Section):
    name: str
    carrier: List[str]
    idempotent: Optional[BlockMatrix] = None
    element: BlockMatrix

    @model_validator(mode="after")
    def _square_blocks(self):
        n = len(self.carrier)
        for field_name in ("idempotent", "element"):
            blocks = getattr(self, field_name)
            if blocks is None:
                continue
            if len(blocks) != n or any(len(row) != n for row in blocks):
                got = f"{len(blocks)}x{len(blocks[0]) if blocks else 0}"
                raise ValueError(f"{field_name} is {got}, carrier needs {n}x{n}")
        return self


class SequenceRequest(_Section):
    a: Union[SparseVector, List[SparseVector]] = Field(
        ..., description="Components X -> Y_k"
    )
    b: Union[SparseVector, List[SparseVector]] = Field(
        ..., description="Components Y_k -> X'"
    )


class RadicalGeneratorsRequest(_Section):
    object: str
    side: Literal["source", "sink"] = "source"
    morphisms: List[str] = Field(default_factory=list)


class RequestsModel(_Section):
    el_objects: List[ElObjectRequest] = Field(default_factory=list)
    objects: List[str] = Field(default_factory=list)
    ar_sequences: List[SequenceRequest] = Field(default_factory=list)
    radical_generators: List[RadicalGeneratorsRequest] = Field(default_factory=list)
    zeta: Optional[ScalarText] = None
    subgroups: List[List[str]] = Field(default_factory=list)


class InstanceFile(_Section):
    """A whole instance: triple, group data and what to compute on it."""

    name: str = "instance"
    field: FieldModel
    category: CategoryModel
    bimodule: BimoduleModel = Field(default_factory=lambda: BimoduleModel(regular=True))
    differentiation: DifferentiationModel = Field(default_factory=DifferentiationModel)
    group: Optional[GroupModel] = None
    action: Dict[str, ActionEntryModel] = Field(default_factory=dict)
    factors: FactorsModel = Field(default_factory=FactorsModel)
    requests: RequestsModel = Field(default_factory=RequestsModel)

    def to_json(self) -> dict:
        return self.model_dump(mode="json", exclude_none=True)


def _location(loc) -> str:
    return ".".join(str(part) for part in loc) or "instance"


def parse_instance(source: Union[str, Path, dict]) -> InstanceFile:
    """Parse an instance from a path or an already loaded JSON object."""
    data = source if isinstance(source, dict) else read_instance_data(source)
    try:
        return InstanceFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise InstanceError(first["msg"], _location(first["loc"]))
