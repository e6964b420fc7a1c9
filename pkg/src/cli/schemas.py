"""
JSON documents written and read by the command line.

Field elements are integer codes; large codeword counts are decimal strings.
"""
from typing import Any, Optional

from pydantic import BaseModel, Field

from src.core.exceptions import InvalidSpecError
from src.gf.field import FieldCtx, field_create
from src.tgrs.spec import CodeSpec


class FieldModel(BaseModel):
    p: int = Field(ge=2)
    m: int = Field(ge=1)
    modulus: Optional[list[int]] = None

    @classmethod
    def from_ctx(cls, ctx: FieldCtx) -> "FieldModel":
        return cls(p=ctx.p, m=ctx.m, modulus=list(ctx.modulus))

    def to_ctx(self) -> FieldCtx:
        ctx = field_create(self.p, self.m)
        if self.modulus is not None and tuple(self.modulus) != ctx.modulus:
            raise InvalidSpecError(
                "modulus differs from the canonical one",
                {"given": self.modulus, "canonical": list(ctx.modulus)}
            )
        return ctx


class CodeSpecModel(BaseModel):
    """CodeSpec document; v defaults to all ones."""

    field: FieldModel
    alpha: list[int]
    v: Optional[list[int]] = None
    eta: int = 1
    k: int
    extended: bool = True

    @classmethod
    def from_spec(cls, spec: CodeSpec) -> "CodeSpecModel":
        return cls.model_validate(spec.to_dict())

    def to_spec(self) -> CodeSpec:
        return CodeSpec.from_codes(self.field.to_ctx(), self.alpha, self.v, self.eta, self.k, self.extended)


class CodeDocument(BaseModel):
    spec: CodeSpecModel
    length: int
    dimension: int
    generator: list[list[int]]
    parity_check: Optional[list[list[int]]] = None


class ClassificationDocument(BaseModel):
    classification: str
    a_min: str
    subset_count: int
    target: int
    witness_subset: Optional[list[int]] = None
    verified: bool = False


class DistributionDocument(BaseModel):
    length: int
    dimension: int
    q: int
    classification: str
    min_distance: int
    counts: list[str]


class WeightsDocument(BaseModel):
    spec: CodeSpecModel
    code: DistributionDocument
    dual: DistributionDocument
    verified: bool = False


class CertificateDocument(BaseModel):
    """Certificate in the {type, lambda?, witness_poly?, verified} shape."""

    type: str
    verified: bool = True
    details: dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict) -> "CertificateDocument":
        details = {key: value for key, value in data.items() if key not in ("type", "verified")}
        return cls(type=data["type"], verified=data.get("verified", True), details=details)


class SchurDocument(BaseModel):
    square_dimension: int
    full_space: bool
    certificate: Optional[CertificateDocument] = None


class ConstructionDocument(BaseModel):
    construction: str
    spec: CodeSpecModel
    length: int
    dimension: int
    certificate: CertificateDocument
    classification: Optional[str] = None
    a_min: Optional[str] = None


class CensusDocument(BaseModel):
    q: int
    k: int
    n: int
    total: int
    tallies: dict[str, int]
    witnesses: dict[str, CodeSpecModel]


class RefutationDocument(BaseModel):
    q: int
    k: int
    n: int
    gram_classes_checked: int
    specs_covered: int
    found: Optional[CodeSpecModel] = None
    note: Optional[str] = None
    summary: str


class FieldDocument(BaseModel):
    field: FieldModel
    order: int
    generator: int
    elements: Optional[list[tuple[int, str]]] = None
