"""Pydantic schemas for spec files and command reports."""
from typing import Optional
from pydantic import BaseModel, Field


# Spec file schemas
class FamilyDirective(BaseModel):
    variant: str = Field(..., min_length=1)
    n: int = Field(..., ge=1)
    values: dict[str, str] = Field(default_factory=dict)


class SpecFile(BaseModel):
    p: int = Field(..., ge=2)
    m: int = Field(default=1, ge=1)
    modulus: Optional[list[int]] = None
    functions: list[str] = Field(default_factory=list)
    v_auto: bool = False
    v_basis: list[str] = Field(default_factory=list)
    family: Optional[FamilyDirective] = None


# Check schemas
class CheckResponse(BaseModel):
    tag: str
    passed: bool
    detail: str = ""

    class Config:
        from_attributes = True


# Algebra schemas
class ReduceResponse(BaseModel):
    input: str
    reduced: str
    const_class: int = Field(..., ge=0)
    degree: int


class SigmaResponse(BaseModel):
    input: str
    level: int = Field(..., ge=0)
    dp_order: int


class PalindromicResponse(BaseModel):
    input: str
    additive: str
    ad: str
    s: int = Field(..., ge=1)
    zero_set_degree: Optional[int] = None


# Cover schemas
class AdaptedBasisResponse(BaseModel):
    functions: list[str]
    degrees: list[int]
    jumps: list[int]
    dims: list[int]


class RamificationResponse(BaseModel):
    different: int
    genus: int = Field(..., ge=0)
    order: int = Field(..., ge=1)
    ratio: Optional[str] = None
    ratio_reduced: Optional[str] = None
    ratio_genus_squared: Optional[str] = None
    trivial_family_bound: str
    is_big_action: bool
    hurwitz_ok: bool
    degrees: list[int]
    jumps: list[int]


class RepMatrixResponse(BaseModel):
    y: str
    entries: list[list[int]]


class VerifyResponse(BaseModel):
    p: int
    n: int
    v: int
    ambient: str
    passed: bool
    basis: AdaptedBasisResponse
    ramification: RamificationResponse
    matrices: list[RepMatrixResponse]
    levels_maximal: bool
    subdiagonals_nonzero: bool
    checks: list[CheckResponse]


class InvariantsResponse(BaseModel):
    p: int
    n: int
    v: int
    ambient: str
    levels: list[int]
    basis: AdaptedBasisResponse
    ramification: RamificationResponse
    stable_translations: Optional[int] = None
    candidates: Optional[int] = None


# Group schemas
class AutResponse(BaseModel):
    y: str
    M: list[list[int]]
    P: list[str]
    Z: list[str]


class GroupResponse(BaseModel):
    order: int = Field(..., ge=1)
    exponent: int = Field(..., ge=1)
    center_order: int = Field(..., ge=1)
    center_generators: list[AutResponse]
    derived_order: int = Field(..., ge=1)
    lambda_dims: list[int]
    generators: int
    checks: list[CheckResponse]
    element_orders: Optional[list[int]] = None


# Family schemas
class IsoResponse(BaseModel):
    isomorphic: bool
    first: dict[str, str]
    second: dict[str, str]
