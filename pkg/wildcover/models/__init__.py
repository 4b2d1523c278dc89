from wildcover.models.asw import ASClass, reduce
from wildcover.models.field import FieldCtx, FieldElement, field
from wildcover.models.poly import Poly
from wildcover.models.additive import TwistedPoly

__all__ = ["ASClass", "reduce", "FieldCtx", "FieldElement", "field", "Poly", "TwistedPoly"]
