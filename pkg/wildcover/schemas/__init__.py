from wildcover.schemas.schemas import (
    FamilyDirective, SpecFile,
    CheckResponse,
    ReduceResponse, SigmaResponse, PalindromicResponse,
    AdaptedBasisResponse, RamificationResponse, RepMatrixResponse, VerifyResponse, InvariantsResponse,
    AutResponse, GroupResponse,
    IsoResponse
)

__all__ = [
    "FamilyDirective", "SpecFile",
    "CheckResponse",
    "ReduceResponse", "SigmaResponse", "PalindromicResponse",
    "AdaptedBasisResponse", "RamificationResponse", "RepMatrixResponse", "VerifyResponse", "InvariantsResponse",
    "AutResponse", "GroupResponse",
    "IsoResponse"
]
