"""Genus-one ramified Hitchin fibration: surfaces, fibers, and the Q-action."""

from .curve import CurveParams
from .surface import (
    ProperSurface,
    ImproperQuadrics,
    SO3Surface,
    FiberReport,
    SingularFiberSummary,
    hitchin_quartic,
    singular_fibers,
    analyze_fiber,
    q_action,
    improper_fiber,
    so3_fiber,
)
from .cotangent import (
    CotangentModel,
    cotangent_model,
    component_isomorphism,
    embed_quadric,
)

__all__ = [
    "CurveParams",
    "ProperSurface",
    "ImproperQuadrics",
    "SO3Surface",
    "FiberReport",
    "SingularFiberSummary",
    "hitchin_quartic",
    "singular_fibers",
    "analyze_fiber",
    "q_action",
    "improper_fiber",
    "so3_fiber",
    "CotangentModel",
    "cotangent_model",
    "component_isomorphism",
    "embed_quadric",
]
