from .errors import (
    BandwidthViolation,
    BroadcastIncomplete,
    EngineError,
    InTreeViolation,
    NonNeighborSend,
    PayloadTooWide,
    ReceiveCollision,
)
from .models import MAX_PAYLOAD, Channel, Envelope, Message, RoundReport, Tag, TraceRecord, compose_reports
from .program import NodeProgram, Outbox
from .runner import PhaseResult, run_phase
from .trace import JsonlWriter, TraceWriter

__all__ = [
    "MAX_PAYLOAD",
    "BandwidthViolation",
    "BroadcastIncomplete",
    "Channel",
    "EngineError",
    "Envelope",
    "InTreeViolation",
    "JsonlWriter",
    "Message",
    "NodeProgram",
    "NonNeighborSend",
    "Outbox",
    "PayloadTooWide",
    "PhaseResult",
    "ReceiveCollision",
    "RoundReport",
    "Tag",
    "TraceRecord",
    "TraceWriter",
    "compose_reports",
    "run_phase",
]
