from __future__ import annotations

from typing import TYPE_CHECKING

from congest_apsp.utils.errors import CongestError

if TYPE_CHECKING:
    from .models import Channel


class EngineError(CongestError):
    """Base class for violations of the round-synchronous contract."""


class BandwidthViolation(EngineError):
    """Raised when a channel carries more than one message in a round."""

    def __init__(self, phase: str, round_index: int, channel: Channel) -> None:
        self.phase = phase
        self.round_index = round_index
        self.channel = channel
        super().__init__(f"{phase}: round {round_index}: second message on channel {channel.u}->{channel.v}")


class NonNeighborSend(EngineError):
    """Raised when a node addresses a node it shares no link with."""

    def __init__(self, phase: str, round_index: int, channel: Channel) -> None:
        self.phase = phase
        self.round_index = round_index
        self.channel = channel
        super().__init__(f"{phase}: round {round_index}: {channel.u} is not adjacent to {channel.v}")


class PayloadTooWide(EngineError):
    """Raised when a message carries more than two integers."""


class ReceiveCollision(EngineError):
    """Raised when a node receives more messages in one round than the phase allows."""

    def __init__(self, phase: str, round_index: int, node: int, senders: list[int]) -> None:
        self.phase = phase
        self.round_index = round_index
        self.node = node
        self.senders = senders
        super().__init__(f"{phase}: round {round_index}: node {node} received from {senders}")


class InTreeViolation(ReceiveCollision):
    """Raised when a blocker's update messages do not travel along an in-tree."""


class BroadcastIncomplete(EngineError):
    """Raised when a dissemination phase ends before every node holds every value."""
