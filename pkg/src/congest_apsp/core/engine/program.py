from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable

    from congest_apsp.core.graph import NodeView

    from .models import Envelope, Message

type Outbox = Iterable[tuple[int, Message]]


class NodeProgram[S](ABC):
    """Per-node behaviour of one phase.

    A round is split in two halves. In :meth:`send` every node emits its outbox
    from its own state; the engine then delivers, and in :meth:`receive` every
    node consumes what arrived this round. Both halves may only touch the state
    object of the node they are called for.
    """

    @abstractmethod
    def send(self, node: NodeView, state: S, rnd: int) -> Outbox: ...

    @abstractmethod
    def receive(self, node: NodeView, state: S, rnd: int, inbox: list[Envelope]) -> None: ...
