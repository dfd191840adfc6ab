"""Conversation state with a word-count budget standing in for token limits."""

from __future__ import annotations

import time
import uuid
from dataclasses import dataclass, field, replace

from ..textproc import word_count

DEFAULT_WORD_BUDGET = 3000

USER = "user"
ASSISTANT = "assistant"


@dataclass(frozen=True)
class Turn:
    role: str
    text: str
    timestamp: float

    def words(self) -> int:
        return word_count(self.text)


@dataclass(frozen=True)
class Conversation:
    id: str
    turns: tuple[Turn, ...] = ()
    word_budget: int = DEFAULT_WORD_BUDGET

    @staticmethod
    def new(word_budget: int = DEFAULT_WORD_BUDGET) -> "Conversation":
        return Conversation(id=str(uuid.uuid4()), word_budget=word_budget)

    def append(self, role: str, text: str, timestamp: float | None = None) -> "Conversation":
        """Add a turn, enforcing strict user/assistant alternation from user."""
        if role not in (USER, ASSISTANT):
            raise ValueError(f"unknown role {role!r}")
        expected = USER if not self.turns else (
            ASSISTANT if self.turns[-1].role == USER else USER
        )
        if role != expected:
            raise ValueError(f"expected a {expected} turn, got {role}")
        turn = Turn(role, text, time.time() if timestamp is None else timestamp)
        return replace(self, turns=self.turns + (turn,))

    def total_words(self) -> int:
        return sum(t.words() for t in self.turns)


def truncate_history(conv: Conversation) -> Conversation:
    """Drop oldest whole turns until the budget holds.

    Turns are never split, and the most recent user turn survives even when
    it alone exceeds the budget. Idempotent.
    """
    turns = conv.turns
    if not turns:
        return conv
    last_user = max(
        (i for i, t in enumerate(turns) if t.role == USER), default=None
    )
    totals = [t.words() for t in turns]
    remaining = sum(totals)
    start = 0
    while start < len(turns) and remaining > conv.word_budget:
        if last_user is not None and start >= last_user:
            break
        remaining -= totals[start]
        start += 1
    if start == 0:
        return conv
    return replace(conv, turns=turns[start:])
