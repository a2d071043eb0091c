"""The three fixed expansion prompts and prompt assembly.

The templates are frozen strings; tests compare them against golden files,
so any edit here is a deliberate contract change. The ``none`` strategy is a
pass-through and never produces a prompt.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import IronAugError

EMOTION_TEMPLATE = (
    "Expand this sentence to retain the original meaning and expand the "
    "emotion words, format: sentence."
)
CONTEXT_TEMPLATE = (
    "Expand this sentence to retain the original meaning and expand the "
    "background of the tweet, format: sentence."
)
COMPREHENSIVE_TEMPLATE = (
    "Expand this sentence to retain the original meaning, including "
    "elaborating on emotions, and expand the background of the tweet, "
    "format: sentence."
)


class EmptyText(IronAugError):
    """Prompt requested for empty or whitespace-only text."""


class UnknownStrategy(IronAugError):
    """Strategy identifier outside the fixed set."""


@dataclass(frozen=True)
class PromptStrategy:
    id: str
    template: str


STRATEGY_NONE = PromptStrategy("none", "")
STRATEGY_EMOTION = PromptStrategy("emotion", EMOTION_TEMPLATE)
STRATEGY_CONTEXT = PromptStrategy("context", CONTEXT_TEMPLATE)
STRATEGY_COMPREHENSIVE = PromptStrategy("comprehensive", COMPREHENSIVE_TEMPLATE)

STRATEGIES: dict[str, PromptStrategy] = {
    s.id: s
    for s in (
        STRATEGY_NONE,
        STRATEGY_EMOTION,
        STRATEGY_CONTEXT,
        STRATEGY_COMPREHENSIVE,
    )
}


def get_strategy(strategy_id: str) -> PromptStrategy:
    try:
        return STRATEGIES[strategy_id]
    except KeyError:
        raise UnknownStrategy(
            f"unknown strategy {strategy_id!r}; expected one of "
            f"{sorted(STRATEGIES)}"
        ) from None


def build_prompt(strategy: PromptStrategy, text: str) -> str:
    """Attach a tweet to a strategy template.

    Layout is ``<template>\\nSentence: <text>`` so both the instruction and
    the original text survive verbatim for auditing.
    """
    if strategy.id == "none":
        raise UnknownStrategy("the pass-through strategy has no prompt")
    if not text or not text.strip():
        raise EmptyText("cannot build a prompt for empty text")
    return f"{strategy.template}\nSentence: {text}"
