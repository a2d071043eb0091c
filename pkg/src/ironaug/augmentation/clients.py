"""LLM transport: a minimal chat-completion interface with two adapters.

``ChatCompletionsClient`` talks to an OpenAI-style HTTPS endpoint (API key
read from an environment variable at call time, never stored). The mock
client is fully deterministic and offline; tests and desk-scale runs use it
exclusively.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass

import requests

from ..errors import IronAugError


class TransportError(IronAugError):
    """The completion call failed (network, HTTP status, bad body)."""


class MissingCredentials(IronAugError):
    """The configured API key environment variable is unset."""


@dataclass(frozen=True)
class LLMClientConfig:
    model_id: str = "gpt-4"
    temperature: float = 0.0
    max_attempts: int = 3
    backoff_base: float = 0.5
    request_timeout: float = 30.0
    max_concurrent_requests: int = 4

    def __post_init__(self):
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")
        if self.max_attempts < 1:
            raise ValueError(f"max_attempts must be >= 1, got {self.max_attempts}")
        if self.max_concurrent_requests < 1:
            raise ValueError(
                "max_concurrent_requests must be >= 1, "
                f"got {self.max_concurrent_requests}"
            )


class LLMClient:
    """Send one prompt, get one completion string back."""

    def __init__(self, config: LLMClientConfig | None = None):
        self.config = config or LLMClientConfig()

    def complete(self, prompt: str) -> str:
        raise NotImplementedError


class ChatCompletionsClient(LLMClient):
    """Adapter for an OpenAI-compatible ``/chat/completions`` endpoint."""

    def __init__(
        self,
        config: LLMClientConfig | None = None,
        base_url: str = "https://api.openai.com/v1",
        api_key_env: str = "OPENAI_API_KEY",
    ):
        super().__init__(config)
        self.base_url = base_url.rstrip("/")
        self.api_key_env = api_key_env

    def complete(self, prompt: str) -> str:
        api_key = os.environ.get(self.api_key_env)
        if not api_key:
            raise MissingCredentials(
                f"environment variable {self.api_key_env} is not set"
            )
        payload = {
            "model": self.config.model_id,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": self.config.temperature,
        }
        try:
            resp = requests.post(
                f"{self.base_url}/chat/completions",
                json=payload,
                headers={"Authorization": f"Bearer {api_key}"},
                timeout=self.config.request_timeout,
            )
        except requests.RequestException as exc:
            raise TransportError(f"request failed: {exc}") from exc
        if resp.status_code != 200:
            raise TransportError(
                f"HTTP {resp.status_code}: {resp.text[:200]}"
            )
        try:
            return resp.json()["choices"][0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            raise TransportError(f"malformed response body: {exc}") from exc


def _sentence_of(prompt: str) -> str:
    # Prompts attach the tweet after the last "Sentence: " marker.
    marker = "\nSentence: "
    if marker in prompt:
        return prompt.rsplit(marker, 1)[1]
    return prompt


class MockLLMClient(LLMClient):
    """Deterministic offline stand-in for the real endpoint.

    Modes:
      * ``expand`` (default): returns the sentence plus a fixed elaboration,
        so augmented text is longer than the original but reproducible.
      * ``echo``: returns the sentence unchanged.
    Explicit ``responses`` (prompt -> completion) win over the mode. Set
    ``fail_times`` (or ``always_fail``) to inject transport failures for
    retry/fallback tests. ``calls`` counts completed invocations and is
    thread-safe.
    """

    def __init__(
        self,
        config: LLMClientConfig | None = None,
        responses: dict[str, str] | None = None,
        mode: str = "expand",
        fail_times: int = 0,
        always_fail: bool = False,
    ):
        super().__init__(config)
        if mode not in ("expand", "echo"):
            raise ValueError(f"unknown mock mode {mode!r}")
        self.responses = dict(responses or {})
        self.mode = mode
        self.always_fail = always_fail
        self.calls = 0
        self._fail_remaining = fail_times
        self._lock = threading.Lock()

    def complete(self, prompt: str) -> str:
        with self._lock:
            self.calls += 1
            if self.always_fail:
                raise TransportError("injected failure (always_fail)")
            if self._fail_remaining > 0:
                self._fail_remaining -= 1
                raise TransportError("injected failure")
        if prompt in self.responses:
            return self.responses[prompt]
        sentence = _sentence_of(prompt)
        if self.mode == "echo":
            return sentence
        return (
            f"{sentence}, and the feeling behind those words is spelled out "
            "in full here, together with the situation that led up to them."
        )
