"""Completion providers: config, error taxonomy, and the two remote wire contracts.

The remote contract is the familiar bearer-token chat-completions shape:
POST ``{"model", "messages"}`` and read ``choices[0].message.content`` back.
Image questions ride the same envelope with a two-part final message.
"""

from __future__ import annotations

import base64
from dataclasses import dataclass, field

import httpx

from .conversation import Conversation, truncate_history
from .index import DEFAULT_SIMILARITY_THRESHOLD, Completion

MOCK = "mock"
REMOTE_TEXT = "remote_text"
REMOTE_IMAGE = "remote_image"

MAX_IMAGE_BYTES = 10 * 1024 * 1024
SUPPORTED_IMAGE_TYPES = ("image/png", "image/jpeg")


class ProviderError(Exception):
    """Base for provider failures; ``kind`` is the stable wire identifier."""

    kind = "provider_error"

    def __init__(self, message: str, retry_after: float | None = None):
        super().__init__(message)
        self.retry_after = retry_after


class ProviderTimeout(ProviderError):
    kind = "timeout"


class AuthFailure(ProviderError):
    kind = "auth_failure"


class RateLimited(ProviderError):
    kind = "rate_limited"


class MalformedResponse(ProviderError):
    kind = "malformed_response"


class UpstreamError(ProviderError):
    kind = "upstream_error"


class UnsupportedMediaType(ProviderError):
    kind = "unsupported_media_type"


class PayloadTooLarge(ProviderError):
    kind = "payload_too_large"


@dataclass(frozen=True)
class ProviderConfig:
    kind: str = MOCK
    endpoint_url: str = ""
    api_key: str = ""
    model_name: str = ""
    timeout: float = 30.0
    similarity_threshold: float = DEFAULT_SIMILARITY_THRESHOLD

    def __post_init__(self):
        if self.kind not in (MOCK, REMOTE_TEXT, REMOTE_IMAGE):
            raise ValueError(f"unknown provider kind {self.kind!r}")
        if self.kind != MOCK and not (self.endpoint_url and self.api_key):
            raise ValueError(f"{self.kind} provider requires endpoint_url and api_key")
        if not 0.0 <= self.similarity_threshold <= 1.0:
            raise ValueError("similarity_threshold must be within [0, 1]")


def _post_chat(cfg: ProviderConfig, messages: list[dict], transport=None) -> Completion:
    body = {"model": cfg.model_name, "messages": messages}
    headers = {"Authorization": f"Bearer {cfg.api_key}"}
    try:
        with httpx.Client(timeout=cfg.timeout, transport=transport) as client:
            resp = client.post(cfg.endpoint_url, json=body, headers=headers)
    except httpx.TimeoutException as exc:
        raise ProviderTimeout(f"no response within {cfg.timeout}s") from exc
    except httpx.HTTPError as exc:
        raise UpstreamError(f"transport failure: {exc}") from exc

    if resp.status_code in (401, 403):
        raise AuthFailure(f"authentication rejected (HTTP {resp.status_code})")
    if resp.status_code == 429:
        retry_after = None
        raw = resp.headers.get("retry-after")
        if raw is not None:
            try:
                retry_after = float(raw)
            except ValueError:
                retry_after = None
        raise RateLimited("rate limited by provider", retry_after=retry_after)
    if resp.status_code != 200:
        raise UpstreamError(f"unexpected HTTP {resp.status_code}")

    try:
        content = resp.json()["choices"][0]["message"]["content"]
    except (ValueError, KeyError, IndexError, TypeError) as exc:
        raise MalformedResponse(f"cannot locate choices[0].message.content: {exc}") from exc
    if not isinstance(content, str):
        raise MalformedResponse("completion content is not text")
    return Completion(content)


def conversation_messages(conv: Conversation) -> list[dict]:
    return [{"role": t.role, "content": t.text} for t in truncate_history(conv).turns]


def remote_complete(
    cfg: ProviderConfig, conv: Conversation, question: str, transport=None
) -> Completion:
    """Send the truncated history plus the question; return the assistant text.

    ``transport`` is an httpx transport hook for tests; None uses the network.
    """
    if cfg.kind != REMOTE_TEXT:
        raise ValueError("remote_complete requires a remote_text provider")
    messages = conversation_messages(conv)
    messages.append({"role": "user", "content": question})
    return _post_chat(cfg, messages, transport=transport)


def describe_image(
    cfg: ProviderConfig,
    image: bytes,
    media_type: str,
    question: str,
    transport=None,
) -> Completion:
    """Forward a base64 image and a question to the image provider."""
    if cfg.kind != REMOTE_IMAGE:
        raise ValueError("describe_image requires a remote_image provider")
    if media_type not in SUPPORTED_IMAGE_TYPES:
        raise UnsupportedMediaType(f"media type {media_type!r} not supported")
    if len(image) > MAX_IMAGE_BYTES:
        raise PayloadTooLarge(f"image exceeds {MAX_IMAGE_BYTES} bytes")
    content = [
        {"type": "text", "text": question},
        {"type": "image", "media_type": media_type,
         "data": base64.b64encode(image).decode("ascii")},
    ]
    return _post_chat(cfg, [{"role": "user", "content": content}], transport=transport)
