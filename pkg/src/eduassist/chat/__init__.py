from .conversation import Conversation, Turn, truncate_history
from .dataset import (
    EmptyDataset,
    FinetunePair,
    load_finetune_dataset,
    parse_finetune_dataset,
    serialize_finetune_dataset,
)
from .index import (
    FALLBACK_TEXT,
    Completion,
    PromptIndex,
    build_prompt_index,
    cosine,
    mock_complete,
)
from .providers import (
    AuthFailure,
    MalformedResponse,
    PayloadTooLarge,
    ProviderConfig,
    ProviderError,
    ProviderTimeout,
    RateLimited,
    UnsupportedMediaType,
    UpstreamError,
    describe_image,
    remote_complete,
)

__all__ = [
    "AuthFailure",
    "Completion",
    "Conversation",
    "EmptyDataset",
    "FALLBACK_TEXT",
    "FinetunePair",
    "MalformedResponse",
    "PayloadTooLarge",
    "PromptIndex",
    "ProviderConfig",
    "ProviderError",
    "ProviderTimeout",
    "RateLimited",
    "Turn",
    "UnsupportedMediaType",
    "UpstreamError",
    "build_prompt_index",
    "cosine",
    "describe_image",
    "load_finetune_dataset",
    "mock_complete",
    "parse_finetune_dataset",
    "remote_complete",
    "serialize_finetune_dataset",
    "truncate_history",
]
