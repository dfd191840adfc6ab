"""Prompt/completion training-pair datasets (JSON Lines, one object per line)."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..diagnostics import Diagnostic, error, warning

REQUIRED_FIELDS = ("prompt", "completion")


class EmptyDataset(ValueError):
    """Raised when no well-formed pair survives parsing."""


@dataclass(frozen=True)
class FinetunePair:
    prompt: str
    completion: str
    line_no: int  # 1-based source line, unique within a dataset

    def __post_init__(self):
        if not self.prompt.strip():
            raise ValueError("prompt must be nonempty")
        if not self.completion.strip():
            raise ValueError("completion must be nonempty")
        if self.line_no < 1:
            raise ValueError("line_no must be positive")


def parse_finetune_dataset(raw: str) -> tuple[list[FinetunePair], list[Diagnostic]]:
    """Parse JSONL text into pairs plus one diagnostic per problem line.

    Malformed lines are skipped; duplicate prompts are kept but flagged with
    a warning; unknown extra keys are flagged, pair kept. Raises
    :class:`EmptyDataset` when nothing parses.
    """
    pairs: list[FinetunePair] = []
    diagnostics: list[Diagnostic] = []
    seen_prompts: dict[str, int] = {}

    for line_no, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            diagnostics.append(error("bad_json", f"invalid JSON: {exc.msg}", line_no))
            continue
        if not isinstance(obj, dict):
            diagnostics.append(error("bad_json", "line is not a JSON object", line_no))
            continue

        missing = [f for f in REQUIRED_FIELDS if f not in obj]
        if missing:
            diagnostics.append(
                error("missing_field", f"missing field {', '.join(missing)}", line_no)
            )
            continue
        bad_type = [f for f in REQUIRED_FIELDS if not isinstance(obj[f], str)]
        if bad_type:
            diagnostics.append(
                error("bad_field", f"field {', '.join(bad_type)} must be a string", line_no)
            )
            continue
        if not obj["prompt"].strip() or not obj["completion"].strip():
            diagnostics.append(error("empty_field", "prompt and completion must be nonempty", line_no))
            continue

        extra = sorted(k for k in obj if k not in REQUIRED_FIELDS)
        if extra:
            diagnostics.append(
                warning("extra_keys", f"unknown keys ignored: {', '.join(extra)}", line_no)
            )

        prompt = obj["prompt"]
        if prompt in seen_prompts:
            diagnostics.append(
                warning(
                    "duplicate_prompt",
                    f"prompt duplicates line {seen_prompts[prompt]}",
                    line_no,
                )
            )
        else:
            seen_prompts[prompt] = line_no

        pairs.append(FinetunePair(prompt=prompt, completion=obj["completion"], line_no=line_no))

    if not pairs:
        raise EmptyDataset("no well-formed prompt/completion pairs in dataset")
    return pairs, diagnostics


def serialize_finetune_dataset(pairs: list[FinetunePair]) -> str:
    """Inverse of :func:`parse_finetune_dataset` for well-formed pairs."""
    lines = [
        json.dumps({"prompt": p.prompt, "completion": p.completion}, ensure_ascii=False)
        for p in pairs
    ]
    return "\n".join(lines) + "\n"


def load_finetune_dataset(path) -> tuple[list[FinetunePair], list[Diagnostic]]:
    with open(path, encoding="utf-8") as fh:
        return parse_finetune_dataset(fh.read())
