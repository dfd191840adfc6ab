"""Service configuration: flat ``section.key = value`` file plus env overrides.

Every file key can be overridden by ``EDUASSIST_<SECTION>_<KEY>``. The
provider API key is env-only (``EDUASSIST_PROVIDER_API_KEY``) and rejected
if found in a file, so configs stay safe to commit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

ENV_PREFIX = "EDUASSIST"
API_KEY_ENV = "EDUASSIST_PROVIDER_API_KEY"

_KNOWN_KEYS = (
    "provider.kind",
    "provider.endpoint_url",
    "provider.model_name",
    "provider.timeout_secs",
    "mock.dataset_path",
    "mock.similarity_threshold",
    "analyzer.lexicon_dir",
    "server.bind_addr",
    "storage.data_dir",
)


class ConfigError(ValueError):
    pass


@dataclass
class ServiceConfig:
    provider_kind: str = "mock"
    endpoint_url: str = ""
    model_name: str = ""
    timeout_secs: float = 30.0
    api_key: str = ""
    dataset_path: str = ""  # empty -> bundled sample dataset
    similarity_threshold: float = 0.1
    lexicon_dir: str = ""  # empty -> bundled lexicon
    bind_addr: str = "127.0.0.1:8080"
    data_dir: str = "data"

    def host_port(self) -> tuple[str, int]:
        host, sep, port = self.bind_addr.rpartition(":")
        if not sep:
            raise ConfigError(f"server.bind_addr must be host:port, got {self.bind_addr!r}")
        try:
            return host, int(port)
        except ValueError:
            raise ConfigError(f"bad port in server.bind_addr: {port!r}") from None


def _parse_file(path: Path) -> dict[str, str]:
    values: dict[str, str] = {}
    for line_no, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{line_no}: expected key = value")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        value = raw.strip().strip("\"'")
        if key == "provider.api_key":
            raise ConfigError(
                f"{path}:{line_no}: provider.api_key must come from {API_KEY_ENV}, not the file"
            )
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"{path}:{line_no}: unknown config key {key!r}")
        values[key] = value
    return values


def _env_overrides(environ) -> dict[str, str]:
    values = {}
    for key in _KNOWN_KEYS:
        section, _, name = key.partition(".")
        env_name = f"{ENV_PREFIX}_{section.upper()}_{name.upper()}"
        if env_name in environ:
            values[key] = environ[env_name]
    return values


def _float(values: dict[str, str], key: str, fallback: float) -> float:
    if key not in values:
        return fallback
    try:
        return float(values[key])
    except ValueError:
        raise ConfigError(f"config key {key} must be a number, got {values[key]!r}") from None


def load_config(path: str | Path | None = None, environ=None) -> ServiceConfig:
    environ = os.environ if environ is None else environ
    values: dict[str, str] = {}
    if path is not None:
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"config file not found: {path}")
        values.update(_parse_file(path))
    values.update(_env_overrides(environ))

    cfg = ServiceConfig(
        provider_kind=values.get("provider.kind", "mock"),
        endpoint_url=values.get("provider.endpoint_url", ""),
        model_name=values.get("provider.model_name", ""),
        timeout_secs=_float(values, "provider.timeout_secs", 30.0),
        api_key=environ.get(API_KEY_ENV, ""),
        dataset_path=values.get("mock.dataset_path", ""),
        similarity_threshold=_float(values, "mock.similarity_threshold", 0.1),
        lexicon_dir=values.get("analyzer.lexicon_dir", ""),
        bind_addr=values.get("server.bind_addr", "127.0.0.1:8080"),
        data_dir=values.get("storage.data_dir", "data"),
    )
    if cfg.provider_kind not in ("mock", "remote_text"):
        raise ConfigError(
            f"provider.kind must be 'mock' or 'remote_text', got {cfg.provider_kind!r}"
        )
    if cfg.provider_kind == "remote_text" and not (cfg.endpoint_url and cfg.api_key):
        raise ConfigError(
            "provider.kind = remote_text requires provider.endpoint_url "
            f"and the {API_KEY_ENV} environment variable"
        )
    return cfg
