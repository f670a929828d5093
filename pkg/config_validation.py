"""Configuration loading and validation helpers for cactuskit."""
from __future__ import annotations

import os
from typing import Any, Dict, Mapping, Optional

import yaml

from graph_core import BaseGraphError, FORMATS

# Desk-scale limits of the exponential components.
DEFAULT_LIMITS: Dict[str, int] = {
    "hampath_max_n": 22,
    "domset_max_n": 24,
    "pip3_max_n": 21,
    "subset_max_edges": 24,
    "cactus_max_edges": 30,
    "berge_max_hyperedges": 96,
    "even_hole_max_n": 16,
    "path_power_max_n": 10,
    "spanning_combinations_max": 2_000_000,
}

METHODS = ("auto", "chordal", "qt", "domset", "oracle")

DEFAULT_SETTINGS: Dict[str, Any] = {
    "defaults": {
        "format": "edge-list",
        "method": "auto",
        "seed": 0,
        "self_check": False,
        "connected_only": True,
    },
    "limits": dict(DEFAULT_LIMITS),
    "logging": {
        "dir": "logs",
        "debug": False,
    },
}


class ConfigValidationError(BaseGraphError):
    pass


def load_yaml_file(file_path: str) -> Dict[str, Any]:
    """Load a small YAML file into a dict; raise if not found."""
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"Configuration file not found: {file_path}")
    with open(file_path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigValidationError(f"{file_path}: top level must be a mapping, got {type(data).__name__}")
    return data


def merge_settings(user: Optional[Mapping[str, Any]]) -> Dict[str, Any]:
    """Overlay user sections on the built-in defaults (one level deep)."""
    merged = {section: dict(values) for section, values in DEFAULT_SETTINGS.items()}
    for section, values in (user or {}).items():
        if section not in merged:
            raise ConfigValidationError(f"Unknown settings section '{section}'. Known: {', '.join(merged)}")
        if values is None:
            continue
        if not isinstance(values, dict):
            raise ConfigValidationError(f"Settings section '{section}' must be a mapping")
        merged[section].update(values)
    return merged


def validate_limits(limits: Mapping[str, Any]) -> Dict[str, int]:
    """Every limit must be a known name with a positive integer value."""
    checked: Dict[str, int] = {}
    for name, value in limits.items():
        if name not in DEFAULT_LIMITS:
            raise ConfigValidationError(
                f"Unknown limit '{name}'.\n"
                f"→ Known limits: {', '.join(sorted(DEFAULT_LIMITS))}"
            )
        if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
            raise ConfigValidationError(f"Limit '{name}' must be a positive integer, got {value!r}")
        checked[name] = value
    return checked


def parse_limit_override(text: str) -> Dict[str, int]:
    """'name=value' from the command line, validated like the settings file."""
    name, sep, raw = text.partition("=")
    if not sep:
        raise ConfigValidationError(f"--limit expects name=value, got {text!r}")
    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigValidationError(f"Limit '{name.strip()}' must be an integer, got {raw.strip()!r}")
    return validate_limits({name.strip(): value})


def validate_settings(settings: Mapping[str, Any], logger=None) -> Dict[str, Any]:
    """Validate merged settings early and loudly; returns the normalized dict."""
    merged = merge_settings(settings)
    try:
        defaults = merged["defaults"]
        if defaults["format"] not in FORMATS:
            raise ConfigValidationError(
                f"defaults.format must be one of {', '.join(FORMATS)}, got {defaults['format']!r}"
            )
        if defaults["method"] not in METHODS:
            raise ConfigValidationError(
                f"defaults.method must be one of {', '.join(METHODS)}, got {defaults['method']!r}"
            )
        if isinstance(defaults["seed"], bool) or not isinstance(defaults["seed"], int):
            raise ConfigValidationError(f"defaults.seed must be an integer, got {defaults['seed']!r}")
        for flag in ("self_check", "connected_only"):
            if not isinstance(defaults[flag], bool):
                raise ConfigValidationError(f"defaults.{flag} must be true or false, got {defaults[flag]!r}")

        merged["limits"] = validate_limits(merged["limits"])

        log_cfg = merged["logging"]
        if log_cfg["dir"] is not None and not isinstance(log_cfg["dir"], str):
            raise ConfigValidationError(f"logging.dir must be a path or null, got {log_cfg['dir']!r}")
        if not isinstance(log_cfg["debug"], bool):
            raise ConfigValidationError(f"logging.debug must be true or false, got {log_cfg['debug']!r}")
    except ConfigValidationError as e:
        if logger is not None:
            logger.error(f"[CONFIG] {e}")
        raise
    return merged


def load_settings(path: Optional[str] = None, logger=None) -> Dict[str, Any]:
    """Settings from path (or ./settings.yml when present), else the built-in defaults."""
    if path is None:
        path = "settings.yml" if os.path.exists("settings.yml") else None
    user = load_yaml_file(path) if path else {}
    if logger is not None and path:
        logger.debug(f"[CONFIG] Loaded settings from {path}")
    return validate_settings(user, logger)


def limit(limits: Optional[Mapping[str, int]], name: str) -> int:
    """Effective value of one limit, falling back to the default."""
    if limits and name in limits:
        return int(limits[name])
    return DEFAULT_LIMITS[name]
