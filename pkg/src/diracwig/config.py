"""Flat key = value configuration with CLI overrides.

Precedence: CLI flags > config file > defaults.  Unknown keys and
malformed values raise ConfigError, which the CLI maps to exit code 1.
"""

__all__ = ["ConfigError", "DEFAULTS", "parse_config_file", "resolve", "format_defaults"]


class ConfigError(ValueError):
    pass


def _opt(caster):
    def parse(text):
        if isinstance(text, str) and text.strip().lower() in ("none", ""):
            return None
        return caster(text)

    return parse


def _symmetry(text):
    v = str(text).strip().upper()
    if v not in ("S", "A"):
        raise ValueError(f"symmetry must be S or A, got {text!r}")
    return v


# key -> (default, parser)
_SCHEMA = {
    "figure": (3, int),
    "m": (1.0, float),
    "kz2": (1.0, float),
    "eB": (1.0, float),
    "a": (1.0, float),
    "symmetry": ("S", _symmetry),
    "n": (1, int),
    "pol": (1, int),
    "t_min": (0.0, float),
    "t_max": (None, _opt(float)),
    "t_steps": (201, int),
    "s_min": (None, _opt(float)),
    "s_max": (None, _opt(float)),
    "k_min": (None, _opt(float)),
    "k_max": (None, _opt(float)),
    "ns": (256, int),
    "nk": (256, int),
    "l": (None, _opt(int)),
    "epsilon": (1e-6, float),
    "out": (None, _opt(str)),
}

DEFAULTS = {k: v for k, (v, _) in _SCHEMA.items()}


def parse_config_file(path):
    """Read a flat key = value file; '#' starts a comment."""
    raw = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, _, value = line.partition("=")
            raw[key.strip()] = value.strip()
    return raw


def resolve(cli_values=None, file_values=None):
    """Merge defaults, file values and CLI values into a typed config.

    Returns (config, explicit) where ``explicit`` is the set of keys the
    user actually set (used e.g. to keep raster resolutions independent of
    the quadrature default).
    """
    cfg = dict(DEFAULTS)
    explicit = set()
    for source in (file_values or {}, cli_values or {}):
        for key, value in source.items():
            if value is None:
                continue
            if key not in _SCHEMA:
                raise ConfigError(f"unknown configuration key {key!r}")
            _, parser = _SCHEMA[key]
            try:
                cfg[key] = parser(value)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"bad value for {key!r}: {value!r} ({exc})") from exc
            explicit.add(key)
    _check(cfg)
    return cfg, explicit


def _check(cfg):
    if cfg["eB"] <= 0:
        raise ConfigError("eB must be positive")
    if cfg["m"] < 0:
        raise ConfigError("m must be non-negative")
    if cfg["kz2"] < 0:
        raise ConfigError("kz2 must be non-negative")
    if cfg["a"] <= 0:
        raise ConfigError("a must be positive")
    if cfg["n"] < 0:
        raise ConfigError("n must be non-negative")
    if cfg["pol"] not in (1, 2, 3, 4):
        raise ConfigError("pol must be one of 1..4")
    if cfg["t_steps"] < 2:
        raise ConfigError("t_steps must be at least 2")
    if cfg["ns"] < 64 or cfg["nk"] < 64:
        raise ConfigError("ns and nk must be at least 64")
    if cfg["epsilon"] <= 0:
        raise ConfigError("epsilon must be positive")
    if cfg["l"] is not None and cfg["l"] < 0:
        raise ConfigError("l must be non-negative")


def format_defaults():
    lines = ["# diracwig configuration defaults (key = value)"]
    for key, value in DEFAULTS.items():
        lines.append(f"{key} = {'none' if value is None else value}")
    return "\n".join(lines) + "\n"
