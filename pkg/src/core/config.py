# src/core/config.py
import os
import logging

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


# ::CONFIG_CLASS:: - 所有可调参数 (desk-scale 默认值)
class Config(BaseSettings):
    """Engine limits and defaults. Environment variables use the ``ICLOSURE_`` prefix."""

    model_config = SettingsConfigDict(
        env_prefix="ICLOSURE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Buchberger 资源上限: 超出即报错, 绝不返回错误答案
    max_pairs: int = Field(50_000, ge=1)
    max_terms: int = Field(20_000, ge=1)

    rmax: int = Field(5, ge=0, description="reduction-number search bound")
    kmax: int = Field(2, ge=1, description="colon ascent length")
    nmax: int = Field(3, ge=2, description="power-closure check bound")
    oracle_k: int = Field(12, ge=1, description="brute-force integrality oracle bound")

    unmixed_attempts: int = Field(20, ge=1)
    unmixed_coefficient_bound: int = Field(3, ge=1)
    default_seed: int = 0

    run_slow_tests: bool = False
    log_level: str = "INFO"
    config_yaml_path: str = "config.yaml"


# ::HELPER_FUNCTION:: - YAML + 环境变量加载配置
def load_config(config_path: str = "config.yaml", env_file: str | None = ".env") -> Config:
    """
    Loads configuration, prioritizing environment variables, then the .env file,
    then the ``settings:`` section of the YAML file, and finally defaults.
    """
    config_file_to_load = os.getenv("CONFIG_FILE", config_path)
    yaml_settings: dict = {}

    if os.path.exists(config_file_to_load):
        try:
            with open(config_file_to_load, "r", encoding="utf-8") as f:
                yaml_data = yaml.safe_load(f) or {}
            yaml_settings = yaml_data.get("settings", {}) or {}
            logger.info(f"Loaded configuration defaults from: {config_file_to_load}")
        except Exception as e:
            logger.warning(f"Could not load or parse YAML config '{config_file_to_load}': {e}")
            yaml_settings = {}
    else:
        logger.debug(f"Configuration file '{config_file_to_load}' not found. Using environment variables and defaults.")

    try:
        # env 与 .env 先加载; 它们显式设置的字段优先于 YAML
        from_env = Config(_env_file=env_file)
        explicit = from_env.model_dump(include=from_env.model_fields_set)
        merged = {k: v for k, v in yaml_settings.items() if k in Config.model_fields}
        merged.update(explicit)
        merged["config_yaml_path"] = config_file_to_load
        return Config(_env_file=env_file, **merged)
    except Exception as e:
        logger.error(f"Failed to initialize configuration: {e}", exc_info=True)
        return Config(_env_file=None)


_active_config: Config | None = None


def get_config() -> Config:
    """Process-wide configuration, loaded once."""
    global _active_config
    if _active_config is None:
        _active_config = load_config()
    return _active_config


def set_config(config: Config | None) -> None:
    """Replace the active configuration (None reloads on next use). Used by the CLI flags and by tests."""
    global _active_config
    _active_config = config
