"""Configuration management for the verification engine."""

import os
import yaml
import copy
from typing import Any, Dict, Optional
import logging

logger = logging.getLogger(__name__)


class Config:
    """Configuration manager for the verification engine."""

    DEFAULT_CONFIG = {
        "engine": {
            "order": 6,
            "mode": "symbolic",
            "seed": 0,
            "levi_convention": "auto",
            "agreement_samples": 20
        },
        "suites": {
            "identities": {
                "rmax": 5,
                "mmax": 5,
                "nmax": 4
            },
            "structure": {
                "max_size": 24,
                "max_pattern_size": 18,
                "max_borel_rank": 8
            }
        },
        "report": {
            "format": "text",
            "out": None,
            "include_timing": True
        },
        "logging": {
            "level": "INFO"
        }
    }

    def __init__(self, config_path: Optional[str] = None):
        """Initialize configuration from file or defaults."""
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)

        if config_path and os.path.exists(config_path):
            self.load_from_file(config_path)
        elif config_path:
            logger.warning(f"Config file {config_path} not found, using defaults")
        elif os.path.exists("config.yaml"):
            self.load_from_file("config.yaml")
        else:
            logger.info("No config file found, using defaults")

    def load_from_file(self, path: str):
        """Load configuration from YAML file."""
        try:
            with open(path, 'r') as f:
                user_config = yaml.safe_load(f)
                if user_config:
                    self._merge_config(self.config, user_config)
                logger.info(f"Loaded configuration from {path}")
        except (OSError, yaml.YAMLError) as e:
            logger.warning(f"Failed to load config from {path}: {e}")

    def _merge_config(self, base: Dict[str, Any], user_config: Dict[str, Any]):
        """Merge user configuration into defaults, section by section."""
        for key, value in user_config.items():
            if isinstance(base.get(key), dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def get(self, *keys: str, default: Any = None) -> Any:
        """Get configuration value by key path."""
        value = self.config
        for key in keys:
            if isinstance(value, dict) and key in value:
                value = value[key]
            else:
                return default
        return value

    def set(self, *keys: str, value: Any):
        """Set configuration value by key path."""
        config = self.config
        for key in keys[:-1]:
            if key not in config:
                config[key] = {}
            config = config[key]
        config[keys[-1]] = value

    def save(self, path: str = "config.yaml"):
        """Save current configuration to file."""
        try:
            with open(path, 'w') as f:
                yaml.dump(self.config, f, default_flow_style=False, sort_keys=False)
            logger.info(f"Configuration saved to {path}")
        except OSError as e:
            logger.error(f"Failed to save config to {path}: {e}")
