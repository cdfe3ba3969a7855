import os

from dataclasses import asdict
from typing import Any, Dict, Optional

from loaders.input_loader import load_json_document
from models.engine_settings import EngineSettings
from utils.clogger import get_logger, parse_level
from utils.deserializer import Deserializer

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                                   "configs", "sectionflow.json")


class ConfigLoader:
    """
    Loads engine settings from a JSON config file.

    Args:
        config_file_path (str): Path to the configuration file. When omitted the bundled
            configs/sectionflow.json is used, and its absence only costs a warning.

    Attributes:
        config_file_path (str): The path to the configuration file.
        config_data (dict): The loaded configuration data with defaults applied.
        settings (EngineSettings): The validated settings.
    """
    DEFAULT_SETTINGS = asdict(EngineSettings())

    def __init__(self, config_file_path: Optional[str] = None):
        self._logger = get_logger("ConfigLoader")
        self._explicit_path = config_file_path is not None
        self.config_file_path = config_file_path or DEFAULT_CONFIG_PATH

        self.config_data = self._build_options(self.load_config())
        self.settings = self._build_settings()

        self._logger.info(f"configuration loaded from {self.config_file_path}")

    def load_config(self) -> Dict[str, Any]:
        """
        Load configuration data from the specified file.

        Returns:
            dict: The loaded configuration data.

        Raises:
            FileNotFoundError: If an explicitly given configuration file is not found.
            ValueError: If the file is not a JSON object.
        """
        try:
            data = load_json_document(self.config_file_path, "config")
        except FileNotFoundError:
            if self._explicit_path:
                raise
            self._logger.warning(f"bundled config not found: {self.config_file_path}, using defaults")
            return {}

        if not isinstance(data, dict):
            raise ValueError(f"Config file must hold a JSON object: {self.config_file_path}")
        return data

    def get_settings(self) -> EngineSettings:
        return self.settings

    def _build_options(self, options: Dict[str, Any]) -> Dict[str, Any]:
        """
        Fill in missing settings with their defaults.

        Args:
            options (Dict): User-defined settings.

        Returns:
            Dict[str, Any]: Settings with every key present.
        """
        for option, default in self.DEFAULT_SETTINGS.items():
            if options.get(option) is None:
                self._logger.warning(
                    f"missing setting in config: {self.config_file_path} missing option: {option}, defaulting to {default}"
                )
                options[option] = default
        return options

    def _build_settings(self) -> EngineSettings:
        settings = EngineSettings()
        unknown = Deserializer.deserialize(settings, self.config_data)
        for key in unknown:
            self._logger.warning(f"unknown setting ignored: {key}")

        parse_level(settings.log_level)
        if settings.json_indent < 0:
            raise ValueError(f"json_indent must be non-negative: {settings.json_indent}")
        if settings.max_witness_search < 1:
            raise ValueError(f"max_witness_search must be positive: {settings.max_witness_search}")
        if not settings.schema:
            raise ValueError("schema must be a non-empty string")
        return settings
