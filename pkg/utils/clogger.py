import logging

from typing import Dict, Optional

_DEFAULT_FORMAT = "%(asctime)s| %(name)s | %(levelname)s | %(message)s"


class CLogger(logging.Logger):
    _instances: Dict[str, "CLogger"] = {}
    _global_level: Optional[int] = None

    def __init__(self, name: str, level: int = logging.INFO, handlers: Dict[logging.Handler, int] = None,
                 formatter: logging.Formatter = None):
        """
        Initialize a custom logger.

        :param name: The name of the logger.
        :param level: The logging level.
        :param handlers: Dictionary of handlers and their levels.
        :param formatter: The log formatter.
        """
        super().__init__(name, level)
        formatter = formatter or logging.Formatter(_DEFAULT_FORMAT)
        if handlers:
            for handler, h_level in handlers.items():
                handler.setLevel(h_level)
                handler.setFormatter(formatter)
                self.addHandler(handler)

        CLogger._instances[name] = self

    @classmethod
    def set_global_level(cls, level: int) -> None:
        """
        Apply a level to every logger created so far, to their handlers and to loggers created later.

        :param level: The logging level, e.g. logging.WARNING.
        """
        cls._global_level = level
        for logger in cls._instances.values():
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)


def get_logger(name: str, level: int = logging.INFO) -> CLogger:
    """
    Return the CLogger of that name, writing to stderr, building it on first use.

    :param name: The name shown in the log line.
    :param level: Level for both the logger and its stream handler, unless a global level was set.
    """
    existing = CLogger._instances.get(name)
    if existing is not None:
        return existing
    if CLogger._global_level is not None:
        level = CLogger._global_level
    return CLogger(name, level, {logging.StreamHandler(): level})


def parse_level(level_name: str) -> int:
    level = logging.getLevelName(str(level_name).upper())
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level: {level_name}")
    return level
