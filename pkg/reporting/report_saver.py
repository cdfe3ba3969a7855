import aiofiles
import json
import os

from asyncio import Lock
from typing import Any, Dict

from utils.clogger import get_logger


class ReportSaver:
    """
    Writes JSON report documents to disk.
    """

    def __init__(self, output_directory: str, indent: int = 2):
        """
        :param output_directory: Directory that relative output paths are resolved against
        :param indent: JSON indentation, 0 for compact output
        """
        self._lock = Lock()
        self.output_directory = output_directory
        self.indent = indent

        self._save_func_mapping = {
            '.json': self.save_json,
            '.jsonl': self.append_jsonl,
        }

        self._logger = get_logger("ReportSaver")

    def resolve(self, file_path: str) -> str:
        if os.path.isabs(file_path) or os.path.dirname(file_path):
            return file_path
        return os.path.join(self.output_directory, file_path)

    async def save(self, file_path: str, doc: Dict[str, Any]) -> str:
        """
        Save a document, choosing the format from the file extension.

        :param file_path: Target path; a bare file name goes into the output directory
        :param doc: The document to save

        :return: The path written to
        """
        target = self.resolve(file_path)
        extension = os.path.splitext(target)[1].lower()
        save_func = self._save_func_mapping.get(extension)

        if not save_func:
            raise ValueError(f"Unknown report format: {extension or 'no extension'}, "
                             f"allowed formats are => {sorted(self._save_func_mapping)}")

        directory = os.path.dirname(target)
        if directory:
            os.makedirs(directory, exist_ok=True)

        await save_func(target, doc, self.indent, self._lock)
        self._logger.info(f"report saved to {target}")
        return target

    @staticmethod
    async def save_json(file_path: str, doc: Dict[str, Any], indent: int, lock: Lock) -> None:
        async with lock:
            async with aiofiles.open(file_path, mode='w') as file:
                await file.write(json.dumps(doc, indent=indent or None) + '\n')

    @staticmethod
    async def append_jsonl(file_path: str, doc: Dict[str, Any], indent: int, lock: Lock) -> None:
        """One compact document per line, appended."""
        async with lock:
            async with aiofiles.open(file_path, mode='a') as file:
                await file.write(json.dumps(doc) + '\n')
