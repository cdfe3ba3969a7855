import json

from typing import Any


def load_json_document(file_path: str, description: str = "input") -> Any:
    """
    Read a JSON document from disk.

    Args:
        file_path (str): Path to the file.
        description (str): What the file holds, used in error messages.

    Returns:
        Any: The decoded document.

    Raises:
        FileNotFoundError: If the file does not exist.
        ValueError: If the file is not valid JSON.
    """
    try:
        with open(file_path) as file:
            return json.load(file)
    except FileNotFoundError as e:
        raise FileNotFoundError(f"{description.capitalize()} file not found: {file_path}") from e
    except json.JSONDecodeError as e:
        raise ValueError(f"Failed to decode JSON in {description} file: {file_path}") from e
