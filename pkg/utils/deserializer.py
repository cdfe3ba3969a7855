from typing import Any, Dict, List


class Deserializer:
    """
    Copies JSON values onto the matching attributes of an existing object.

    Only attributes the object already has are set, and a value must have the type of the
    attribute's current value (an int is accepted where a float is expected). Unknown keys are
    returned so the caller can report them.

    Example:
        settings = EngineSettings()
        Deserializer.deserialize(settings, {"json_indent": 4})
        settings.json_indent  # 4
    """

    @staticmethod
    def deserialize(obj: Any, json_data: Dict[str, Any]) -> List[str]:
        """
        Deserialize JSON data into an object in place.

        Args:
            obj (Any): The object whose attributes are updated.
            json_data (dict): The decoded JSON object.

        Returns:
            List[str]: Keys of json_data that match no attribute.

        Raises:
            ValueError: If a value has the wrong type for its attribute.
        """
        if json_data is None:
            return []

        fields = {attr: value for attr, value in vars(obj).items()
                  if not callable(value) and not attr.startswith("_")}

        unknown = []
        for key, value in json_data.items():
            if key not in fields:
                unknown.append(key)
                continue

            current = fields[key]
            expected = float if isinstance(current, float) else type(current)
            if current is not None and (isinstance(value, bool) != isinstance(current, bool)
                                        or not isinstance(value, (int, expected) if expected is float else expected)):
                raise ValueError(f"Setting {key} expects {expected.__name__}, got {value!r}")
            setattr(obj, key, value)

        return unknown
