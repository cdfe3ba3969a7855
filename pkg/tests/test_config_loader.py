import json
import os
import tempfile
import unittest

from loaders.config_loader import DEFAULT_CONFIG_PATH, ConfigLoader
from loaders.input_loader import load_json_document
from models.engine_settings import EngineSettings
from utils.clogger import CLogger, get_logger
from utils.deserializer import Deserializer


class TestConfigLoader(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def _write(self, name: str, content: str) -> str:
        path = os.path.join(self.tmp.name, name)
        with open(path, "w") as file:
            file.write(content)
        return path

    def test_bundled_config(self):
        self.assertTrue(os.path.exists(DEFAULT_CONFIG_PATH))
        settings = ConfigLoader().get_settings()
        self.assertEqual(settings.schema, "sectionflow/1")
        self.assertEqual(settings.log_level, "WARNING")

    def test_full_config(self):
        path = self._write("full.json", json.dumps({
            "schema": "sectionflow/1",
            "json_indent": 4,
            "log_level": "DEBUG",
            "output_directory": "reports",
            "max_witness_search": 500,
        }))
        settings = ConfigLoader(path).get_settings()
        self.assertEqual(settings.json_indent, 4)
        self.assertEqual(settings.log_level, "DEBUG")
        self.assertEqual(settings.output_directory, "reports")
        self.assertEqual(settings.max_witness_search, 500)

    def test_missing_options_default(self):
        path = self._write("partial.json", json.dumps({"json_indent": 0}))
        loader = ConfigLoader(path)
        self.assertEqual(loader.config_data["log_level"], "INFO")
        self.assertEqual(loader.settings.json_indent, 0)
        self.assertEqual(loader.settings.max_witness_search, EngineSettings().max_witness_search)

    def test_unknown_keys_are_ignored(self):
        path = self._write("extra.json", json.dumps({"json_indent": 3, "proxies": ["a"]}))
        settings = ConfigLoader(path).get_settings()
        self.assertEqual(settings.json_indent, 3)
        self.assertFalse(hasattr(settings, "proxies"))

    def test_missing_explicit_file(self):
        with self.assertRaises(FileNotFoundError):
            ConfigLoader(os.path.join(self.tmp.name, "absent.json"))

    def test_loggers_are_reused_by_name(self):
        ConfigLoader()
        registered = len(CLogger._instances)
        for _ in range(3):
            ConfigLoader()
        self.assertEqual(len(CLogger._instances), registered)
        self.assertIs(get_logger("ConfigLoader"), get_logger("ConfigLoader"))

    def test_invalid_json(self):
        with self.assertRaises(ValueError):
            ConfigLoader(self._write("broken.json", "{not json"))

    def test_not_an_object(self):
        with self.assertRaises(ValueError):
            ConfigLoader(self._write("list.json", "[1, 2]"))

    def test_invalid_values(self):
        for content in ({"json_indent": -1}, {"max_witness_search": 0}, {"log_level": "LOUD"},
                        {"schema": ""}, {"json_indent": "4"}):
            with self.assertRaises(ValueError, msg=content):
                ConfigLoader(self._write("bad.json", json.dumps(content)))


class TestInputLoader(unittest.TestCase):
    def test_errors_name_the_document(self):
        with self.assertRaises(FileNotFoundError) as ctx:
            load_json_document("/nonexistent/fibre.json", "fibre")
        self.assertIn("Fibre file not found", str(ctx.exception))


class TestDeserializer(unittest.TestCase):
    def test_sets_known_attributes(self):
        settings = EngineSettings()
        unknown = Deserializer.deserialize(settings, {"json_indent": 4, "output_directory": "out", "extra": 1})
        self.assertEqual(unknown, ["extra"])
        self.assertEqual(settings.json_indent, 4)
        self.assertEqual(settings.output_directory, "out")

    def test_rejects_wrong_types(self):
        with self.assertRaises(ValueError):
            Deserializer.deserialize(EngineSettings(), {"json_indent": True})
        with self.assertRaises(ValueError):
            Deserializer.deserialize(EngineSettings(), {"log_level": 10})

    def test_none_is_a_no_op(self):
        settings = EngineSettings()
        self.assertEqual(Deserializer.deserialize(settings, None), [])
        self.assertEqual(settings, EngineSettings())


if __name__ == '__main__':
    unittest.main()
