import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from src.core.config import Config, get_config, load_config, set_config
from tests.support import use_default_config


def tearDownModule():
    use_default_config()


class LoadConfigTests(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)
        env = {k: v for k, v in os.environ.items() if not k.startswith("ICLOSURE_") and k != "CONFIG_FILE"}
        self.env = mock.patch.dict(os.environ, env, clear=True)
        self.env.start()

    def tearDown(self):
        self.env.stop()
        self.tmp.cleanup()

    def write(self, name, text):
        path = self.dir / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    def test_defaults_without_files(self):
        cfg = load_config(str(self.dir / "missing.yaml"), env_file=None)
        self.assertEqual(cfg.rmax, 5)
        self.assertEqual(cfg.max_pairs, 50_000)
        self.assertFalse(cfg.run_slow_tests)

    def test_yaml_settings_section(self):
        path = self.write("config.yaml", "settings:\n  rmax: 7\n  kmax: 3\n  unknown_key: 1\nother: {}\n")
        cfg = load_config(path, env_file=None)
        self.assertEqual((cfg.rmax, cfg.kmax), (7, 3))
        self.assertEqual(cfg.config_yaml_path, path)

    def test_environment_beats_yaml(self):
        path = self.write("config.yaml", "settings:\n  rmax: 7\n  kmax: 3\n")
        os.environ["ICLOSURE_RMAX"] = "9"
        cfg = load_config(path, env_file=None)
        self.assertEqual((cfg.rmax, cfg.kmax), (9, 3))

    def test_dotenv_file(self):
        path = self.write("config.yaml", "settings:\n  kmax: 3\n")
        env_file = self.write(".env", "ICLOSURE_KMAX=4\nICLOSURE_RUN_SLOW_TESTS=true\n")
        cfg = load_config(path, env_file=env_file)
        self.assertEqual(cfg.kmax, 4)
        self.assertTrue(cfg.run_slow_tests)

    def test_config_file_variable(self):
        path = self.write("other.yaml", "settings:\n  nmax: 6\n")
        os.environ["CONFIG_FILE"] = path
        cfg = load_config(str(self.dir / "missing.yaml"), env_file=None)
        self.assertEqual(cfg.nmax, 6)

    def test_broken_yaml_falls_back(self):
        path = self.write("config.yaml", "settings: [unclosed\n")
        with self.assertLogs("src.core.config", level="WARNING"):
            cfg = load_config(path, env_file=None)
        self.assertEqual(cfg.rmax, 5)


class ActiveConfigTests(unittest.TestCase):
    def test_set_and_get(self):
        cfg = Config(_env_file=None, rmax=2)
        set_config(cfg)
        self.assertIs(get_config(), cfg)
        set_config(None)
        self.assertIsNot(get_config(), cfg)


if __name__ == "__main__":
    unittest.main()
