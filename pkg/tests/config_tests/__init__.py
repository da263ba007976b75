# ------------------------------------------------------------------------------
#  Copyright 2022 Upstream Data Inc                                            -
#                                                                              -
#  Licensed under the Apache License, Version 2.0 (the "License");             -
#  you may not use this file except in compliance with the License.            -
#  You may obtain a copy of the License at                                     -
#                                                                              -
#      http://www.apache.org/licenses/LICENSE-2.0                              -
#                                                                              -
#  Unless required by applicable law or agreed to in writing, software         -
#  distributed under the License is distributed on an "AS IS" BASIS,           -
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.    -
#  See the License for the specific language governing permissions and         -
#  limitations under the License.                                              -
# ------------------------------------------------------------------------------

import tempfile
import unittest
from dataclasses import asdict
from pathlib import Path

from pycommutator.config import EngineConfig
from pycommutator.errors import SchemaError
from pycommutator.settings import CommutatorSettings


class SettingsRestoringTest(unittest.TestCase):
    def setUp(self):
        self._saved = asdict(CommutatorSettings())

    def tearDown(self):
        settings = CommutatorSettings()
        for key, value in self._saved.items():
            setattr(settings, key, value)


class ConfigTest(SettingsRestoringTest):
    def test_toml_round_trip(self):
        config = EngineConfig(seed=5, max_retries=10, debug=True)
        loaded = EngineConfig().from_toml(config.as_toml())
        self.assertEqual(loaded, config)

    def test_yaml_round_trip(self):
        config = EngineConfig(ar_retries=3, random_height=4, batch_threads=2)
        loaded = EngineConfig().from_yaml(config.as_yaml())
        self.assertEqual(loaded, config)
        self.assertEqual(EngineConfig().from_yaml(""), EngineConfig())

    def test_unset_values_are_omitted(self):
        self.assertEqual(EngineConfig(seed=1).as_dict(), {"seed": 1})

    def test_bad_documents(self):
        cases = [
            ({"retries": 3}, "$.retries"),
            ({"seed": "1"}, "$.seed"),
            ({"seed": -1}, "$.seed"),
            ({"max_retries": True}, "$.max_retries"),
            ({"debug": 1}, "$.debug"),
        ]
        for data, path in cases:
            with self.subTest(msg=f"Rejecting config {data}", data=data):
                with self.assertRaises(SchemaError) as ctx:
                    EngineConfig().from_dict(data)
                self.assertEqual(ctx.exception.path, path)
        with self.assertRaises(SchemaError):
            EngineConfig().from_toml("seed = [")
        with self.assertRaises(SchemaError):
            EngineConfig().from_yaml("- just\n- a list")

    def test_files(self):
        with tempfile.TemporaryDirectory() as directory:
            toml_path = Path(directory, "run.toml")
            toml_path.write_text("seed = 9\nmax_retries = 12\n")
            self.assertEqual(EngineConfig().from_file(toml_path), EngineConfig(seed=9, max_retries=12))
            yaml_path = Path(directory, "run.yml")
            yaml_path.write_text("ar_retries: 7\n")
            self.assertEqual(EngineConfig().from_file(str(yaml_path)).ar_retries, 7)
            other = Path(directory, "run.json")
            other.write_text("{}")
            with self.assertRaises(SchemaError):
                EngineConfig().from_file(other)

    def test_apply(self):
        settings = EngineConfig(max_retries=3, ar_retries=5, random_height=2, batch_threads=1).apply()
        self.assertIs(settings, CommutatorSettings())
        self.assertEqual(settings.pair_factorization_retries, 3)
        self.assertEqual(settings.ar_conjugation_retries, 5)
        self.assertEqual(settings.random_height, 2)
        self.assertEqual(settings.batch_threads, 1)
        self.assertFalse(settings.debug)


if __name__ == "__main__":
    unittest.main()
