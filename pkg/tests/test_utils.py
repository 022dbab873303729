# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from omegaconf import OmegaConf

from facemonoid.utils.util import exhaustive_max_order, load_config, red_text


def test_load_config_defaults():
    config = load_config()
    assert config.semigroup.subsemigroup_cap == 20
    assert config.qi.budget == 10**8
    assert exhaustive_max_order(config) == 13
    assert set(config.witness) == {"exhaustive_max_n"}


def test_load_config_override(tmp_path):
    path = tmp_path / "override.yaml"
    OmegaConf.save(OmegaConf.create({"oracle": {"source_cap": 27}}), path)
    config = load_config(str(path))
    assert config.oracle.source_cap == 27
    assert config.semigroup.subsemigroup_cap == 20


def test_red_text():
    assert red_text("x") == "\033[91mx\033[0m"
