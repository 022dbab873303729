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

import logging
import os
from typing import Optional

from omegaconf import DictConfig, OmegaConf

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__), "..", "..", "configs", "facemonoid.yaml")


def load_config(config_path: Optional[str] = None) -> DictConfig:
    """configs/facemonoid.yaml, with the YAML at ``config_path`` merged on top when given."""
    config = OmegaConf.load(DEFAULT_CONFIG_PATH)
    if config_path is not None:
        config = OmegaConf.merge(config, OmegaConf.load(config_path))
    return config


def setup_logging(level: str = "INFO"):
    logging.basicConfig(
        format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
        datefmt="%m/%d/%Y %H:%M:%S",
        level=getattr(logging, str(level).upper(), logging.INFO),
    )


def exhaustive_max_order(config: DictConfig) -> int:
    """Largest B_n order swept exhaustively, from the configured n."""
    return 4 * config.witness.exhaustive_max_n - 3


CRED = "\033[91m"
CEND = "\033[0m"


def red_text(text: str) -> str:
    return f"{CRED}{text}{CEND}"
