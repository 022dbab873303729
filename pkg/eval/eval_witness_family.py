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

import argparse
import os
from dataclasses import asdict
from functools import partial
from multiprocessing import Pool

import pandas as pd
import tqdm
from omegaconf import OmegaConf

from facemonoid.utils.util import exhaustive_max_order, red_text, setup_logging
from facemonoid.witness.family import witness_report


def report_for(n: int, max_exhaustive_order: int):
    return witness_report(n, max_exhaustive_order=max_exhaustive_order)


def main(config):
    ns = list(range(config.witness.report_min_n, config.witness.report_max_n + 1))
    worker = partial(report_for, max_exhaustive_order=exhaustive_max_order(config))
    with Pool(config.run.num_workers) as pool:
        reports = list(tqdm.tqdm(pool.imap(worker, ns), total=len(ns)))

    os.makedirs(config.run.output_dir, exist_ok=True)
    for report in reports:
        with open(os.path.join(config.run.output_dir, f"B_{report.n}.yaml"), "w") as f:
            f.write(report.to_yaml())

    columns = ["n", "order_F", "order_B", "witness_edges", "hasse_is_path", "rank", "sweep_mode"]
    columns += ["proper_subsemigroups_checked", "all_proper_in_qv_L", "quotient_iso_ok"]
    df = pd.DataFrame([asdict(report) for report in reports])[columns]
    print(df.to_string(index=False))

    for report in reports:
        n = report.n
        if report.witness_pair != ["C_1", f"C_{2 * n}"] or report.witness_edges != 4 * n - 4:
            print(red_text(f"B_{n}: unexpected (CC') witness {report.cc_prime}"))
        if not (report.hasse_is_path and report.all_proper_in_qv_L and report.quotient_iso_ok):
            print(red_text(f"B_{n}: a structural claim failed, see {config.run.output_dir}/B_{n}.yaml"))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Machine check of the B_n witness family")
    parser.add_argument("--config_path", type=str, default="configs/eval/witness_family.yaml")
    args = parser.parse_args()

    setup_logging("INFO")
    config = OmegaConf.load(args.config_path)

    main(config)
