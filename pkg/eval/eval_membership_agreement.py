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
import logging
import os
import time
from functools import partial
from multiprocessing import Pool

import pandas as pd
import tqdm
from omegaconf import OmegaConf

from facemonoid.arrangements.monoids import gen_L, gen_ZL
from facemonoid.data.corpus import CorpusEntry, named_corpus, random_corpus
from facemonoid.data.properties import structural_properties
from facemonoid.membership.certificates import separating_homs_cc, separating_homs_cc_prime
from facemonoid.membership.deciders import check_cc, check_cc_prime
from facemonoid.oracle.separation import in_qv_oracle
from facemonoid.semigroup.errors import NotAMemberError
from facemonoid.utils.util import red_text, setup_logging

logger = logging.getLogger(__name__)


def _certified(certify, S) -> bool:
    try:
        certify(S)
    except NotAMemberError:
        return False
    return True


def evaluate_entry(entry: CorpusEntry, oracle_cap: int, oracle_max_order: int) -> dict:
    S = entry.semigroup
    row = {"name": entry.name, "order": S.order}
    properties = structural_properties(S)
    row.update(properties)
    if not properties["lrb"]:
        return row

    row["cc"] = check_cc(S).satisfied
    row["cc_prime"] = check_cc_prime(S).satisfied
    row["certificate_L"] = _certified(separating_homs_cc, S)
    row["certificate_ZL"] = _certified(separating_homs_cc_prime, S)
    if S.order <= oracle_max_order:
        row["oracle_L"] = in_qv_oracle(S, gen_L(), cap=oracle_cap)
        row["oracle_ZL"] = in_qv_oracle(S, gen_ZL(), cap=oracle_cap)
        row["agree"] = row["cc"] == row["oracle_L"] and row["cc_prime"] == row["oracle_ZL"]
    row["certificates_agree"] = row["cc"] == row["certificate_L"] and row["cc_prime"] == row["certificate_ZL"]
    return row


def main(config):
    corpus = named_corpus(include_large=config.corpus.include_large)
    corpus += random_corpus(config.corpus.random_count, seed=config.corpus.seed)
    print(f"Corpus size: {len(corpus)}")

    worker = partial(evaluate_entry, oracle_cap=config.oracle.source_cap, oracle_max_order=config.oracle.max_order)
    start = time.time()
    with Pool(config.run.num_workers) as pool:
        # imap keeps corpus order so the CSV is reproducible
        rows = list(tqdm.tqdm(pool.imap(worker, corpus), total=len(corpus)))
    elapsed = time.time() - start

    df = pd.DataFrame(rows)
    os.makedirs(os.path.dirname(config.run.output_csv) or ".", exist_ok=True)
    df.to_csv(config.run.output_csv, index=False)

    checked = df[df["agree"].notna()] if "agree" in df else df.iloc[0:0]
    disagreements = checked[~checked["agree"].astype(bool)]
    verdicts = ("name", "order", "cc", "cc_prime", "oracle_L", "oracle_ZL", "certificate_L", "certificate_ZL")
    property_columns = [c for c in df.columns if c not in verdicts]
    failures = df[~df[property_columns].fillna(True).astype(bool).all(axis=1)]

    print(f"Decider/oracle comparisons: {len(checked)}, disagreements: {len(disagreements)}")
    print(f"Members of qv(L): {int(df['cc'].fillna(False).sum())}, of qv(ZL): {int(df['cc_prime'].fillna(False).sum())}")
    print(f"Elapsed: {elapsed:.1f}s, results written to {config.run.output_csv}")
    if len(disagreements) or len(failures):
        for name in sorted(set(disagreements["name"]) | set(failures["name"])):
            print(red_text(f"Check failed for {name}"))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Agreement of the (CC)/(CC') deciders with homomorphism enumeration")
    parser.add_argument("--config_path", type=str, default="configs/eval/membership_agreement.yaml")
    args = parser.parse_args()

    setup_logging("WARNING")
    config = OmegaConf.load(args.config_path)

    main(config)
