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

from dataclasses import dataclass

from pycommutator.misc import Singleton


@dataclass
class CommutatorSettings(metaclass=Singleton):
    pair_factorization_retries: int = 64
    ar_conjugation_retries: int = 256
    random_height: int = 16
    zero_diagonal_bound: int = 2

    oracle_max_elements: int = 10_000
    batch_threads: int = 4

    expansion_max_terms: int = 200_000
    schedule_scan_limit: int = 200_000

    debug: bool = False
    logfile: bool = False
