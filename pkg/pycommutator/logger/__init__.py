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

import logging
import sys

from pycommutator.settings import CommutatorSettings

LOG_FORMAT = "%(pathname)s:%(lineno)d in %(funcName)s\n[%(levelname)s][%(asctime)s](%(name)s) - %(message)s"


def init_logger():
    """Configure the root logger from `CommutatorSettings`.

    Records go to `logfile.txt` when `logfile` is set, otherwise to standard
    error, so standard output stays reserved for JSON results. Widened
    searches emit `SearchWarning`; those are routed through logging too.
    """
    settings = CommutatorSettings()
    if settings.logfile:
        logging.basicConfig(filename="logfile.txt", filemode="a", format=LOG_FORMAT, datefmt="%x %X")
    else:
        logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT, datefmt="%x %X")
    logging.captureWarnings(True)

    _logger = logging.getLogger()
    _logger.setLevel(logging.DEBUG if settings.debug else logging.WARNING)

    return _logger


logger = init_logger()
