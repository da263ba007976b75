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

import unittest

from tests.algebra_tests import FunctionalTest, MatrixAlgebraTest, QuaternionTest, SchemaTest
from tests.cli_tests import EnvelopeTest, MainTest, RunTest
from tests.config_tests import ConfigTest
from tests.engine_tests import (
    CertificateTest,
    DecomposeTest,
    DivisionTest,
    MatrixFieldTest,
    MatrixQuaternionTest,
)
from tests.euler_tests import (
    BottTest,
    BundleSpecTest,
    EulerCertificateTest,
    ScheduleTest,
    SquareFreeTest,
    VilladsenTest,
)
from tests.hyperplane_tests import HyperplaneTest
from tests.linear_tests import FieldTest, MatrixTest, SubspaceTest
from tests.ncpoly_tests import CommutatorIdealTest, PolynomialTest
from tests.oracle_tests import CrossCheckTest, EnumerationTest, IndependentMultiplierTest

if __name__ == "__main__":
    # `coverage run --source pycommutator -m unittest discover` will give code coverage data
    unittest.main()
