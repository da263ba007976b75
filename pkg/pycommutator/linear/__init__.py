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

from pycommutator.linear.fields import (
    GF,
    QQ,
    QQI,
    FieldDescriptor,
    FieldKind,
    GaussianRational,
    Residue,
    Scalar,
    format_rational,
    parse_rational,
)
from pycommutator.linear.matrix import (
    ExactMatrix,
    SubspaceBasis,
    Vector,
    column_space,
    intersect_subspaces,
    kernel_basis,
    random_matrix,
    rank,
    solve_linear,
    sum_subspaces,
)

__all__ = [
    "GF",
    "QQ",
    "QQI",
    "FieldDescriptor",
    "FieldKind",
    "GaussianRational",
    "Residue",
    "Scalar",
    "format_rational",
    "parse_rational",
    "ExactMatrix",
    "SubspaceBasis",
    "Vector",
    "column_space",
    "intersect_subspaces",
    "kernel_basis",
    "random_matrix",
    "rank",
    "solve_linear",
    "sum_subspaces",
]
