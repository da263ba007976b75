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

from pycommutator.algebra.descriptor import (
    HAMILTON,
    AlgebraDescriptor,
    AlgebraKind,
    matrix_algebra,
    quaternion_algebra,
    quaternion_matrix_algebra,
    structure_constants,
)
from pycommutator.algebra.element import (
    AlgebraElement,
    LinearFunctional,
    SubfieldBasis,
    ad_operator,
    commutator,
    default_maximal_subfield,
    entry,
    from_entries,
    from_matrix,
    inverse,
    is_central,
    is_field,
    is_invertible,
    is_pure,
    kronecker_embed,
    left_multiplication,
    multiply,
    pure_part,
    quadratic_relation,
    quaternion_conjugate,
    quaternion_norm,
    random_element,
    reduced_trace,
    right_multiplication,
    subfield_containing,
    to_matrix,
)

__all__ = [
    "HAMILTON",
    "AlgebraDescriptor",
    "AlgebraKind",
    "matrix_algebra",
    "quaternion_algebra",
    "quaternion_matrix_algebra",
    "structure_constants",
    "AlgebraElement",
    "LinearFunctional",
    "SubfieldBasis",
    "ad_operator",
    "commutator",
    "default_maximal_subfield",
    "entry",
    "from_entries",
    "from_matrix",
    "inverse",
    "is_central",
    "is_field",
    "is_invertible",
    "is_pure",
    "kronecker_embed",
    "left_multiplication",
    "multiply",
    "pure_part",
    "quadratic_relation",
    "quaternion_conjugate",
    "quaternion_norm",
    "random_element",
    "reduced_trace",
    "right_multiplication",
    "subfield_containing",
    "to_matrix",
]
