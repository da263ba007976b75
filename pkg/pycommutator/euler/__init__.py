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

from pycommutator.euler.bott import (
    SpherePoint,
    bott_eval,
    is_projection,
    tensor_projection_eval,
)
from pycommutator.euler.cohomology import (
    BundleSpec,
    Conclusion,
    EulerCertificate,
    Generator,
    SquareFreePolynomial,
    certify_cm_failure,
    certify_subequivalence_obstruction,
    euler_class_of_tensor,
    euler_direct_sum_power,
    euler_witness,
    sq_mul,
    sq_pow,
)
from pycommutator.euler.villadsen import (
    PointSchedule,
    StageEmbedding,
    VilladsenPlan,
    dense_point,
    dense_point_schedule,
    first_hits,
    first_stage_realizing,
    minimal_sphere_counts,
    slot_indices,
    sphere_cells,
    spread,
    unpair,
    villadsen_plan,
)

__all__ = [
    "BundleSpec",
    "Conclusion",
    "EulerCertificate",
    "Generator",
    "PointSchedule",
    "SpherePoint",
    "SquareFreePolynomial",
    "StageEmbedding",
    "VilladsenPlan",
    "bott_eval",
    "certify_cm_failure",
    "certify_subequivalence_obstruction",
    "dense_point",
    "dense_point_schedule",
    "euler_class_of_tensor",
    "euler_direct_sum_power",
    "euler_witness",
    "first_hits",
    "first_stage_realizing",
    "is_projection",
    "minimal_sphere_counts",
    "slot_indices",
    "sphere_cells",
    "spread",
    "sq_mul",
    "sq_pow",
    "tensor_projection_eval",
    "unpair",
    "villadsen_plan",
]
