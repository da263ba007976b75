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

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

import yaml

from pycommutator.algebra import (
    AlgebraElement,
    commutator,
    inverse,
    multiply,
)
from pycommutator.errors import SchemaError
from pycommutator.linear import Scalar, SubspaceBasis
from pycommutator.oracle.independent import verify_certificate


class CertificatePath(Enum):
    TRIVIAL_ZERO = "TrivialZero"
    DIVISION_CASE = "DivisionCase"
    MATRIX_OVER_FIELD_CASE = "MatrixOverFieldCase"
    MATRIX_OVER_QUATERNION_CASE = "MatrixOverQuaternionCase"


@dataclass(frozen=True)
class DivisionTrace:
    """Intermediate data of the quaternion division construction.

    Attributes:
        d: The decomposed element.
        u: Primitive element of the subfield containing d.
        v: Basis element with [u, v] != 0.
        W_basis: Basis [u,v]^-1 {1, u, v} of W = [u,v]^-1 (L + F v).
        ell: The L-component of [u,v] w.
        b: Solution of [u, b] = d w.
        w: Element of W with d w in the image of ad_u.
        lambda_: The v-coefficient of [u,v] w.
    """

    d: AlgebraElement
    u: AlgebraElement
    v: AlgebraElement
    W_basis: SubspaceBasis
    ell: AlgebraElement
    b: AlgebraElement
    w: AlgebraElement
    lambda_: Scalar

    @property
    def branch(self) -> str:
        return "lambda_zero" if not self.lambda_ else "lambda_nonzero"

    def checks(self) -> Dict[str, bool]:
        uv = commutator(self.u, self.v)
        return {
            "uv_noncommuting": not uv.is_zero(),
            "W_dimension_3": SubspaceBasis.span(
                self.W_basis.vectors, self.W_basis.ambient_dim, self.W_basis.field
            ).dim
            == 3,
            "w_in_W": self.W_basis.contains(self.w.coords),
            "ub_equals_dw": commutator(self.u, self.b) == multiply(self.d, self.w),
            "w_formula": multiply(inverse(uv), self.ell + self.v.scale(self.lambda_))
            == self.w,
        }

    def as_dict(self) -> dict:
        field_ = self.u.algebra.base_field
        return {
            "u": self.u.as_dict(),
            "v": self.v.as_dict(),
            "uv": commutator(self.u, self.v).as_dict(),
            "W_basis": [[field_.dump(x) for x in vec] for vec in self.W_basis.vectors],
            "ell": self.ell.as_dict(),
            "lambda": field_.dump(self.lambda_),
            "b": self.b.as_dict(),
            "w": self.w.as_dict(),
            "branch": self.branch,
            "checks": self.checks(),
        }


@dataclass
class CommutatorCertificate:
    """a = [b, c] * [d, e], left commutator first.

    Attributes:
        a: The decomposed element.
        b: First entry of the left commutator.
        c: Second entry of the left commutator.
        d: First entry of the right commutator.
        e: Second entry of the right commutator.
        path: Which construction produced the certificate.
        retries_used: Random attempts spent by bounded searches.
        verified: Set by `certify()` through the independent multiplier.
        division_trace: Intermediates of the division construction, if any.
    """

    a: AlgebraElement
    b: AlgebraElement
    c: AlgebraElement
    d: AlgebraElement
    e: AlgebraElement
    path: CertificatePath
    retries_used: int = 0
    verified: bool = False
    division_trace: Optional[DivisionTrace] = None
    transcript: List[str] = field(default_factory=list)

    @property
    def left(self) -> AlgebraElement:
        return commutator(self.b, self.c)

    @property
    def right(self) -> AlgebraElement:
        return commutator(self.d, self.e)

    def verify(self) -> bool:
        return verify_certificate(self)

    def certify(self) -> "CommutatorCertificate":
        self.verified = self.verify()
        return self

    def as_dict(self) -> dict:
        data = {
            "a": self.a.as_dict(),
            "b": self.b.as_dict(),
            "c": self.c.as_dict(),
            "d": self.d.as_dict(),
            "e": self.e.as_dict(),
            "path": self.path.value,
            "retries_used": self.retries_used,
            "verified": self.verified,
            "transcript": list(self.transcript),
        }
        if self.division_trace is not None:
            data["division_trace"] = self.division_trace.as_dict()
        return data

    def as_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def as_yaml(self) -> str:
        return yaml.dump(self.as_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict, path: str = "$") -> "CommutatorCertificate":
        """Read a certificate back; `verified` is dropped and must be recomputed."""
        if not isinstance(data, dict):
            raise SchemaError("certificate must be an object", path=path)
        elements = {}
        for key in ("a", "b", "c", "d", "e"):
            if key not in data:
                raise SchemaError(f"missing element {key}", path=path)
            elements[key] = AlgebraElement.from_dict(data[key], path=f"{path}.{key}")
        try:
            cert_path = CertificatePath(data.get("path", CertificatePath.TRIVIAL_ZERO.value))
        except ValueError:
            raise SchemaError(f"unknown path {data.get('path')!r}", path=f"{path}.path")
        retries = data.get("retries_used", 0)
        if not isinstance(retries, int) or isinstance(retries, bool) or retries < 0:
            raise SchemaError("retries_used must be a non-negative integer", path=f"{path}.retries_used")
        transcript = data.get("transcript", [])
        if not isinstance(transcript, list) or not all(isinstance(line, str) for line in transcript):
            raise SchemaError("transcript must be a list of strings", path=f"{path}.transcript")
        return cls(path=cert_path, retries_used=retries, transcript=list(transcript), **elements)
