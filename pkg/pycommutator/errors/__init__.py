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

from typing import List, Optional


class CommutatorError(Exception):
    default_message = "Commutator computation failed."

    def __init__(self, *args):
        if args:
            self.message = args[0]
        else:
            self.message = None

    def __str__(self):
        if self.message:
            return f"{self.message}"
        else:
            return self.default_message


class DimensionError(CommutatorError):
    default_message = "Mismatched dimensions."


class DescriptorError(CommutatorError):
    default_message = "Operands belong to different or unsupported algebras."


class NotInvertible(CommutatorError):
    default_message = "Element is not invertible."


class ZeroElement(CommutatorError):
    default_message = "Operation requires a nonzero element."


class IsAField(CommutatorError):
    default_message = "The algebra is a field, every commutator vanishes."


class NotAnIdentity(CommutatorError):
    default_message = "Polynomial does not vanish under abelianization."


class NotOnSphere(CommutatorError):
    default_message = "Point does not satisfy x^2 + y^2 + z^2 = 1."


class TooLarge(CommutatorError):
    default_message = "Instance exceeds the configured size bound."


class SearchExhausted(CommutatorError):
    default_message = "Bounded search exhausted its retries."

    def __init__(self, *args, transcript: Optional[List[str]] = None):
        super().__init__(*args)
        self.transcript = transcript or []

    def __str__(self):
        base = super().__str__()
        if self.transcript:
            return f"{base} ({len(self.transcript)} attempts, last: {self.transcript[-1]})"
        return base


class SchemaError(CommutatorError):
    default_message = "Malformed input document."

    def __init__(self, *args, path: str = "$"):
        super().__init__(*args)
        self.path = path

    def __str__(self):
        return f"{self.path}: {super().__str__()}"


class SearchWarning(Warning):
    def __init__(self, *args):
        if args:
            self.message = args[0]
        else:
            self.message = None

    def __str__(self):
        if self.message:
            return f"{self.message}"
        else:
            return "Candidate search was widened."
