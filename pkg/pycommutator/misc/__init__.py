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

import functools

from pycommutator.errors import DescriptorError


class Singleton(type):
    _instances = {}

    def __call__(cls, *args, **kwargs):
        if cls not in cls._instances:
            cls._instances[cls] = super(Singleton, cls).__call__(*args, **kwargs)
        return cls._instances[cls]


def requires_kind(*kinds):
    """Restrict an operation to algebras of the given kinds.

    The first positional argument of the wrapped function must be an
    `AlgebraElement` or an `AlgebraDescriptor`.
    """

    def decorator(func):
        # handle the inner function that the decorator is wrapping
        @functools.wraps(func)
        def inner(*args, **kwargs):
            target = args[0]
            descriptor = getattr(target, "algebra", target)
            kind = getattr(descriptor, "kind", None)
            if kind not in kinds:
                allowed = ", ".join(k.value for k in kinds)
                raise DescriptorError(
                    f"{func.__name__} requires an algebra of kind {allowed}, got {descriptor}"
                )
            return func(*args, **kwargs)

        return inner

    return decorator
