# Copyright 2026 The kuniform Authors
#
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

"""Python bindings for the kuniform library."""

from ._core import (
    CapExceeded,
    DomainError,
    ExistenceVerdict,
    KufError,
    ParseError,
    PureState,
    UniformityReport,
    construct_k_uniform,
    exists_k_uniform,
    ghz,
    parse_state,
    run_cli,
    strong_masking_feasible,
    table_text,
    verify_bundled_masker,
    verify_k_uniform,
)

__all__ = [
    "CapExceeded",
    "DomainError",
    "ExistenceVerdict",
    "KufError",
    "ParseError",
    "PureState",
    "UniformityReport",
    "construct_k_uniform",
    "exists_k_uniform",
    "ghz",
    "parse_state",
    "run_cli",
    "strong_masking_feasible",
    "table_text",
    "verify_bundled_masker",
    "verify_k_uniform",
]
