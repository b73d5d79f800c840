# Copyright 2026 The ebitcalc Authors
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

"""Ebit counts for entanglement-assisted stabilizer codes."""

from ._core import (
    DependentRowsError,
    DomainError,
    Error,
    ParseError,
    ShapeError,
    SizeError,
    code_parameters,
    conv_ebits,
    css_ebits,
    cv_ebits,
    ebits,
    ebits_from_paulis,
    gf2_rank,
    gf4_ebits,
    qudit_ebits,
    run_cli,
    sgsop,
    symplectic_product_matrix,
    verify_random,
)

__all__ = [
    "DependentRowsError",
    "DomainError",
    "Error",
    "ParseError",
    "ShapeError",
    "SizeError",
    "code_parameters",
    "conv_ebits",
    "css_ebits",
    "cv_ebits",
    "ebits",
    "ebits_from_paulis",
    "gf2_rank",
    "gf4_ebits",
    "qudit_ebits",
    "run_cli",
    "sgsop",
    "symplectic_product_matrix",
    "verify_random",
]
