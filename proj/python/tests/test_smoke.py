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

import pytest

import ebitcalc


def test_single_qubit_pair_needs_one_ebit():
    assert ebitcalc.ebits([[1], [0]], [[0], [1]]) == 1
    assert ebitcalc.ebits_from_paulis(["XX", "ZZ"]) == 0
    assert ebitcalc.symplectic_product_matrix([[1], [0]], [[0], [1]]) == [[0, 1], [1, 0]]


def test_code_parameters():
    p = ebitcalc.code_parameters([[1], [0]], [[0], [1]])
    assert p["text"] == "[[1, 0; 1]]"
    assert (p["n"], p["generators"], p["ebits"], p["logical"], p["ancillas"]) == (1, 2, 1, 0, 0)
    assert p["distance"] is None


def test_sgsop_contract():
    out = ebitcalc.sgsop([[0, 1], [1, 0], [1, 1]], [[1, 0], [0, 1], [0, 0]])
    assert out["ebits"] == len(out["pairs"])
    assert len(out["pairs"]) * 2 + len(out["isotropic"]) == 3


def test_imports():
    hamming = [[0, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]]
    assert ebitcalc.css_ebits(hamming, hamming) == 0
    assert ebitcalc.gf4_ebits(["10w1", "01vw"]) == 2
    assert ebitcalc.qudit_ebits([[1], [0]], [[0], [1]], 3) == 1
    assert ebitcalc.cv_ebits([[2.5], [0.0]], [[0.0], [-1.25]]) == 1


def test_convolutional_example():
    hz = [
        ["0", "0", "0", "0", "0"],
        ["1+D", "D", "0", "1", "1+D"],
        ["0", "0", "D", "D", "D"],
        ["0", "D^-1", "1", "D^-1", "0"],
        ["0", "D^-1", "0", "0", "0"],
    ]
    hx = [
        ["1+D", "0", "D", "1", "1+D"],
        ["0"] * 5,
        ["0", "1", "0", "1", "1"],
        ["0"] * 5,
        ["0", "0", "1", "0", "0"],
    ]
    assert ebitcalc.conv_ebits(hz, hx) == 2


def test_errors_map_to_exceptions():
    with pytest.raises(ebitcalc.DependentRowsError):
        ebitcalc.ebits_from_paulis(["XZ", "ZX", "YY"])
    assert ebitcalc.ebits_from_paulis(["XZ", "ZX", "YY"], reduce=True) == 0
    with pytest.raises(ebitcalc.ShapeError):
        ebitcalc.ebits([[1, 0]], [[1]])
    with pytest.raises(ebitcalc.DomainError):
        ebitcalc.qudit_ebits([[1]], [[0]], 4)
    assert issubclass(ebitcalc.Error, ValueError)


def test_random_sweep_and_cli():
    report = ebitcalc.verify_random(50, max_n=6, seed=7)
    assert report["cases"] == 50
    assert report["agreement"]
    code, out, err = ebitcalc.run_cli(["--help"])
    assert code == 0
    assert "ebits" in out
