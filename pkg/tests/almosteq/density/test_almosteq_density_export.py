# The MIT License (MIT)
#
# Copyright (c) 2026 AlmostEq Authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
"""Unit tests for the export of density profiles."""

import io

from almosteq.automata.dfa import Dfa
from almosteq.density.density import profile
from almosteq.density.export import profile_rows, profile_to_dict, write_profile_csv

EVEN = Dfa("a,b", [[1, 1], [0, 0]], 0, [0])


def test_almosteq_density_export_csv():
    """Test the CSV columns of a profile."""
    stream = io.StringIO()
    write_profile_csv(profile(EVEN, 3), stream)
    assert stream.getvalue().splitlines() == [
        "n,count,mu_num,mu_den,mu_star_num,mu_star_den,delta_num,delta_den,mu_float",
        "0,1,1,1,0,1,0,1,1.0",
        "1,0,0,1,1,1,1,1,0.0",
        "2,4,1,1,1,3,1,2,1.0",
        "3,0,0,1,5,7,2,3,0.0",
    ]
    assert profile_rows(profile(EVEN, 1))[1]["mu_float"] == 0.0


def test_almosteq_density_export_dict(assert_results_equal):
    """Test the JSON data of a profile with residue estimates."""
    assert_results_equal(
        {
            "alphabet_size": 2,
            "rows": [
                {"n": 0, "count": 1, "mu": "1", "mu_star": "0", "delta": "0"},
                {"n": 1, "count": 0, "mu": "0", "mu_star": "1", "delta": "1"},
                {"n": 2, "count": 4, "mu": "1", "mu_star": "1/3", "delta": "1/2"},
                {"n": 3, "count": 0, "mu": "0", "mu_star": "5/7", "delta": "2/3"},
                {"n": 4, "count": 16, "mu": "1", "mu_star": "1/3", "delta": "1/2"},
                {"n": 5, "count": 0, "mu": "0", "mu_star": "21/31", "delta": "3/5"},
                {"n": 6, "count": 64, "mu": "1", "mu_star": "1/3", "delta": "1/2"},
                {"n": 7, "count": 0, "mu": "0", "mu_star": "85/127", "delta": "4/7"},
            ],
            "residues": {
                "period": 2,
                "structural": True,
                "estimates": ["1", "0"],
                "oscillation": ["0", "0"],
            },
        },
        profile_to_dict(profile(EVEN, 7, residues=True)),
    )
