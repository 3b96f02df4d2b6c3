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
"""Export density profiles as CSV."""

import csv as _csv
from typing import TextIO as _TextIO

from almosteq.density.density import DensityProfile as _DensityProfile

COLUMNS = (
    "n",
    "count",
    "mu_num",
    "mu_den",
    "mu_star_num",
    "mu_star_den",
    "delta_num",
    "delta_den",
    "mu_float",
)


def profile_rows(profile: _DensityProfile) -> list[dict]:
    """Return one dictionary per length with the CSV columns."""
    return [
        {
            "n": n,
            "count": profile.counts[n],
            "mu_num": profile.mu[n].numerator,
            "mu_den": profile.mu[n].denominator,
            "mu_star_num": profile.mu_star[n].numerator,
            "mu_star_den": profile.mu_star[n].denominator,
            "delta_num": profile.delta[n].numerator,
            "delta_den": profile.delta[n].denominator,
            "mu_float": float(profile.mu[n]),
        }
        for n in range(profile.horizon + 1)
    ]


def write_profile_csv(profile: _DensityProfile, stream: _TextIO) -> None:
    """Write the profile as CSV to an open text stream."""
    writer = _csv.DictWriter(stream, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(profile_rows(profile))


def profile_to_dict(profile: _DensityProfile) -> dict:
    """Return the profile as JSON compatible data, fractions as strings."""
    data = {
        "alphabet_size": profile.alphabet_size,
        "rows": [
            {
                "n": n,
                "count": profile.counts[n],
                "mu": str(profile.mu[n]),
                "mu_star": str(profile.mu_star[n]),
                "delta": str(profile.delta[n]),
            }
            for n in range(profile.horizon + 1)
        ],
    }
    if profile.residues is not None:
        data["residues"] = {
            "period": profile.residues.period,
            "structural": profile.residues.structural,
            "estimates": [str(value) for value in profile.residues.estimates],
            "oscillation": [str(value) for value in profile.residues.oscillation],
        }
    return data
