# Copyright 2026 The tempdist Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the tempdist multi-photon interference library."""

from fractions import Fraction

from tempdist._core import (
    ParseError,
    Scenario,
    SizeLimitError,
    TemporalMode,
    bruteforce_visibility,
    coincidence,
    coincidence_total,
    enumerate_scenarios,
    gram,
    hom_visibility,
    normalization,
    normalization_grouped,
    overlap,
    pair_ratio_ea,
    parse_scenario,
    pdc_rates,
    permanent,
    scan,
)
from tempdist import _core


def _fraction(pair):
    num, den = pair
    return Fraction(int(num), int(den))


def visibility_formula(scenario, literal=False):
    """Closed-form visibility of a scenario (or scenario string) as a Fraction."""
    if isinstance(scenario, str):
        scenario = parse_scenario(scenario)
    return _fraction(_core._visibility_formula(scenario, literal))


def exact_bruteforce_visibility(scenario):
    """Brute-force visibility from exact integer permanents, as a Fraction."""
    if isinstance(scenario, str):
        scenario = parse_scenario(scenario)
    return _fraction(_core._exact_bruteforce_visibility(scenario))


def golden_table(k, n):
    """Reference table entries as {label: Fraction}."""
    return {label: _fraction(value) for label, value in _core._golden_table(k, n)}


__all__ = [
    "ParseError",
    "Scenario",
    "SizeLimitError",
    "TemporalMode",
    "bruteforce_visibility",
    "coincidence",
    "coincidence_total",
    "enumerate_scenarios",
    "exact_bruteforce_visibility",
    "golden_table",
    "gram",
    "hom_visibility",
    "normalization",
    "normalization_grouped",
    "overlap",
    "pair_ratio_ea",
    "parse_scenario",
    "pdc_rates",
    "permanent",
    "scan",
    "visibility_formula",
]
