"""Exhaustive CSS searches: none on six qubits, the Steane code on seven."""

from __future__ import annotations

from sixqubit import SearchSpec, builtin_code, search_css
from sixqubit.search import contains_code, recheck_survivor

# %% six qubits, no ebits
six = search_css(SearchSpec(6, 1, 3))
for (dx, dz), c in six.census.items():
    print(dx, dz, c.enumerated, c.commuting, c.passed_distance)
print("survivors", len(six.survivors))

# %% seven qubits, balanced split only
seven = search_css(SearchSpec(7, 1, 3, splits=((3, 3),)))
print("survivors", len(seven.survivors), "Steane found", contains_code(seven, builtin_code("steane").stabilizer))

# %% five sender qubits plus one ebit (receiver column last)
five = search_css(SearchSpec(5, 1, 3, 1))
print("survivors", len(five.survivors))
if five.survivors:
    print(five.survivors[0].to_strings(), "rechecked", recheck_survivor(five.survivors[0], five.spec))
