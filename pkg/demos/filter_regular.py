"""Turning a parameter ideal's generators into a filter-regular sequence.

Run: python3 demos/filter_regular.py
"""

from redindex import Ideal, filter_regular_rearrange, fixture, is_filter_regular

M3 = fixture("M3")
q = Ideal(M3.ring, ["z", "x-y"])
print("z filter-regular on M3?", bool(is_filter_regular("z", M3)))
for prefer in (True, False):
    ps = filter_regular_rearrange(q, M3, seed=3, prefer_given=prefer)
    print(f"prefer_given={prefer}:", ps.as_strings(), "failures", ps.certificate["rearrange_failures"])
