"""Exhaustive checks on tiny modules over F_2 and F_3.

Every submodule is enumerated, so c(M) and r(M) are computed by brute force
and compared with their socle characterisations and with the dual module.

Run: python3 demos/oracle_battery.py
"""

from redindex.oracles import oracle_suite

results = oracle_suite()
for r in results:
    status = "ok" if not r.violations else "; ".join(r.violations)
    print(f"{r.label:<28} length {r.length}  c {r.c}  r(dual) {r.r_dual}  c(dual) {r.c_dual}  {status}")
print(len(results), "instances,", sum(bool(r.violations) for r in results), "with violations")
