"""Exhaustive parameter sweeps against the allowed-class tables.

For every torsion structure, classify all valid parameter tuples up to a
bound and confirm that no class outside the allowed set ever appears.
The C2xC2 case tables are also checked symbolically over all residues.
"""

from rmm import TorsionStructure, allowed_rmm, c2c2_symbolic_check, sweep_verify

BOUND = 12

for torsion in TorsionStructure:
    if torsion is TorsionStructure.C3_0:
        continue
    report = sweep_verify(torsion, BOUND, threads=4)
    counts = " ".join(f"R{i}:{n}" for i, n in sorted(report.counts.items()))
    status = "ok" if not report.violations else f"{len(report.violations)} VIOLATIONS"
    print(f"{torsion.value:6s} tuples={report.total:7d} "
          f"allowed={sorted(allowed_rmm(torsion))} {status}")
    print(f"       observed {counts}")

print()
print("C2xC2 case tables verified symbolically:", c2c2_symbolic_check())
