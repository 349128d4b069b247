"""
Classifying ideals, with witnesses
==================================

Every predicate verdict comes with concrete evidence: a violating
element pair, an ideal pair with the offending product, or the least
exponent that lands a power inside the ideal. The two showcase rings:

* Z_6, whose zero ideal is weakly nilary but not nilary (products of
  nonzero ideals can vanish outright, and the weak form excuses them);
* M_2(Z_2), which is prime (hence nilary) yet not completely nilary,
  because diag(1,0) * diag(0,1) = 0 with both factors idempotent.
"""

from nilary import (
    classify_ring,
    full_report,
    make_matrix_ring,
    make_zn,
    replay_verdict,
)

z6 = make_zn(6)
report = classify_ring(z6)
print("Z_6, zero ideal:")
for name in ("weakly_nilary", "nilary", "completely_nilary", "prime", "semiprime"):
    v = report.verdicts[name]
    print(f"  {name:<18} {v.holds}", f"witness={v.witness.to_json()}" if not v.holds else "")

# the nilary counter-witness replays against the raw definition
ni = report.verdicts["nilary"]
print("witness replays:", replay_verdict(z6, (0,), "nilary", ni.holds, ni.witness))

m2 = make_matrix_ring(make_zn(2), 2)
report = classify_ring(m2)
print("\nM_2(Z_2), zero ideal:")
for name in ("prime", "nilary", "p_nilary", "completely_nilary",
             "right_primary", "completely_right_primary"):
    v = report.verdicts[name]
    print(f"  {name:<26} {v.holds}", f"witness={v.witness.to_json()}" if not v.holds else "")

# a profile of every ideal at once
print("\nZ_12, all ideals (proper, completely_nilary):")
for rep in full_report(make_zn(12)):
    cn = rep.verdicts["completely_nilary"].holds
    print(f"  {str(rep.ideal_elements):<28} proper={rep.proper} completely_nilary={cn}")
