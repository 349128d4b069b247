"""
Hunting counterexamples
=======================

Boolean queries over the predicate registry drive a corpus-wide search
for instances separating one property from another. The interesting
separations show up immediately on small rings.
"""

from nilary import build_builtin_corpus, build_rings, parse_query, run_hunt

rings = build_rings(build_builtin_corpus())

for text in (
    "weakly_nilary and not nilary",          # the Z_6 phenomenon
    "prime and not completely_nilary",       # the matrix-ring phenomenon
    "right_primary and not completely_right_primary",
    "completely_nilary and not commutative",
    "completely_prime and not prime",        # impossible: expect no matches
):
    matches = list(run_hunt(rings, parse_query(text)))
    print(f"{text!r}: {len(matches)} match(es)")
    for m in matches[:4]:
        print("   ", m.ring_label, m.ideal_elements)

# quantify over every ideal instead of just the zero ideal
query = parse_query("weakly_nilary and not nilary", target="any-ideal")
matches = list(run_hunt(rings, query))
print(f"\nany-ideal target, 'weakly_nilary and not nilary': {len(matches)} match(es)")
