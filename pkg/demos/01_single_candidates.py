"""
Testing single candidates 2^k * n - 1
=====================================

A tour of the four decision routes and what their verdicts carry.
Run as: python demos/01_single_candidates.py
"""

from ecriesel import FormCandidate, auto_test, factor_witness, replay_verdict

# Each candidate is carried as its decomposition (k, n); p is derived.
# The dispatcher picks a route from the shape of n and the applicability
# gates, so the same call covers all four algorithms.
candidates = [
    FormCandidate(k=13, n=1),                            # Mersenne M_13 = 8191
    FormCandidate(k=7, n=3),                             # small n: p = 383
    FormCandidate(k=8, n=7),                             # small n, composite p = 1791
    FormCandidate(k=2, n=2633),                          # n prime:  p = 10531
    FormCandidate(k=2, n=2503),                          # n prime:  p = 10011 = 3*47*71
    FormCandidate(k=2, n=250127, n_factors=(389, 643)),  # n = q1*q2: p = 1000507
]

for c in candidates:
    verdict = auto_test(c)
    line = f"k={c.k:>2} n={c.n:>6}  p={c.p:>8}  ->  {verdict.status:<9} via {verdict.algorithm}"
    witness = factor_witness(verdict)
    if witness is not None:
        line += f"  (divisor {witness})"
    print(line)

    # every prime/composite verdict ships a certificate that an
    # independent routine can re-check from scratch
    assert replay_verdict(c, verdict)

print("\nAll verdicts replayed successfully.")

# A closer look at one certificate: the small-n route records the curve
# coefficient, the constructed point, and the whole denominator chain.
c = FormCandidate(k=7, n=3)
verdict = auto_test(c)
cert = verdict.certificate
print(f"\nCertificate for p = {c.p}:")
print(f"  type       : {cert['type']}")
print(f"  curve      : y^2 = x^3 - {cert['m']}x  (mod {c.p})")
print(f"  base point : {tuple(cert['base_point'])}, multiplied by n = {cert['multiplier']}")
print(f"  S chain    : {cert['s_chain']}")
print(f"  outcome    : {cert['outcome']}  (zero at step k justifies 'prime')")
