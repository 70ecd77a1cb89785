"""
Mersenne numbers without a curve search
=======================================

For M_k = 2^k - 1 the curve y^2 = x^3 - 3x and the start x_0 = -1 work for
every exponent, so the test collapses to an x-only recursion, just like
the classical squaring test it parallels.

Run as: python demos/02_mersenne_scan.py
"""

from ecriesel import lucas_lehmer, mersenne_sequence, test_mersenne

# The recursion for M_5 = 31, step by step.  S_i is the doubling
# denominator; all steps coprime to p plus a final zero means prime.
outcome, trace = mersenne_sequence(5)
print("M_5 = 31:")
print(f"  x chain: {trace.x_values}")
print(f"  S chain: {trace.s_values}")
print(f"  outcome: {outcome.kind}\n")

# Scan a range and compare with the classical test on every exponent.
print("k    elliptic     classical    agree")
for k in range(3, 131):
    verdict = test_mersenne(k)
    classical = "prime" if lucas_lehmer(k) else "composite"
    agree = verdict.status == classical
    assert agree
    if verdict.status == "prime":
        print(f"{k:<5}{verdict.status:<13}{classical:<13}{agree}")

print("\nComposite exponents agree too (suppressed above); for example:")
for k in (4, 11, 23, 29, 37):
    verdict = test_mersenne(k)
    cert = verdict.certificate
    note = f"gcd hit at step {cert['step']}, divisor {cert['divisor']}" \
        if cert["outcome"] == "gcd-hit" else cert["outcome"]
    print(f"  M_{k}: {verdict.status} ({note})")
