"""
What a failed certificate looks like
====================================

z1^2 + z2^2 is nonnegative on the orthant but not log-concave there.
Every diagnostic in the package flags it, each with its own kind of
evidence: an exact witness, a positive eigenvalue, or a violated
midpoint inequality.
"""

from matroidlc import (
    SparsePolynomial,
    certify_clc_quadratic_criterion,
    format_polynomial,
    log_concavity_condition_report,
    sample_functional_log_concavity,
    spectral_nd_report,
    verify_certificate_failure,
)

f = SparsePolynomial(2, {(2, 0): 1, (0, 2): 1})
print("f =", format_polynomial(f, names=("z1", "z2")))

# the pointwise conditions all agree that f fails at (1, 1)
report = log_concavity_condition_report(f, (1, 1))
print("hessian conditions at (1,1):", report.condition1, report.condition2,
      report.condition4, report.condition5, "agreement:", report.agreement)

# the certificate rejects before even reaching a quadratic test:
# f splits into pieces with disjoint variables, and the partition is
# returned as a witness that can be re-verified independently
cert = certify_clc_quadratic_criterion(f)
print("certificate:", cert.verdict)
print("failing check:", cert.failure.kind, "at alpha =", cert.failure.alpha)
print("witness partition:", [sorted(p) for p in cert.failure.witness_partition])
print("witness re-verified:", verify_certificate_failure(cert, f))

# floating diagnostics tell the same story: one eigenvalue of the
# log-Hessian is strictly positive
spec = spectral_nd_report(f)
print("log-Hessian eigenvalues at (1,1):", [round(e, 6) for e in spec.eigenvalues])

# and random midpoint sampling finds concrete violations of
# f(lam*u + (1-lam)*v) >= f(u)^lam * f(v)^(1-lam)
sampled = sample_functional_log_concavity(f, trials=200, seed=0)
print("functional sampling:", "holds" if sampled.holds else
      f"{len(sampled.failures)} violations in {sampled.trials} trials")

# contrast with the product z1*z2, which passes everything
good = SparsePolynomial(2, {(1, 1): 1})
print("\ng =", format_polynomial(good, names=("z1", "z2")))
print("certificate:", certify_clc_quadratic_criterion(good).verdict)
print("log-Hessian eigenvalues:",
      [round(e, 6) for e in spectral_nd_report(good).eigenvalues])
