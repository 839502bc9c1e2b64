"""
Six planes whose vanishing depends on the characteristic
========================================================

Six height-two linear primes in six variables.  Their sums decide a
simplicial complex, which turns out to be the six-vertex projective plane.
The top candidate local cohomology module H^4_I vanishes exactly when the
coefficient characteristic is not 2.
"""

from cohomdim.analysis import analyze, example_hl
from cohomdim.io import emit_report

primes = example_hl(2, 7)
for p in primes:
    print(p)

report = analyze(primes, characteristics=[2, 0, 7])
print()
print(f"d = {report.d}, c = {report.c}, t = {report.t}, v = {report.v}")
print("m-primary triples:", report.lambda_t)
print("2-simplices of the complex:", list(report.complex.simplices(2)))

for k, verdict in report.verdicts.items():
    print(f"char {k}: w = {verdict.w}   {verdict.statement}")

# the same thing as the CLI would print it
print()
print(emit_report(report, "text").decode())
