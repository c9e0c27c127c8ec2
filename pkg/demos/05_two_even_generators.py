"""Beyond one generator: Λ(x, x') with |x| = 4, |x'| = 6.

The composite is computed twice, once with the closed-form sections and once
with sections produced by the lifting solver.  The two agree on cohomology.
"""

from branecalc import brane_operation, format_element, parse_model
from branecalc.cohomology import cohomology_class_equal

m = parse_model("generator x 4\ngenerator x' 6")
op, report = brane_operation(m, 2, "composite")
op_solver, report_solver = brane_operation(m, 2, "composite", section="solver")

print("verdict (closed form):", report.verdict)
print("verdict (solver)     :", report_solver.verdict)
for a, b in report.witnesses[:4]:
    print("  ", format_element(a), "↦", format_element(b))
agree = all(cohomology_class_equal(op(a), op_solver(a), op.target) for a, _ in report.witnesses)
print("witness classes agree:", agree)
