"""The S^k-brane product and coproduct on Λx, and their composite.

For a single even generator the composite δ^∨∘μ^∨ sends sx to -s^{k-1}x,
which is not exact, so the composite is nonzero on cohomology.
"""

from branecalc import brane_coproduct_dual, brane_product_dual, compose_operations, format_element, parse_model

for degree, k in ((4, 2), (6, 2), (6, 4)):
    m = parse_model(f"generator x {degree}")
    delta = brane_coproduct_dual(m, k)
    mu = brane_product_dual(m, k)
    comp, report = compose_operations(delta, mu)
    T = comp.source.algebra
    print(f"|x| = {degree}, k = {k}: shifts {delta.degree_shift:+d} / {mu.degree_shift:+d}")
    print("   composite(sx) =", format_element(comp(T.gen("sx"))))
    print("   verdict:", report.verdict, f"({len(report.witnesses)} witnesses through degree {report.n_max})")

# the closed forms on small elements
m = parse_model("generator x 4")
mu = brane_product_dual(m, 2)
delta = brane_coproduct_dual(m, 2)
T, S = mu.source.algebra, mu.target.algebra
for a in (T.gen("sx"), T.gen("sx") * T.gen("ss1x"), T.gen("x"), T.gen("s1x")):
    print("mu(", format_element(a), ") =", format_element(mu(a)))
for a in (S.one(), S.gen("x"), S.gen("s2x")):
    print("delta(", format_element(a), ") =", format_element(delta(a)))
