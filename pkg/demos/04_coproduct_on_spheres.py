"""On the models of even spheres the coproduct dual vanishes identically."""

import time

from branecalc import brane_coproduct_dual, parse_model

for text in ("generator x 4\ngenerator y 7\nd y = x^2", "generator x 6\ngenerator y 11\nd y = x^2"):
    m = parse_model(text)
    start = time.perf_counter()
    delta = brane_coproduct_dual(m, 2)
    nonzero = sum(1 for n in range(delta.n_max + 1) for _, img in delta.slice(n) if img)
    total = sum(len(delta.slice(n)) for n in range(delta.n_max + 1))
    print(f"{m.algebra!r}: {nonzero} nonzero images out of {total} basis elements "
          f"through degree {delta.n_max} ({time.perf_counter() - start:.2f}s)")
