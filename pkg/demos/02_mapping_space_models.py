"""Models of mapping spaces built from the rational model of S^4.

Each builder returns the model together with its structure maps; all of
them are checked to commute with the differentials when they are built.
"""

from branecalc import (
    build_collapse_model,
    build_disk_model,
    build_path_model,
    build_sphere_model,
    build_torus_model,
    cohomology_dims,
    format_element,
    parse_model,
)

S4 = parse_model("generator x 4\ngenerator y 7\nd y = x^2")


def show(title, m):
    print(f"-- {title}: {m.algebra!r}")
    for g in m.generators:
        dg = m.dgen(g.name)
        if dg:
            print(f"   d {g.name} = {format_element(dg)}")


path = build_path_model(S4)
show("free path space", path.model)
show("maps from S^1", build_sphere_model(S4, 1).model)
show("maps from D^2", build_disk_model(S4, 2).model)
show("maps from S^1 x S^1", build_torus_model(S4, 2).model)
show("maps from the collapse", build_collapse_model(S4, 2).model)

# the path and disk models are resolutions: same cohomology as the base
n = S4.default_truncation()
print("H(S4)        ", cohomology_dims(S4, n))
print("H(path model)", cohomology_dims(path.model, n))
print("H(disk model)", cohomology_dims(build_disk_model(S4, 2).model, n))
