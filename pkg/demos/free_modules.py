"""Systems with no relations: the closed-form baselines.

A free rank-s module over m derivations leaves s*C(t+m,m) values free; over
m invertible translations the count follows the alternating closed form,
which for m=2 is the number of integer lattice points in an L1 ball.  The
full pipeline reproduces both coefficient-exactly, which pins down the
bookkeeping (saturation relations included) with no completion noise.
"""

from dimpoly import (
    Presentation,
    compute_strength,
    free_module_polynomial,
    poly_str,
)

for kind in ("differential", "inversive"):
    print(f"== {kind} ==")
    for m in (1, 2, 3):
        for s in (1, 2, 3):
            p = Presentation(
                kind=kind,
                operators=tuple(f"x{i}" for i in range(m)),
                unknowns=tuple(f"u{i}" for i in range(s)),
                relations=(),
            )
            doc = compute_strength(p, system_name=f"free-{kind}-m{m}-s{s}")
            closed = free_module_polynomial(s, m, kind)
            status = "ok" if doc.dim.polynomial == closed else "MISMATCH"
            print(f"  m={m} s={s}: {poly_str(doc.dim.polynomial):34s} [{status}]")

print()
print("L1-ball check for the inversive m=2 closed form:")
p = free_module_polynomial(1, 2, "inversive")
for t in range(5):
    ball = sum(1 for i in range(-t, t + 1) for j in range(-t, t + 1) if abs(i) + abs(j) <= t)
    print(f"  t={t}: polynomial {p(t)}, lattice points {ball}")
