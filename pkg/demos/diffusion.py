"""Walk through the one-dimensional diffusion equation.

Computes the dimension polynomial of the PDE itself, then of its forward and
space-symmetric difference schemes, and ranks the schemes by strength.
Everything is exact; coefficients live in Q(a) for the symbolic diffusion
constant.
"""

from dimpoly import (
    builtin_system,
    builtin_scheme,
    compare_strength,
    compute_strength,
    discretize,
    poly_str,
    render_element,
    render_system,
)

p = builtin_system("diffusion")
print("system source:")
print(render_system(p))

# The PDE: one generator, two derivations.  The relation alone is already a
# Groebner basis, and the polynomial counts free Taylor coefficients.
pde = compute_strength(p, system_name="diffusion")
print(f"differential dimension polynomial: {poly_str(pde.dim.polynomial)}")
print(f"  (valid for r >= {pde.dim.validity_threshold}, oracle ok: {pde.validation.ok})")
print()

# Forward scheme: u_x -> u(x+1)-u(x), u_t -> u(t+1)-u(t).  The discretized
# relation acquires lower-order tail terms.
forward = builtin_scheme("diffusion", "forward")
stencil_system = discretize(p, forward)
print("forward stencil relation:", render_element(stencil_system, stencil_system.relations[0]))
fwd = compute_strength(p, system_name="diffusion", scheme=forward, scheme_name="forward")
print(f"forward scheme polynomial: {poly_str(fwd.dim.polynomial)}")
print(f"  basis: {len(fwd.basis)} elements; completed {fwd.basis.completed_size}")
for g in fwd.basis:
    print("   ", render_element(fwd.working, g, fwd.basis.order))
print()

# Symmetric scheme: second-order central stencil in space, forward in time.
symmetric = builtin_scheme("diffusion", "symmetric")
sym = compute_strength(p, system_name="diffusion", scheme=symmetric, scheme_name="symmetric")
print(f"symmetric scheme polynomial: {poly_str(sym.dim.polynomial)}")
for g in sym.basis:
    print("   ", render_element(sym.working, g, sym.basis.order))
print()

verdict = compare_strength(sym.dim.polynomial, fwd.dim.polynomial)
print(f"symmetric vs forward: symmetric is {verdict}")
print("fewer free grid values per order = the stronger, more constraining scheme")
