"""The Delta operators that measure how far Jacobi fails."""
from malcev import catalog, delta_element, delta_operator, delta_span, lie_closure_check

m7 = catalog.get("M7")
x, y = m7.basis_element(0), m7.basis_element(1)
print("element form for (e1, e2):", delta_element(m7, x, y).status.value)
op = delta_operator(m7, x, y)
print("operator form rank:", op.rank())

for a in catalog.catalog():
    span = delta_span(a)
    print(f"{a.name:12s} span dim={span.dim:2d}  closed under commutator={lie_closure_check(span)}")
