"""Walk the built-in catalog and show which algebras are Lie, Malcev, or neither."""
from malcev import catalog, validate
from malcev.algebra import witness_residual

for a in catalog.catalog():
    r = validate(a)
    print(f"{a.name:12s} dim={a.dim:2d}  lie={r.is_lie!s:5s}  malcev={r.is_malcev}")

# The octonion algebra fails Jacobi; each witness is a basis triple.
m7 = catalog.get("M7")
w = validate(m7).witnesses_for("jacobi")[0]
print("\nM7 Jacobi witness", w.indices, "->", [str(c) for c in witness_residual(m7, w)])

# Round trip through the document format.
text = catalog.serialize(catalog.get("solv4"))
print("\nsolv4 document:", text)
assert catalog.parse(text) == catalog.get("solv4")
