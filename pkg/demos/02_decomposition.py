"""Split a Malcev algebra into its Jacobian ideal J and the J-nucleus N."""
from malcev import catalog, decompose

for name in ("sl2_plus_M7", "solv4"):
    ctx = decompose(catalog.get(name))
    print(f"{name}: dim J={ctx.J.dim}, dim N={ctx.N.dim}, direct={ctx.direct}, "
          f"A/J dim={ctx.quotient.dim} lie={ctx.quotient_is_lie}, NJ=0: {ctx.annihilation}")

# solv4 is the interesting one: J and N coincide, so A is not N + J.
ctx = decompose(catalog.get("solv4"))
print("solv4 J basis:", [[str(c) for c in v] for v in ctx.J.basis])
print("solv4 N basis:", [[str(c) for c in v] for v in ctx.N.basis])
