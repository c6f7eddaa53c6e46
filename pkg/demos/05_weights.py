"""Weight spaces for a nilpotent subalgebra acting on N, and their lift back to A."""
from malcev import catalog, decompose, lift_weight_spaces, rref_span, weight_decomposition

sl2 = catalog.get("sl2")
ctx = decompose(sl2)
h = rref_span([sl2.basis_element("h").coords], 3)
w = weight_decomposition(ctx, h)
for alpha, space in w.spaces:
    print(f"weight {alpha}: dim {space.dim}")
print("complete:", w.complete)

cross = catalog.get("cross3")
wc = weight_decomposition(decompose(cross), rref_span([cross.basis_element(0).coords], 3))
print("cross3 complete:", wc.complete, "rational roots:", [(str(r), m) for r, m in wc.root_reports[0].roots])

big = catalog.get("sl2_plus_M7")
ctx = decompose(big)
h = rref_span([big.basis_element("h").coords], big.dim)
lift = lift_weight_spaces(ctx, weight_decomposition(ctx, h), h).lifted
print(f"lift: literal sum {lift.literal_sum_dim}, with J absorbed {lift.extended_sum_dim}")
