"""Enumerate small ideals, check the ideal/i-ideal correspondence, and hunt for bad products."""
from malcev import catalog, correspondence_check, decompose, j_minimality_check
from malcev import product_counterexample_search
from malcev.fuzz import committed_findings
from malcev.catalog import from_document
from malcev.ideals import enumerate_ideals, ideal_product, is_ideal

a = catalog.get("sl2_plus_M7")
ctx = decompose(a)
for ideal in enumerate_ideals(a, 2):
    c = correspondence_check(ctx, ideal.space)
    print(f"ideal dim {ideal.dim:2d}  contains J={ideal.contains_J!s:5s}  "
          f"minimality={bool(j_minimality_check(a, ideal))}  forward={c.forward} backward={c.backward}")

print("\ncatalog product counterexamples:",
      [x.name for x in catalog.catalog() if product_counterexample_search(x)])

# A 5-dimensional nilpotent algebra found by the fuzzer.
finding = next(f for f in committed_findings() if f.target == "ideal-product-failure")
b = from_document(finding.document)
p, q = product_counterexample_search(b, b.dim)
prod = ideal_product(p, q)
print(f"{b.name}: [P, Q] has dim {prod.dim}, is an ideal: {is_ideal(b, prod)}")
