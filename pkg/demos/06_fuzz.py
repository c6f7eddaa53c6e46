"""Random search for non-Lie Malcev algebras and structural surprises."""
from malcev.fuzz import FuzzConfig, fuzz, verify_finding

for dim in (2, 3, 4):
    found = fuzz(FuzzConfig(dim=dim, trials=1500, seed=1))
    print(f"dim {dim}: {len(found)} non-Lie Malcev algebras in 1500 trials")

hits = fuzz(FuzzConfig(dim=4, trials=1500, seed=1, target="non-direct-decomposition"))
print("non-direct decompositions:", len(hits), "all verified:", all(map(verify_finding, hits)))
if hits:
    print(hits[0].document)
