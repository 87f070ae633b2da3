# %% [markdown]
# # Matchings and semi-invariant rings
#
# Each band vector gives a symmetric matching on x_1..x_(n-1), y_1..y_(n-1).
# The matching alone determines a toric ring, presented here by generators
# and binomial relations.

# %%
from stringalg import classify_ring, control_equations, extract_matching, hilbert_basis, si_ring_structure
from stringalg.matching import Matching
from stringalg.toric import monomial

m = [1, 2, 2, 1, 2, 3, 1]
t = extract_matching(m)
print(t)
print(si_ring_structure(m)["polynomial_var_count"], "free variables")

# %%
cs = control_equations(t)
print("\n".join(cs.describe()))
gens = hilbert_basis(cs)
print(len(gens), [monomial(t.n, g) for g in gens])

# %% [markdown]
# Eleven generators in dimension eight, and five relations: more than the
# codimension, so not a complete intersection.

# %%
cl = classify_ring(t)
print(cl.kind, cl.dim, cl.codim, cl.relation_count)
for r in cl.relations:
    print(r.sides())

# %% [markdown]
# The identity matching always gives a hypersurface.

# %%
for n in range(2, 7):
    cl = classify_ring(Matching.identity(n))
    print(n, len(cl.generators), cl.kind)
