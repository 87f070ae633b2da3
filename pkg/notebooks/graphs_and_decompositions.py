# %% [markdown]
# # Up-and-down graphs and generic decompositions
#
# A band vector m = (m_n, ..., m_1) fixes a dimension vector and a component of
# the representation space.  Its generic module splits along the connected
# components of a bicoloured graph.

# %%
from math import gcd

from stringalg import band_component, build_updown_graph, decompose_graph, generic_decomposition, reduce_band, to_dot

c = band_component([5, 4, 3])
print(c.beta)

# %% [markdown]
# Two components, both bands.  Each one is itself the graph of a smaller band vector.

# %%
for comp in decompose_graph(build_updown_graph(c)):
    print(comp.kind, comp.dimension_vector, comp.band_data())

# %% [markdown]
# The reduction moves count components without drawing anything.  For two and
# three entries the counts follow gcd formulas.

# %%
for m in ([6, 4], [9, 6], [4, 6, 8], [3, 5, 7]):
    count, trace = reduce_band(m)
    print(m, count, [step.rule for step in trace])
print(gcd(6, 4), gcd(9, 6), gcd(6, 4), gcd(5, 4))

# %% [markdown]
# A multiple of a band vector decomposes into copies of the primitive band.

# %%
dec = generic_decomposition(band_component([4, 6]))
print(dec.as_dict())

# %%
print(to_dot(build_updown_graph(band_component([1, 1]))))
