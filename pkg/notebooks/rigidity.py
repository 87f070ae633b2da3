# %% [markdown]
# # Rigidity of generic modules
#
# Two generic modules of the same band component have no extensions.  We check
# this with exact ranks over a prime field, drawing scalars at random.

# %%
from stringalg import ModuleSpec, band_component, euler_form, hom_ext_dims, projective_resolution, verify_rigidity

c = band_component([2, 2, 3])
res = projective_resolution(ModuleSpec.updown(c, (3,)))
print(res.summands(0), res.summands(1))
print(res.dimension_vector(0), res.dimension_vector(1))

# %%
report = verify_rigidity(c, trials=5, seed=0)
print(report["passes"], "of", report["trials"])
for row in report["hom_ext_table"]:
    print(row)

# %% [markdown]
# Equal scalars are the non-generic case: the two modules are isomorphic and
# Ext^1 no longer vanishes.

# %%
print(verify_rigidity(band_component([1, 1]), trials=1, scalars=((5,), (5,)))["failures"])

# %% [markdown]
# Hom minus Ext^1 is the Euler form for modules of projective dimension one.

# %%
a, b = band_component([1, 2]), band_component([2, 1])
h, e = hom_ext_dims(ModuleSpec.updown(a, (2,)), ModuleSpec.updown(b, (7,)))
print(h, e, euler_form(a.beta, b.beta))
