"""Walk through the A2, m=2 example: chains, regions, alcoves, lattice points
and the resulting h+ and f+ vectors, computed in four independent ways."""
from catalan_atlas.chains import enumerate_ideal_chains, h_plus_vector_from_chains, top_indecomposables
from catalan_atlas.lattice import incidence_histogram, rho, shi_to_affine, w_f
from catalan_atlas.poset import build_poset
from catalan_atlas.regions import enumerate_regions, m_wall_counts, max_alcove
from catalan_atlas.rootsys import build_root_system
from catalan_atlas.stats import f_from_h, n_plus_formula

M = 2
rs = build_root_system("A2")
p = build_poset(rs)
print(f"{rs.name}: positive roots {rs.positive_roots}, h = {rs.coxeter_number}")
print(f"bounded regions predicted by the product formula: {n_plus_formula(rs, M)}")

print("\npositive geometric chains of ideals and their maximal alcoves")
wf = w_f(p, M)
for c in enumerate_ideal_chains(p, M, positive_only=True):
    s = max_alcove(c)
    point = rho(shi_to_affine(p, s), wf)
    ideals = [sorted(J) for J in c.ideals]
    print(f"  {ideals}  top indecomposables={sorted(top_indecomposables(c))}"
          f"  shi={s.r}  lattice point={point.coords}")

hist = {}
for R in enumerate_regions(p, M, bounded_only=True):
    ns = m_wall_counts(R)[0]
    hist[ns] = hist.get(ns, 0) + 1
ell = rs.rank
from_regions = tuple(hist.get(ell - i, 0) for i in range(ell + 1))
lat = incidence_histogram(rs, M)
from_lattice = tuple(lat.get(ell - i, 0) for i in range(ell + 1))
from_chains = h_plus_vector_from_chains(p, M)

print(f"\nh+ from chains:  {from_chains}")
print(f"h+ from regions: {from_regions}")
print(f"h+ from lattice: {from_lattice}")
print(f"f+ = {f_from_h(from_chains)}")
assert from_chains == from_regions == from_lattice
