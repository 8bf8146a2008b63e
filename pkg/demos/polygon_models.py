"""Compare the polygon models of the cluster complexes with the chain counts."""
from catalan_atlas.chains import h_plus_vector_from_chains
from catalan_atlas.cluster import build_complex, polygon_size, snake
from catalan_atlas.poset import build_poset
from catalan_atlas.rootsys import build_root_system
from catalan_atlas.stats import f_from_h

for fam, n, name in [("A", 3, "A2"), ("A", 4, "A3"), ("B", 2, "B2"), ("B", 3, "B3")]:
    for m in (1, 2):
        N = polygon_size(fam, n, m)
        pos = build_complex(fam, n, m, positive_only=True)
        chains = h_plus_vector_from_chains(build_poset(build_root_system(name)), m)
        print(f"{name} m={m}: {N}-gon, snake {[str(d) for d in snake(fam, n, m)]}")
        print(f"   positive part f={pos.f}  chains give f+={f_from_h(chains)}")
        assert pos.f == f_from_h(chains)
