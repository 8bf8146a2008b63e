"""Print N+ and h+ for the exceptional types with m = 1 and m = 2.

E7 and E8 take a few seconds each; pass --quick to skip them."""
import sys

from catalan_atlas.chains import h_plus_vector_from_chains
from catalan_atlas.poset import build_poset
from catalan_atlas.rootsys import build_root_system
from catalan_atlas.stats import n_plus_formula

types = ["G2", "F4", "E6"] if "--quick" in sys.argv else ["G2", "F4", "E6", "E7", "E8"]
for name in types:
    rs = build_root_system(name)
    p = build_poset(rs)
    for m in (1, 2):
        if m == 2 and rs.rank > 6:
            continue
        hp = h_plus_vector_from_chains(p, m)
        assert sum(hp) == n_plus_formula(rs, m)
        print(f"{name:3} m={m}  N+={sum(hp):6}  h+={hp}")
