"""Four circles linked by marker maps, read off from the top circle."""

from laminar import pinching_total, pushforward_consistency, universal_circle
from laminar.scenario import bundled

sys_ = bundled("chain4").get("markers", "M")
u = universal_circle(sys_)
print("top circle:", u.top)
for leaf, phi in sorted(u.phi.items()):
    print(f"  map to {leaf}: flats {[(str(f.start), str(f.end)) for f in phi.flats()]}")
for leaf in sys_.poset.leaves:
    print(f"pinched on {leaf}:", pinching_total(sys_, leaf))
for up, lo in sys_.poset.covering_pairs():
    print(f"pushing {up} down to {lo} is consistent:", pushforward_consistency(sys_, up, lo).ok)
