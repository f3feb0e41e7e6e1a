"""Invariants of the bundled fixtures, and what a mirror image does to them."""

from knotbracket.alexander import alexander
from knotbracket.bracket import jones, kauffman_bracket, normalized_bracket
from knotbracket.diagram import linking_number, mirror, reverse_component, writhe
from knotbracket.fixtures import load

trefoil = load("trefoil")
print("right trefoil")
print("  writhe             ", writhe(trefoil))
print("  bracket            ", kauffman_bracket(trefoil))
print("  normalized bracket ", normalized_bracket(trefoil))
print("  Jones              ", jones(trefoil))
print("  Alexander          ", alexander(trefoil).to_str("t"))

# The mirror swaps A and A^-1, so Jones sees chirality; Alexander does not.
left = mirror(trefoil)
print("left trefoil")
print("  Jones              ", jones(left))
print("  Alexander          ", alexander(left).to_str("t"))

print("5_2 knot Alexander:", alexander(load("five_two")).to_str("t"))

hopf = load("hopf")
print("Hopf link lk:", linking_number(hopf, 0, 1),
      "reversed:", linking_number(reverse_component(hopf, 1), 0, 1))
print("Whitehead link lk:", linking_number(load("whitehead"), 0, 1))
