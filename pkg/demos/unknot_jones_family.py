"""Links that the Jones polynomial cannot tell from the two-component unlink.

H(T, U) doubles the strands of a Hopf link and inserts tangles T and U; its
bracket is br(T)^t M br(U).  The omega pair (T^w, U^wb) keeps that value while
changing the link, which yields Thistlethwaite's link and the family S(n).
"""

import time

from knotbracket.diagram import writhe
from knotbracket.bracket import kauffman_bracket
from knotbracket.hopf_family import HOPF_FORM, s_family, thistlethwaite, thistlethwaite_pair, hopf_bracket
from knotbracket.tangle import to_text

print("form matrix M:")
for row in HOPF_FORM.matrix.rows():
    print("   ", " | ".join(str(x) for x in row))

t, u = thistlethwaite_pair()
d = thistlethwaite()
print(f"\nThistlethwaite: T = {to_text(t)}, U = {to_text(u)}")
print(f"  {d.n_crossings} crossings, writhe {writhe(d)}")
print(f"  form value {hopf_bracket(t, u)}")
print(f"  state sum  {kauffman_bracket(d)}")

print("\nS(n):")
for n in range(6):
    start = time.perf_counter()
    e = s_family(n, verify=n <= 1)
    check = "" if e.oracle_bracket is None else f", state sum agrees: {e.oracle_bracket == e.bracket}"
    print(f"  n={n}  {e.diagram.n_crossings:>2} crossings  writhes {sorted(e.writhes)}  "
          f"Jones {e.jones}{check}  [{time.perf_counter() - start:.2f}s]")
