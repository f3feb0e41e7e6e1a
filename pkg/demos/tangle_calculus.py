"""Bracket vectors computed algebraically, checked against compiled diagrams."""

from knotbracket.tangle import (
    bracket_vector,
    closure_brackets,
    compile_tangle,
    parse_tangle,
    tangle_bracket_statesum,
    to_text,
)

for text in ["1", "2", "-3", "inf", "2 * 3", "1.2.3", "(1 + 1)^-1", "(2)^w", "((2)^w)^wb"]:
    t = parse_tangle(text)
    v = bracket_vector(t)
    td = compile_tangle(t)
    same = tangle_bracket_statesum(td) == v
    print(f"{to_text(t):<16} f = {v.f}")
    print(f"{'':<16} g = {v.g}")
    print(f"{'':<16} {len(td.crossings)} crossings, state sum agrees: {same}")

num, den = closure_brackets(parse_tangle("3"))
print("closures of 3: numerator", num, "| denominator", den)
