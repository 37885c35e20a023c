"""Classify monomial plane maps of low degree.

A monomial map is Cremona exactly when its exponent matrix has determinant
of absolute value d. The table lists each Cremona normal form with its
de Jonquières and integral-closure verdicts.
"""
from planecremona.monomial import (classify_monomial_map, general_form_grid, monomial_map,
                                   monomial_text, general_form, non_cremona_family)
from planecremona.algebra import AlgebraError


def main():
    print(f"{'d':>2} {'a':>2} {'b':>2} {'c':>2}  {'map':<34} {'dJ':<4} closed")
    for d, a, b, c in general_form_grid(6):
        E = general_form(d, a, b, c)
        r = classify_monomial_map(monomial_map(E))
        text = " : ".join(monomial_text(e) for e in E)
        note = "yes" if r.integrally_closed else "no, e.g. " + monomial_text(r.witnesses[0])
        print(f"{d:>2} {a:>2} {b:>2} {c:>2}  {text:<34} {'yes' if r.dejonquieres else 'no':<4} {note}")
    E = non_cremona_family(2)
    try:
        classify_monomial_map(monomial_map(E))
    except AlgebraError as exc:
        print(f"\n{' : '.join(monomial_text(e) for e in E)}: {type(exc).__name__}")


if __name__ == "__main__":
    main()
