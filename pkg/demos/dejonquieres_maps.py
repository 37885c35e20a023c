"""Build de Jonquières maps of increasing degree and read off their invariants.

For each degree the base ideal has a Hilbert-Burch resolution with one
syzygy of degree 1 and one of degree d - 1. The Sylvester forms then give
the full set of Rees equations.
"""
from planecremona import (analyze_base_ideal, compute_characteristic, is_birational,
                          make_dejonquieres, sylvester_rees)


def main():
    for d in range(2, 6):
        F = make_dejonquieres(d, seed=7)
        R = analyze_base_ideal(F, cremona=True)
        ch = compute_characteristic(F)
        print(f"degree {d}")
        print(f"  map: {F.to_text()}")
        print(f"  birational: {is_birational(F)}  type: {ch}")
        print(f"  resolution: {R.betti.describe()}  e(R/I) = {R.e}  saturated: {R.saturated}")
        if d >= 3:
            E = sylvester_rees(F)
            print(f"  Rees bidegrees: {E.bidegrees}")
        print()


if __name__ == "__main__":
    main()
