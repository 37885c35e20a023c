"""A non-simple sextic of type (6; 4,2^4,1^3) with a saturated base ideal.

Saturation of the base ideal does not force all base points to be proper:
here several of them are infinitely near.
"""
from planecremona import analyze_base_ideal, compute_characteristic, is_birational
from planecremona.cremona import example_sextic


def main():
    F = example_sextic()
    print(f"map: {F.to_text()}")
    print(f"birational: {is_birational(F)}")
    ch = compute_characteristic(F)
    print(f"homaloidal type: {ch}")
    print("base points:")
    print(ch.cluster.to_text())
    R = analyze_base_ideal(F, cremona=True)
    print(f"saturated: {R.saturated}  resolution: {R.betti.describe()}  e = {R.e}")


if __name__ == "__main__":
    main()
