"""Factoring ideals into powers of distinct primes, and recomposing them.

Two flavours: a graded ideal splitting along the maximal tails of its
quotient, and a polynomial ideal splitting with its polynomial.
"""

from lpaideals import (
    FieldSpec,
    Poly,
    canonicalize,
    factor_completely_irreducible,
    factor_prime_powers,
    graded_ideal,
    intersect,
    ideal_power,
    multiply,
    one_loop,
    petals,
)
from lpaideals.graphs import Cycle

GF2 = FieldSpec.prime_field(2)


def report(title, rep):
    print(title)
    if rep is None:
        print("  not factorable\n")
        return
    for prime, exponent in rep.factors:
        print(f"  {prime!r} ^ {exponent}")
    print(f"  mode={rep.mode} irredundant={rep.irredundant}")
    print(f"  checksum={rep.checksum[:16]}...\n")


def main():
    g = petals()
    sink = graded_ideal(g, ("v0",))
    rep = factor_completely_irreducible(sink)
    report("sink ideal of the three-petal graph:", rep)

    powers = [ideal_power(p, r) for p, r in rep.factors]
    print("recomposition checks:")
    print("  product    ==", multiply(powers) == sink)
    print("  intersection ==", intersect(powers) == sink)
    print()

    # (x+1)^2 (x^2+x+1) over GF(2) on the single exitless loop
    loop = Cycle.build(("v",), ("e",))
    ideal = canonicalize(one_loop(), (), (),
                         [(loop, Poly(GF2, (1, 1, 0, 1, 1)))])
    report("polynomial ideal <(x+1)^2 (x^2+x+1)> over GF(2):",
           factor_prime_powers(ideal))

    # the zero ideal of the loop fails: the loop has no exit, so the only
    # candidate factorization is the ideal itself, which is prime but not
    # completely irreducible
    report("zero ideal of the single loop, complete-irreducible mode:",
           factor_completely_irreducible(
               canonicalize(one_loop(), ())))


if __name__ == "__main__":
    main()
