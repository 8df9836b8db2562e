"""Run the exact certificates and show how tight the enclosures are.

Every inequality is decided with rational intervals.  The last block flips
one relation on purpose to show that the machinery refutes it.

    python demos/certify.py
"""

from fractions import Fraction

from skinlab.exactcert import alpha_enclosure, beta0_enclosure, verify_all


def show(label: str, iv) -> None:
    print(f"  {label:14s} [{float(iv.lo):.15f}, {float(iv.hi):.15f}]  width {float(iv.width()):.1e}")


def main() -> None:
    report = verify_all()
    for e in report.entries:
        print(f"{e.id:15s} {e.verdict:9s} {e.precision_bits:4d} bits {e.elapsed_ms:8.1f} ms   {e.statement}")
    print(f"\nall proved: {report.all_proved}")

    print("\nenclosures at 128 bits:")
    for t in (Fraction(1), Fraction(1, 2), Fraction(2, 5)):
        show(f"alpha({t})", alpha_enclosure(t, 128))
        show(f"beta(0, {t})", beta0_enclosure(t, 128))

    flipped = verify_all(only=["A4"], negate=["A4"]).entries[0]
    print(f"\nA4 with its relation reversed: {flipped.verdict}")


if __name__ == "__main__":
    main()
