#!/usr/bin/env python3
"""Same signals, two notions of spectrum, side by side.

The algebraic route reads frequencies off poles and singular points; the
Fourier route integrates.  For signals where both make sense they agree on
where the energy is -- and disagree instructively on what 'spectrum' means:

  * the impulse: no poles at all versus a perfectly flat magnitude;
  * the cardinal sine: two singular points versus a filled rectangle whose
    edges sit exactly at those points;
  * the pure tone: a pole pair versus two dominant DFT bins whose accuracy
    is limited by the sampling window.
"""

from algspec import contrast_report, dft, parse, sinc_fourier_closed_form
from algspec.instfreq import SampledSignal


def main() -> None:
    print(__doc__)
    for text in ("dirac()", "sinc(3)", "sin(3*t)"):
        report = contrast_report(parse(text))
        print(report.to_text())
        print()

    print("The rectangle's edge, by the closed form (omega = 3):")
    for xi in (0.0, 2.9, 2.999, 3.0, 3.001, 3.1):
        val = sinc_fourier_closed_form(3.0, xi)
        print(f"  value at xi = {xi:5g} : {val:g}")
    print("  (at the jump the convention here is the midpoint omega/2)")

    print("\nWhat the DFT adds and what it costs: the tone's line pair is")
    print("recovered only to the bin resolution of the sampling window,")
    print("while the algebraic route names the rate exactly:")
    import math
    for n in (64, 256, 1024):
        dt = 0.05
        times = tuple(k * dt for k in range(n))
        sig = SampledSignal(times, tuple(math.sin(3.0 * t) for t in times))
        got = sorted(dft(sig).dominant_frequencies(2))
        res = 2.0 * math.pi / (n * dt)
        print(f"  n = {n:4d}: dominant bins {got[0]:+.4f} {got[1]:+.4f}"
              f"   (bin width {res:.4f})")


if __name__ == "__main__":
    main()
