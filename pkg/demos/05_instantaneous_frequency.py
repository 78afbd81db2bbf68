#!/usr/bin/env python3
"""One signal, one instant, two answers for 'what frequency is it now?'

The analytic-signal construction assigns the pure tone A*sin(wt) the
constant instantaneous frequency w.  A curvature-style functional of the
graph,

    Phi(t) = x''(t) / sqrt(1 + x'(t)^2),

assigns the same tone a value that swings through every period -- signed
like the second derivative, with magnitude peaking where the tone turns.
Neither is wrong; they answer different questions.  This script prints
both, then shows that the sliding-window polynomial fit recovers Phi from
plain samples with no symbolic help.
"""

import math

from algspec import (SampledSignal, parse, phi_fitted, phi_symbolic,
                     phi_vs_ville_note)


def main() -> None:
    print(__doc__)
    print(phi_vs_ville_note(parse("sin(2*t)")).to_text())

    print("\nThe same Phi, estimated from 200 Hz samples (window 11,")
    print("degree 3) instead of from the formula:")
    e = parse("sin(2*t)")
    n = 601
    times = tuple(k / 200.0 for k in range(n))
    sig = SampledSignal(times, tuple(math.sin(2.0 * t) for t in times))
    trace = phi_fitted(sig, window=11, degree=3)
    print("        t    symbolic      fitted         gap")
    worst = 0.0
    for k in range(0, len(trace.times), 75):
        t, fitted = trace.times[k], trace.phi[k]
        exact = phi_symbolic(e, t)
        worst = max(worst, abs(fitted - exact))
        print(f"{t:9.3f} {exact:11.6f} {fitted:11.6f} {abs(fitted-exact):11.2e}")
    worst = max(abs(p - phi_symbolic(e, t))
                for t, p in zip(trace.times, trace.phi))
    print(f"max gap over all {len(trace.times)} interior points: {worst:.2e}")

    print("\nPhi on other shapes (sign tracks the bend of the graph):")
    for text, t in (("t", 1.0), ("t^2", 0.0), ("t^2", 1.0),
                    ("exp(-t)", 0.0), ("3*sin(2*t)", math.pi / 4)):
        print(f"  Phi[{text:10s}]({t:5.3f}) = {phi_symbolic(parse(text), t):9.5f}")


if __name__ == "__main__":
    main()
