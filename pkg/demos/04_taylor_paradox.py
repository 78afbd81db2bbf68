#!/usr/bin/env python3
"""A polynomial can hug a sine as tightly as you like -- and stay silent.

Take sin(2t) and its degree-5 Taylor truncation at t = 0.  On a short
window the two are numerically indistinguishable.  Yet their spectra are
as different as can be: the sine has lines at -2 and 2, the polynomial has
none, because its only pole sits at the origin of the s-plane.

Frequency, in other words, is not a local property of the graph of a
signal.  It lives in the algebraic form of the whole expression.
"""

import math

import numpy as np

from algspec import (analyze, parse, spectrum_of_rational, taylor_truncate,
                     to_rational)


def main() -> None:
    print(__doc__)
    e = parse("sin(2*t)")
    x = taylor_truncate(e, 0.0, 5)
    print(f"signal     : sin(2*t)")
    print(f"truncation : {x.format()}")

    ts = np.linspace(0.0, 0.1, 1001)
    errs = [abs(x.evaluate(float(t)) - math.sin(2.0 * float(t))) for t in ts]
    print(f"\nsup |difference| on [0, 0.1]  : {max(errs):.3e}")

    spec_sine = analyze(e).spectrum
    spec_poly = spectrum_of_rational(to_rational(x))
    print(f"spectrum of the sine          : "
          + " ".join(f"{f:g}" for f in spec_sine.frequencies))
    print(f"spectrum of the truncation    : "
          + (" ".join(f"{f:g}" for f in spec_poly.frequencies) or "(none)"))
    print(f"poles of the truncated image  : "
          + ", ".join(f"order {s.order} at {s.location:g}"
                      for s in spec_poly.sources))

    print("\nWiden the window and the approximation collapses while the")
    print("spectra stay fixed:")
    print("    window        sup error     sine lines   truncation lines")
    for t_end in (0.1, 0.5, 1.0, 2.0, 4.0):
        ts = np.linspace(0.0, t_end, 801)
        worst = max(abs(x.evaluate(float(t)) - math.sin(2.0 * float(t)))
                    for t in ts)
        print(f"    [0, {t_end:3g}]    {worst:12.3e}     -2 2         (none)")


if __name__ == "__main__":
    main()
