#!/usr/bin/env python3
"""Where do frequencies live before anyone integrates anything?

A signal built from exponentials, sines, and polynomials has an operational
image: a strictly proper rational function of s.  The frequencies of the
signal are simply the imaginary parts of the poles of that image.  No
transform, no window, no asymptotics -- factoring a denominator is enough.

This walkthrough computes images and spectra for a handful of signals and
shows the two headline facts:

  * a pure tone at rate w puts poles at +iw and -iw, and nothing else does;
  * real poles (decays, polynomials, steps) contribute no frequency at all.
"""

from algspec import analyze, parse

SIGNALS = [
    "sin(3*t)",
    "cos(3*t)",
    "(t^2 + 1)*sin(3*t)",        # polynomial envelopes do not move the lines
    "exp(-t)*sin(3*t)",          # damping moves poles off the axis sideways
    "t^5",                       # all poles at the origin: silent
    "exp(-2*t)",                 # one real pole: silent
    "1 + t + exp(t)",            # still silent
    "sin(2*t) + sin(5*t)",       # two line pairs
    "dirac()",                   # image 1 has no poles at all
]


def _c(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:g}"
    if z.real == 0:
        return f"{z.imag:g}i"
    return f"{z.real:g} {'+' if z.imag > 0 else '-'} {abs(z.imag):g}i"


def describe(text: str) -> None:
    analysis = analyze(parse(text))
    spec = analysis.spectrum
    freqs = " ".join(f"{f:g}" for f in spec.frequencies) or "(none)"
    image = analysis.rational.format() if analysis.rational else "1"
    print(f"signal   : {text}")
    print(f"image    : {image}")
    print(f"spectrum : {freqs}")
    for source in spec.sources:
        print(f"           pole {_c(source.location)} of order {source.order}")
    print()


def main() -> None:
    print(__doc__)
    for text in SIGNALS:
        describe(text)
    print("Moral: the lines of the mixture sit exactly at the imaginary")
    print("parts of the poles; everything with only real poles is silent.")


if __name__ == "__main__":
    main()
