#pragma once

#include <vector>

#include "heispoly/rat.hpp"
#include "heispoly/step_function.hpp"

namespace heispoly {

/// Element of the continuous (current) extension over step functions:
/// central scalar + momentum density g + one coefficient density per power of
/// the position generator, fs[k-1] smearing the k-th power. All densities are
/// compactly supported rational step functions.
struct CurrentElement {
    int bound;  // N >= 1
    Rat central;
    StepFunction g;
    std::vector<StepFunction> fs;  // size == bound

    CurrentElement(int bound_, Rat central_, StepFunction g_, std::vector<StepFunction> fs_);

    friend bool operator==(const CurrentElement& a, const CurrentElement& b) {
        return a.bound == b.bound && a.central == b.central && a.g == b.g && a.fs == b.fs;
    }
    friend bool operator!=(const CurrentElement& a, const CurrentElement& b) { return !(a == b); }
};

/// Neutral element: zero central scalar and zero densities.
CurrentElement neutral_current(int bound);

/// Continuous composition law, realized cellwise on the common refinement:
/// on each cell the discrete law runs with u = g(s), v = G(s); the degree-zero
/// output coefficient integrates into the central scalar and higher degrees
/// become the output densities.
CurrentElement current_compose(const CurrentElement& e1, const CurrentElement& e2);

/// Closed composition law at bound 2 (continuous Galilei algebra):
/// central pairing terms plus q-part f1+F1+g*F2-G*f2 and q^2-part f2+F2.
CurrentElement galilei_compose_closed(const CurrentElement& e1, const CurrentElement& e2);

/// Phase of the Weyl relation W(f)W(h) = e^{i phase} W(f+h) for complex test
/// functions given as (real, imaginary) step-function pairs:
/// phase = -Im<f,h> = -(<f_re,h_im> - <f_im,h_re>).
Rat weyl_phase(const StepFunction& f_re, const StepFunction& f_im, const StepFunction& h_re,
               const StepFunction& h_im);

}  // namespace heispoly
