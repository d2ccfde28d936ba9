#include "rigiditykit/stokes.hpp"

namespace rigiditykit {

RigidityVerdict rigidity_verdict(const Spectrum<Rational>& s, const GradientData<Rational>& g) {
    RigidityVerdict verdict;
    verdict.A = A_via_L(s, g);
    if (verdict.A > 0) throw PositivityViolation("A = " + to_string(verdict.A) + " is positive");

    verdict.is_rigid = verdict.A == 0;
    bool f_zero = true;
    for (const Rational& x : g.f) {
        if (!(x == 0)) {
            f_zero = false;
            break;
        }
    }
    // Every L(r) < 0, so the quadratic form vanishes only at f = 0.
    if (verdict.is_rigid != f_zero)
        throw IdentityViolation("A = 0 does not coincide with f = 0");
    verdict.forced_f_zero = verdict.is_rigid;
    return verdict;
}

}  // namespace rigiditykit
