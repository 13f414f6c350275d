#include "percolattice/bounds.hpp"

#include <stdexcept>

#include "percolattice/rings.hpp"

namespace percolattice {

namespace {

void check_p(const Rational& p) {
    if (!(Rational(0) < p && p < Rational(1)))
        throw std::invalid_argument("p must be in (0,1)");
}

}  // namespace

Rational tail_bound(BoundFamily family, const Rational& p, int t) {
    check_p(p);
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    const Rational q = Rational(1) - p;
    if (family == BoundFamily::kTruncSquare488)
        return Rational(4) * q.pow(2 * t + 1) / (Rational(1) - q * q);
    return Rational(6) * q.pow(t) / p;
}

namespace {

SuccessBound assemble(BoundFamily family, const Rational& p, int t, int exponent) {
    SuccessBound out;
    out.exponent = exponent;
    Rational factor = Rational(1) - tail_bound(family, p, t);
    out.value = factor.sign() > 0 ? p.pow(exponent) * factor : Rational(0);
    int tm = 0;
    while (!(tail_bound(family, p, tm) < Rational(1))) ++tm;
    out.minimal_t = tm;
    return out;
}

}  // namespace

SuccessBound success_lower_bound_488(const Rational& p, int t) {
    check_p(p);
    const int octagons = (2 * t + 1) * (2 * t + 1);
    return assemble(BoundFamily::kTruncSquare488, p, t, octagons);
}

SuccessBound success_lower_bound_strips(const StripSequence& seq, const Rational& p, int t) {
    check_p(p);
    RingWindow w = strip_ring_decomposition(seq, t);
    return assemble(BoundFamily::kStrips, p, t, static_cast<int>(w.ring.core.size()));
}

}  // namespace percolattice
