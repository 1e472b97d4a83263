#include "gwcalc/correspondence.hpp"

#include <stdexcept>

#include "gwcalc/genus_sequence.hpp"

namespace gwcalc {

GenusSequence GenusSequence::impulse(int order, long c1_pairing, std::string label) {
    return from_series(EvenSeries::unit(order), c1_pairing, std::move(label));
}

GenusSequence GenusSequence::zero(int order, long c1_pairing, std::string label) {
    return from_series(EvenSeries(order), c1_pairing, std::move(label));
}

const char* to_string(CorrespondenceKind kind) {
    switch (kind) {
    case CorrespondenceKind::PointPrimary: return "point-primary";
    case CorrespondenceKind::PointDescendant: return "point-descendant";
    case CorrespondenceKind::ExceptionalTau: return "exceptional-tau";
    case CorrespondenceKind::Curve: return "curve";
    }
    throw std::logic_error("unknown correspondence kind");
}

GenusSequence convolve(const GenusSequence& c, const GenusSequence& p) {
    if (c.values.size() != p.values.size())
        throw LengthMismatch("convolve: sequences of length " +
                             std::to_string(c.values.size()) + " and " +
                             std::to_string(p.values.size()));
    int n = c.order();
    GenusSequence h;
    h.values.resize(n + 1);
    h.c1_pairing = p.c1_pairing;
    for (int g = 0; g <= n; ++g) {
        Rational acc;
        for (int i = 0; i <= g; ++i)
            acc += c.values[i] * p.values[g - i];
        h.values[g] = std::move(acc);
    }
    return h;
}

GenusSequence deconvolve(const GenusSequence& product, const GenusSequence& factor) {
    if (product.values.size() != factor.values.size())
        throw LengthMismatch("deconvolve: sequences of length " +
                             std::to_string(product.values.size()) + " and " +
                             std::to_string(factor.values.size()));
    if (factor.values.at(0).is_zero())
        throw SingularSystem("deconvolve: leading entry of the triangular system is zero");
    int n = product.order();
    GenusSequence c;
    c.values.resize(n + 1);
    for (int g = 0; g <= n; ++g) {
        Rational acc = product.values[g];
        for (int i = 0; i < g; ++i)
            acc -= c.values[i] * factor.values[g - i];
        c.values[g] = acc / factor.values[0];
    }
    return c;
}

GenusSequence closed_form(CorrespondenceKind kind, int order) {
    GenusSequence c;
    c.values.resize(order + 1);
    c.label = to_string(kind);
    for (int g = 0; g <= order; ++g) {
        Rational sign(g % 2 == 0 ? 1 : -1);
        switch (kind) {
        case CorrespondenceKind::PointPrimary:
            c.values[g] = sign * Rational(2) / Rational::factorial(2ul * g + 2);
            break;
        case CorrespondenceKind::PointDescendant:
            c.values[g] = sign / Rational::factorial(2ul * g + 1);
            break;
        case CorrespondenceKind::ExceptionalTau:
            c.values[g] = Rational(g == 0 ? 3 : 0) -
                          Rational(2) * sign / Rational::factorial(2ul * g + 1);
            break;
        case CorrespondenceKind::Curve:
            c.values[g] = sign / (Rational::factorial(2ul * g + 1) * Rational(4).pow(g));
            break;
        }
    }
    return c;
}

GenusSequence apply_blowup(CorrespondenceKind kind, const GenusSequence& upstairs) {
    GenusSequence h = convolve(closed_form(kind, upstairs.order()), upstairs);
    h.c1_pairing = upstairs.c1_pairing;
    h.label = upstairs.label;
    return h;
}

SpecializationData localization_data(CorrespondenceKind kind, int order) {
    // Known invariant values of the specialization geometries.  Each kind pins
    // the universal coefficients by one absolute sequence with an impulse
    // relative sequence; these constants come from virtual localization and
    // degenerate contribution computations, not from this artifact.
    SpecializationData data;
    data.absolute.values.resize(order + 1);
    for (int g = 0; g <= order; ++g) {
        Rational sign(g % 2 == 0 ? 1 : -1);
        switch (kind) {
        case CorrespondenceKind::PointPrimary:
            // <[pt],[pt]>_{g,L} on P^3: (-1)^g * 2/(2g+2)!
            data.absolute.values[g] = sign * Rational(2) / Rational::factorial(2ul * g + 2);
            data.absolute.label = "<[pt],[pt]>_{g,L} on P^3";
            data.relative = GenusSequence::impulse(order, 0, "<[pt]>_{g,F} on blown-up P^3");
            break;
        case CorrespondenceKind::PointDescendant:
            // <tau_1[pt],[L]>_{g,L} on P^3: (-1)^g/(2g+1)!
            data.absolute.values[g] = sign / Rational::factorial(2ul * g + 1);
            data.absolute.label = "<tau_1[pt],[L]>_{g,L} on P^3";
            data.relative = GenusSequence::impulse(order, 0, "<-E^2,[L]>_{g,F} on blown-up P^3");
            break;
        case CorrespondenceKind::ExceptionalTau:
            // <tau_1 E,L>_{g,F} on blown-up P^3: 3*d_{g,0} - 2*(-1)^g/(2g+1)!
            data.absolute.values[g] = Rational(g == 0 ? 3 : 0) -
                                      Rational(2) * sign / Rational::factorial(2ul * g + 1);
            data.absolute.label = "<tau_1 E,L>_{g,F} on blown-up P^3";
            data.relative = GenusSequence::impulse(order, 0, "<-E^2,L>_{g,F} on blown-up P^3");
            break;
        case CorrespondenceKind::Curve:
            // <[C],[pt]>_{g,F} on the fiberwise compactified normal bundle of
            // the curve: (-1)^g/((2g+1)! * 4^g), the degenerate contribution
            // of the unique line through the two constraints.
            data.absolute.values[g] =
                sign / (Rational::factorial(2ul * g + 1) * Rational(4).pow(g));
            data.absolute.label = "<[C],[pt]>_{g,F} on P_C(N+O)";
            data.relative = GenusSequence::impulse(order, 0, "<[pt]>_{g,F} on P_E(N+O)");
            break;
        }
    }
    return data;
}

bool ClosedFormReport::all_match() const {
    if (!series_match)
        return false;
    for (bool b : genus_match)
        if (!b)
            return false;
    return true;
}

namespace {

EvenSeries analytic_series(CorrespondenceKind kind, int order) {
    switch (kind) {
    case CorrespondenceKind::PointPrimary:
        return sinc_half(order).pow(2);
    case CorrespondenceKind::PointDescendant:
        return sin_u_over_u(order);
    case CorrespondenceKind::ExceptionalTau:
        return Rational(3) * EvenSeries::unit(order) - Rational(2) * sin_u_over_u(order);
    case CorrespondenceKind::Curve:
        return sinc_half(order);
    }
    throw std::logic_error("unknown correspondence kind");
}

} // namespace

ClosedFormReport verify_closed_form(CorrespondenceKind kind, int order) {
    ClosedFormReport report;
    report.kind = kind;
    SpecializationData data = localization_data(kind, order);
    GenusSequence solved = deconvolve(data.absolute, data.relative);
    GenusSequence expected = closed_form(kind, order);
    report.expected = expected.values;
    report.solved = solved.values;
    report.genus_match.resize(order + 1);
    for (int g = 0; g <= order; ++g)
        report.genus_match[g] = solved.values[g] == expected.values[g];
    report.series_match = expected.to_series() == analytic_series(kind, order);
    return report;
}

bool GeneratingFunctionReport::all_match() const {
    for (bool b : genus_match)
        if (!b)
            return false;
    return true;
}

GeneratingFunctionReport generating_function_check(const GenusSequence& upstairs) {
    GeneratingFunctionReport report;
    int n = upstairs.order();
    GenusSequence via_conv = apply_blowup(CorrespondenceKind::PointPrimary, upstairs);
    EvenSeries via_series = sinc_half(n).pow(2) * upstairs.to_series();
    report.via_convolution = via_conv.values;
    report.via_series = via_series.coeffs();
    report.genus_match.resize(n + 1);
    for (int g = 0; g <= n; ++g)
        report.genus_match[g] = via_conv.values[g] == via_series.coeff(g);
    return report;
}

} // namespace gwcalc
