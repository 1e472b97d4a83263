#pragma once

#include <string>
#include <vector>

#include "gwcalc/genus_sequence.hpp"

namespace gwcalc {

/// The four families of universal blow-up coefficients.  Each one relates an
/// invariant sequence downstairs to the plain sequence upstairs on the blown-up
/// manifold, genus by genus, through convolution with a fixed kernel:
///
///   PointPrimary    point blow-up, point insertion:     (-1)^g * 2/(2g+2)!
///   PointDescendant point blow-up, tau_1[pt] insertion: (-1)^g / (2g+1)!
///   ExceptionalTau  tau_1 E against -E^2 upstairs:      3*d_{g,0} - 2*(-1)^g/(2g+1)!
///   Curve           blow-up along a curve, [C] insertion: (-1)^g / ((2g+1)! * 4^g)
enum class CorrespondenceKind { PointPrimary, PointDescendant, ExceptionalTau, Curve };

const char* to_string(CorrespondenceKind kind);

/// Convolution h_g = sum_{i+j=g} c_i p_j.  Throws LengthMismatch unless both
/// sequences have the same truncation.
GenusSequence convolve(const GenusSequence& c, const GenusSequence& p);

/// Inverse of convolve in its first argument: the unique c with
/// convolve(c, factor) == product over the known range.  The system is lower
/// triangular Toeplitz and is solved by forward substitution; it is singular
/// exactly when factor_0 == 0 (SingularSystem).
GenusSequence deconvolve(const GenusSequence& product, const GenusSequence& factor);

/// The closed-form coefficient sequence of the given kind up to genus `order`.
GenusSequence closed_form(CorrespondenceKind kind, int order);

/// Convolves the closed form against an upstairs sequence, producing the
/// downstairs sequence of the corresponding blow-up statement.
GenusSequence apply_blowup(CorrespondenceKind kind, const GenusSequence& upstairs);

/// The defining specialization data of each kind: the absolute sequence is a
/// known invariant table (from virtual localization / degenerate contribution
/// computations) and the relative sequence is the impulse.  Deconvolving one
/// by the other must reproduce the closed form.
struct SpecializationData {
    GenusSequence absolute;
    GenusSequence relative;
};
SpecializationData localization_data(CorrespondenceKind kind, int order);

/// Per-genus comparison between the closed form and the sequence recovered by
/// solving the specialization system, plus the analytic-series identity for
/// the kind (e.g. the point-primary coefficients are those of (sin(u/2)/(u/2))^2).
struct ClosedFormReport {
    CorrespondenceKind kind;
    std::vector<bool> genus_match;
    std::vector<Rational> expected; // closed form
    std::vector<Rational> solved;   // from deconvolution of the specialization data
    bool series_match = false;
    bool all_match() const;
};
ClosedFormReport verify_closed_form(CorrespondenceKind kind, int order);

/// Checks the generating-function identity for the point-primary kind: the
/// blow-up convolution of a sequence equals multiplication of its series by
/// (sin(u/2)/(u/2))^2, computed through the series ring independently.
struct GeneratingFunctionReport {
    std::vector<bool> genus_match;
    std::vector<Rational> via_convolution;
    std::vector<Rational> via_series;
    bool all_match() const;
};
GeneratingFunctionReport generating_function_check(const GenusSequence& upstairs);

} // namespace gwcalc
