#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gwcalc {

/// Which piece of the degeneration a datum belongs to.  The plus side is the
/// local model carrying the distinguished insertions; the minus side keeps the
/// generic geometry and insertions.
enum class Side { Plus, Minus };

/// Integer-affine functional on the degree lattice.  The offset term encodes
/// contributions of class directions that the preset pins by a constraint
/// instead of modelling as a coordinate (it is only ever applied to a side's
/// total class, never per component).
struct LinearForm {
    std::vector<long> coeffs;
    long offset = 0;

    long operator()(std::span<const long> v) const;
};

/// Linear condition on a side's total degree vector.
struct SideConstraint {
    enum class Kind { Equal, AtLeast };
    LinearForm form;
    long rhs = 0;
    Kind kind = Kind::Equal;
    Side side = Side::Plus;

    bool satisfied(std::span<const long> total) const;
};

/// Combinatorial model of a degeneration X = X+ \cup_Z X-: a small integer
/// lattice housing component degree classes, the first Chern functionals of
/// the two sides, the intersection functional with the common divisor Z, and
/// the cohomology degree spectrum of Z.
///
/// Conventions: every component's degree vector pairs with Z exactly to the
/// sum of its contact orders (enumeration enforces this); coordinate ranges
/// bound the per-component search space; constraints apply to side totals.
struct GeometryModel {
    int lattice_rank = 1;
    LinearForm c1_plus;        // evaluated on the plus side's total class
    LinearForm c1_minus;       // evaluated on the minus side's total class
    LinearForm divisor_pairing; // per-component pairing with Z (offset must be 0)
    std::vector<int> divisor_coh_degrees; // multiset of even degrees of a basis of H*(Z)
    int divisor_dim = 4;       // real dimension of Z
    std::vector<SideConstraint> constraints;
    std::vector<std::pair<long, long>> plus_coord_ranges;  // inclusive per-coordinate bounds
    std::vector<std::pair<long, long>> minus_coord_ranges;

    /// Distinct cohomology degrees, ascending.
    std::vector<int> distinct_degrees() const;
    /// Number of basis elements of the given degree.
    int degree_multiplicity(int degree) const;

    /// Checks rank consistency, evenness and Poincare symmetry of the degree
    /// spectrum, and that the pairing form has no offset.  Throws
    /// std::invalid_argument on violation.
    void validate() const;
};

/// Absolute insertion of a degeneration problem.  The degree is the full
/// cohomological degree of the integrand factor (class degree plus twice the
/// descendant power); it is only consulted for insertions on the plus side.
struct Insertion {
    std::string label;
    int degree = 0;
    Side side = Side::Minus;
};

/// Named geometry presets reproducing the degeneration setups of the blow-up
/// correspondences, with their distinguished plus-side insertions.
struct Preset {
    std::string name;
    GeometryModel geometry;
    std::vector<Insertion> distinguished; // pinned to the plus side
};

/// Known preset names: "p3-point", "p3tilde-point", "p3-point-tau",
/// "curve-plus", "curve-tilde-plus".  Throws std::invalid_argument otherwise.
Preset preset(std::string_view name);

std::vector<std::string> preset_names();

} // namespace gwcalc
