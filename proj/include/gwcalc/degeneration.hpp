#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gwcalc/geometry.hpp"
#include "gwcalc/invariant_table.hpp"
#include "gwcalc/partition.hpp"
#include "gwcalc/rational.hpp"

namespace gwcalc {

/// One connected piece of a relative stable-map topological type: genus,
/// degree class, the absolute marks it carries (indices into the problem's
/// insertion list) and its contact orders along the divisor.
struct RelativeGraphComponent {
    int genus = 0;
    std::vector<long> degree;
    std::vector<int> abs_marks; // sorted
    std::vector<int> rel_marks; // sorted contact orders

    /// Degree-zero components must be stable as marked curves.
    bool stable() const;
};

/// A possibly disconnected topological type: a multiset of components.
struct RelativeGraph {
    std::vector<RelativeGraphComponent> components;

    int size() const { return static_cast<int>(components.size()); }
    int total_genus() const;
    std::vector<long> total_degree(int rank) const;
};

/// One glued contact point: a part of mu together with the cohomology degree
/// of the dual-basis class inserted on the minus side (the plus side receives
/// the complementary degree) and the component it lies on, on each side.
struct MatchedSlot {
    int order = 1;
    int delta_degree = 0;
    int plus_component = 0;
    int minus_component = 0;
};

/// A term index of the degeneration formula: two relative graphs with the
/// same contact partition, an identification of their relative marks (the
/// slots), and a dual-basis degree assignment.  Triples are kept in a
/// canonical labeling, deduplicated up to component relabeling and
/// permutations of equal slots.
struct AdmissibleTriple {
    RelativeGraph plus;
    RelativeGraph minus;
    Partition mu;
    std::vector<MatchedSlot> slots;

    std::vector<int> delta_degrees() const; // per slot, in slot order

    /// Arithmetic genus of the glued curve:
    /// g1 + g2 + l(mu) + 1 - |Gamma1| - |Gamma2|.
    int glued_genus() const;

    /// True when the component graph glued along the slots is connected.
    bool glued_connected() const;
};

/// Verifies the genus relation g = g1 + g2 + l(mu) + 1 - |G1| - |G2| from the
/// raw triple data, independently of the enumerator's bookkeeping.
bool genus_relation_holds(const AdmissibleTriple& triple, int total_genus);

/// A degeneration-formula instance: the total genus, the absolute insertions
/// with their side assignments, and optional extra constraints on the side
/// totals (merged with the geometry's own).
struct DegenerationProblem {
    int total_genus = 0;
    std::vector<Insertion> insertions;
    std::vector<SideConstraint> degree_budget;
};

struct EnumerationCaps {
    int max_components = 3; // per side
    int max_mu = 6;         // largest |mu| explored
    long max_triples = 200000; // safety budget; breaching it raises CapExceeded
};

/// All admissible triples of the problem within the caps, canonically labeled
/// and deterministically ordered.  Throws CapExceeded when the enumeration
/// would grow past caps.max_triples.
std::vector<AdmissibleTriple> enumerate_admissible_triples(const DegenerationProblem& problem,
                                                           const GeometryModel& geometry,
                                                           const EnumerationCaps& caps);

/// Result of the dimension-constraint test for one triple: the term can be
/// nonzero only if the plus-side integrand degree matches the plus-side
/// virtual dimension (assuming the problem itself is dimensionally matched).
struct DimensionDiagnostic {
    bool pass = false;
    long moduli_dim_plus = 0;   // 2*c1+(A+) + 2*m+ + 2*l(mu) - 2*|mu|
    long integrand_deg_plus = 0; // plus insertion degrees + complementary delta degrees
    std::string equation;        // the reduced equation with values substituted
};

DimensionDiagnostic dimension_filter(const AdmissibleTriple& triple,
                                     const DegenerationProblem& problem,
                                     const GeometryModel& geometry);

/// One surviving triple, reported by its discrete data.
struct SurvivorRecord {
    std::vector<int> mu;
    std::vector<int> delta_degrees;
    std::array<int, 2> genus_split{};
    std::array<int, 2> components{};
    std::vector<long> plus_class;
};

/// The (mu, delta-degree, plus-class) shape shared by survivors; the lemma
/// statements each pin exactly one such profile.
struct SurvivorProfile {
    std::vector<int> mu;
    std::vector<int> delta_degrees;
    std::vector<long> plus_class;

    friend bool operator==(const SurvivorProfile&, const SurvivorProfile&) = default;
    friend auto operator<=>(const SurvivorProfile&, const SurvivorProfile&) = default;
};

struct SurvivorsReport {
    std::string preset;
    int genus_max = 0;
    int marks_max = 0;
    struct Entry {
        int genus = 0;
        int extra_marks = 0;
        std::vector<SurvivorRecord> survivors;
    };
    std::vector<Entry> entries;
    std::vector<SurvivorProfile> profiles; // deduplicated over all entries
};

/// Enumerates and filters triples for every genus <= genus_max and every
/// count of generic minus-side insertions <= marks_max.  Filtering happens on
/// the (mu, delta, plus-class) level first -- the dimension equation reads
/// nothing else -- and only surviving shapes are expanded into triples.
SurvivorsReport survivors_report(const Preset& preset, int genus_max, int marks_max,
                                 const EnumerationCaps& caps);
SurvivorsReport survivors_report(std::string_view preset_name, int genus_max, int marks_max,
                                 const EnumerationCaps& caps);

/// Evaluates the degeneration formula:
///   sum_mu z(mu) sum_{dual basis} sum_{triples} <...>+ * <...>-
/// with both factors looked up in the given tables (product rule over
/// components).  Triples eliminated by the dimension filter contribute zero
/// and are skipped; surviving lookups that miss raise MissingInvariant.
Rational evaluate_degeneration(const DegenerationProblem& problem,
                               const InvariantTable& plus_table,
                               const InvariantTable& minus_table,
                               const GeometryModel& geometry,
                               const EnumerationCaps& caps);

} // namespace gwcalc
