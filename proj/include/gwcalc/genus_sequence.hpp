#pragma once

#include <string>
#include <vector>

#include "gwcalc/even_series.hpp"
#include "gwcalc/rational.hpp"

namespace gwcalc {

/// A genus-indexed sequence of exact invariant values for one fixed class and
/// insertion list: values[g] for g = 0..G.  Carries the first Chern pairing of
/// the class (consumed by the BPS module) and a free-form label describing
/// what is being counted.
struct GenusSequence {
    std::vector<Rational> values;
    long c1_pairing = 0;
    std::string label;

    int order() const { return static_cast<int>(values.size()) - 1; }

    EvenSeries to_series() const { return EvenSeries(values); }

    static GenusSequence from_series(const EvenSeries& s, long c1_pairing = 0,
                                     std::string label = {}) {
        return GenusSequence{s.coeffs(), c1_pairing, std::move(label)};
    }

    /// (1, 0, ..., 0): the convolution unit.
    static GenusSequence impulse(int order, long c1_pairing = 0, std::string label = {});
    static GenusSequence zero(int order, long c1_pairing = 0, std::string label = {});
};

} // namespace gwcalc
