#include "gwcalc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gwcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1)
        throw std::invalid_argument("enumerate_partitions needs n >= 1");
    std::vector<Partition> out;
    std::vector<int> current;
    // Descending-first recursion: each level appends parts no larger than the
    // previous one, so the output order is lexicographic descending.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Rational zeta(const Partition& mu) {
    Rational result(1);
    const auto& parts = mu.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        result *= Rational::factorial(j - i); // multiplicity factorial
        i = j;
    }
    for (int p : parts)
        result *= Rational(p);
    return result;
}

} // namespace gwcalc
