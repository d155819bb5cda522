#pragma once

#include <gmpxx.h>

#include <vector>

namespace dioph {
namespace solvers {

// Sorted distinct perfect squares and cubes up to limit, with consecutive
// gaps ("squbes").
struct SqubeList {
    std::vector<mpz_class> values;

    struct Gap {
        mpz_class from;
        mpz_class to;
        mpz_class size;
    };
    std::vector<Gap> gaps() const;
    // All consecutive pairs with the given gap.
    std::vector<Gap> occurrences_of_gap(const mpz_class& g) const;
};

SqubeList squbes(const mpz_class& limit);

}  // namespace solvers
}  // namespace dioph
