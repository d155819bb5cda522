#include "dioph/solvers/squbes.hpp"

#include "dioph/errors.hpp"

namespace dioph {
namespace solvers {

SqubeList squbes(const mpz_class& limit) {
    if (limit < 1) throw InvalidParameters("squbes: limit must be >= 1");
    SqubeList out;
    mpz_class s = 1, s_val = 1;  // next square
    mpz_class c = 1, c_val = 1;  // next cube
    while (s_val <= limit || c_val <= limit) {
        if (s_val <= limit && (c_val > limit || s_val <= c_val)) {
            if (s_val == c_val) {  // sixth power, emit once
                c += 1;
                c_val = c * c * c;
            }
            out.values.push_back(s_val);
            s += 1;
            s_val = s * s;
        } else {
            out.values.push_back(c_val);
            c += 1;
            c_val = c * c * c;
        }
    }
    return out;
}

std::vector<SqubeList::Gap> SqubeList::gaps() const {
    std::vector<Gap> out;
    for (size_t i = 0; i + 1 < values.size(); ++i) {
        out.push_back({values[i], values[i + 1], values[i + 1] - values[i]});
    }
    return out;
}

std::vector<SqubeList::Gap> SqubeList::occurrences_of_gap(const mpz_class& g) const {
    std::vector<Gap> out;
    for (size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i + 1] - values[i] == g) {
            out.push_back({values[i], values[i + 1], g});
        }
    }
    return out;
}

}  // namespace solvers
}  // namespace dioph
