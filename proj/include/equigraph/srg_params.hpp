#pragma once

#include <cstdint>
#include <string>

namespace equigraph {

/// Parameters (n, k, e, d) of a strongly regular graph: n vertices, degree
/// k, e common neighbours for adjacent pairs, d for non-adjacent pairs.
struct SrgParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t e = 0;
    std::int64_t d = 0;

    friend auto operator<=>(const SrgParams&, const SrgParams&) = default;

    std::string str() const {
        return "srg(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(e) + "," +
               std::to_string(d) + ")";
    }
};

}  // namespace equigraph
