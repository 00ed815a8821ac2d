#pragma once

#include <map>
#include <string>

#include "appnorm/space.hpp"

namespace appnorm {

struct catalog_entry {
    std::string name;
    finite_space space;
    // Sets the source singles out for the entry (counterexample pairs etc).
    std::map<std::string, std::vector<std::string>> designated;
    std::string provenance;
};

struct catalog_descriptor {
    std::string name;
    std::string params;  // human-readable parameter list
    std::string summary;
};

std::vector<catalog_descriptor> catalog_list();

// Named instances; throws UnknownEntry / BadParams.
//   exInorm                      3-point quasi-metric counterexample
//   exVO                         4-point literal; exVO-repaired designates the
//                                pair whose separation degree is 4
//   pplus-grid     n             x (-) y on {0..n}
//   sorgenfrey-grid n step       y - x forward, inf backward
//   qS-grid        n step        sum quasi-metric on an n x n grid square
//   Xn-grid        n m           anti-diagonal sample of the qS plane
//   random-metric  n seed        symmetric, triangle-completed
//   random-quasimetric n seed    directed, triangle-completed
catalog_entry catalog_get(const std::string& name,
                          const std::map<std::string, std::string>& params = {});

finite_space catalog_random_metric(std::size_t n, std::uint64_t seed);
finite_space catalog_random_quasimetric(std::size_t n, std::uint64_t seed);

// Random finite topology via a transitively closed random relation; not a
// catalog entry, used by the randomized suites.
finite_space random_preorder_space(std::size_t n, std::uint64_t seed);
closure_relation random_preorder(std::size_t n, std::uint64_t seed);

}  // namespace appnorm
