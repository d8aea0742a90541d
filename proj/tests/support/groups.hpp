#pragma once

// Hand-classified permutation groups. Entries with the same `iso_class`
// are isomorphic; different classes are not.

#include <functional>
#include <string>
#include <vector>

#include "cover/permgroup.hpp"

namespace groups {

struct Named {
  std::string name;
  std::string iso_class;
  cover::PermGroup group;
};

/// Left regular representation of a group given by its multiplication.
cover::PermGroup regular(std::uint32_t order, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul);

cover::PermGroup cyclic(std::uint32_t n);
cover::PermGroup dihedral(std::uint32_t n);  // order 2n on n points
cover::PermGroup symmetric(std::uint32_t n);

/// Groups of order at most 12, several in more than one representation.
std::vector<Named> small_catalog();

/// Groups of order at most 48 used for exhaustive element sweeps.
std::vector<Named> sweep_catalog();

}  // namespace groups
