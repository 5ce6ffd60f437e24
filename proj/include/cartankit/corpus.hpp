#pragma once

// Built-in matrix groups with hand-checked structure.

#include <string>
#include <vector>

#include "cartankit/group.hpp"

namespace cartankit::corpus {

// Standard sl2 basis and the rotation generator J = E - F.
Mat H();
Mat E();
Mat F();
Mat J();

const std::vector<std::string>& names();
bool has(const std::string& name);
/// Throws InputError for unknown names.
GroupContext group(const std::string& name);
std::string description(const std::string& name);

/// Hard-coded Cartan subalgebras, in Lie algebra coordinates.
std::vector<Subspace> known_cartans(const std::string& name);
/// Nilpotent subalgebras (Cartans included) used for g0 checks.
std::vector<Subspace> nilpotent_subalgebras(const std::string& name);
/// Elements of N_G(h) \ C(h), one list per known Cartan.
std::vector<std::vector<Mat>> weyl_witnesses(const std::string& name);

struct Structure {
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
};
Structure known_structure(const std::string& name);

}  // namespace cartankit::corpus
