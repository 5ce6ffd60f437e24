#pragma once

// JSON forms of scalars, matrices, subspaces, algebras and groups. Scalars
// ride in strings so no value ever passes through a floating-point number.

#include <json.hpp>

#include <string>

#include "cartankit/field.hpp"
#include "cartankit/group.hpp"
#include "cartankit/liealg.hpp"
#include "cartankit/linalg.hpp"

namespace cartankit::io {

using json = nlohmann::json;

struct Style {
  bool real_output = false;  // real scalars as bare RAT strings
};

json to_json(const Scalar& s, Style style = {});
json to_json(const Vec& v, Style style = {});
json to_json(const Mat& m, Style style = {});
json to_json(const Subspace& s, Style style = {});
json to_json(const LieAlgebra& l, Style style = {});
json to_json(const GroupContext& g, Style style = {});
json to_json(const SplitFailure& f, Style style = {});

// Readers throw InputError naming the offending field.
Scalar scalar_from_json(const json& j);
Vec vec_from_json(const json& j);
Mat mat_from_json(const json& j);
Subspace subspace_from_json(const json& j);
LieAlgebra lie_from_json(const json& j);
GroupContext group_from_json(const json& j);
/// {"vectors": [[SCALAR, ...], ...]} or {"indices": [i, ...]}.
Subspace subalgebra_from_json(const json& j, const LieAlgebra& l);

/// Parse a file; InputError on I/O or syntax errors.
json read_file(const std::string& path);

}  // namespace cartankit::io
