#include "cartankit/json_io.hpp"

#include <fstream>

#include "cartankit/error.hpp"

namespace cartankit::io {

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::size_t size_field(const json& j, const char* key, const char* what) {
  const json& v = field(j, key, what);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(std::string(what) + ": \"" + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Rational rational_from(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string in the RAT grammar");
  return parse_rational(j.get<std::string>());
}

}  // namespace

json to_json(const Scalar& s, Style style) {
  if (style.real_output && s.is_real()) return to_string(s.re());
  return json{{"im", to_string(s.im())}, {"re", to_string(s.re())}};
}

json to_json(const Vec& v, Style style) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s, style));
  return out;
}

json to_json(const Mat& m, Style style) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row_vec(i), style));
  return json{{"cols", m.cols()}, {"entries", rows}, {"rows", m.rows()}};
}

json to_json(const Subspace& s, Style style) {
  return json{{"ambient_dim", s.ambient_dim()}, {"basis", to_json(s.basis(), style)}};
}

json to_json(const LieAlgebra& l, Style style) {
  json basis = json::array();
  for (const auto& b : l.basis()) basis.push_back(to_json(b, style));
  return json{{"ambient", l.ambient()}, {"basis", basis}};
}

json to_json(const GroupContext& g, Style style) {
  return json{{"ambient", g.ambient()}, {"hint", to_string(g.hint())}, {"lie", to_json(g.lie(), style)},
              {"name", g.name()}};
}

json to_json(const SplitFailure& f, Style style) {
  return json{{"context", f.context},
              {"error", "split_failure"},
              {"factor", f.factor.to_string()},
              {"factor_coeffs", to_json(f.factor.coeffs(), style)}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (!j.is_object()) throw InputError("scalar must be a RAT string or {\"re\", \"im\"}");
  Rational re = rational_from(field(j, "re", "scalar"), "scalar \"re\"");
  auto it = j.find("im");
  if (it == j.end()) return Scalar(re);
  return Scalar(re, rational_from(*it, "scalar \"im\""));
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("vector must be a JSON array of scalars");
  Vec v;
  v.reserve(j.size());
  for (const auto& s : j) v.push_back(scalar_from_json(s));
  return v;
}

Mat mat_from_json(const json& j) {
  std::size_t rows = size_field(j, "rows", "matrix");
  std::size_t cols = size_field(j, "cols", "matrix");
  const json& entries = field(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows) {
    throw InputError("matrix \"entries\" must hold " + std::to_string(rows) + " rows");
  }
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Vec r = vec_from_json(entries[i]);
    if (r.size() != cols) {
      throw InputError("matrix row " + std::to_string(i) + " has " + std::to_string(r.size()) +
                       " entries, expected " + std::to_string(cols));
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = std::move(r[k]);
  }
  return m;
}

Subspace subspace_from_json(const json& j) {
  std::size_t n = size_field(j, "ambient_dim", "subspace");
  Mat b = mat_from_json(field(j, "basis", "subspace"));
  if (b.cols() != n) throw InputError("subspace basis has " + std::to_string(b.cols()) + " columns, expected " + std::to_string(n));
  if (b.rows() == 0) return Subspace(n);
  return Subspace::row_space(b);
}

LieAlgebra lie_from_json(const json& j) {
  std::size_t n = size_field(j, "ambient", "Lie algebra");
  const json& basis = field(j, "basis", "Lie algebra");
  if (!basis.is_array()) throw InputError("Lie algebra \"basis\" must be an array of matrices");
  std::vector<Mat> mats;
  for (const auto& m : basis) {
    mats.push_back(mat_from_json(m));
    if (mats.back().rows() != n || mats.back().cols() != n) {
      throw InputError("Lie algebra basis element " + std::to_string(mats.size() - 1) + " is not " +
                       std::to_string(n) + "x" + std::to_string(n));
    }
  }
  return LieAlgebra::from_matrices(n, mats);
}

GroupContext group_from_json(const json& j) {
  const json& name = field(j, "name", "group");
  if (!name.is_string()) throw InputError("group \"name\" must be a string");
  std::size_t n = size_field(j, "ambient", "group");
  LieAlgebra lie = lie_from_json(field(j, "lie", "group"));
  if (lie.ambient() != n) throw InputError("group \"ambient\" does not match its Lie algebra");
  MembershipHint hint = MembershipHint::None;
  if (auto it = j.find("hint"); it != j.end()) {
    if (!it->is_string()) throw InputError("group \"hint\" must be a string");
    hint = parse_hint(it->get<std::string>());
  }
  return {name.get<std::string>(), std::move(lie), hint};
}

Subspace subalgebra_from_json(const json& j, const LieAlgebra& l) {
  if (!j.is_object()) throw InputError("subalgebra must be {\"vectors\": ...} or {\"indices\": ...}");
  if (auto it = j.find("indices"); it != j.end()) {
    if (!it->is_array()) throw InputError("subalgebra \"indices\" must be an array");
    std::vector<Vec> vs;
    for (const auto& k : *it) {
      if (!k.is_number_integer() || k.get<long long>() < 0 || k.get<std::size_t>() >= l.dim()) {
        throw InputError("subalgebra index " + k.dump() + " is out of range for dim " + std::to_string(l.dim()));
      }
      vs.push_back(l.unit(k.get<std::size_t>()));
    }
    return Subspace::span(l.dim(), vs);
  }
  const json& vectors = field(j, "vectors", "subalgebra");
  if (!vectors.is_array()) throw InputError("subalgebra \"vectors\" must be an array");
  std::vector<Vec> vs;
  for (const auto& v : vectors) {
    vs.push_back(vec_from_json(v));
    if (vs.back().size() != l.dim()) {
      throw InputError("subalgebra vector " + std::to_string(vs.size() - 1) + " has length " +
                       std::to_string(vs.back().size()) + ", expected " + std::to_string(l.dim()));
    }
  }
  return Subspace::span(l.dim(), vs);
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace cartankit::io
