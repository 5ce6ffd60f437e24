#include "cartankit/corpus.hpp"

#include <algorithm>

#include "cartankit/error.hpp"

namespace cartankit::corpus {

namespace {

Mat e(std::size_t n, std::size_t i, std::size_t j) { return Mat::unit(n, i, j); }

Subspace span(std::size_t n, std::vector<Vec> v) { return Subspace::span(n, v); }

void require(const std::string& name) {
  if (!has(name)) throw InputError("unknown corpus group '" + name + "'");
}

}  // namespace

Mat H() { return Mat::diag({1, -1}); }
Mat E() { return e(2, 0, 1); }
Mat F() { return e(2, 1, 0); }
Mat J() { return E() - F(); }

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"b2", "gl2", "heis3", "sb2", "sl2", "torus2"};
  return all;
}

bool has(const std::string& name) { return std::ranges::find(names(), name) != names().end(); }

GroupContext group(const std::string& name) {
  require(name);
  if (name == "gl2") {
    return {name, LieAlgebra::from_basis(2, {e(2, 0, 0), e(2, 0, 1), e(2, 1, 0), e(2, 1, 1)}),
            MembershipHint::None, Chart::General};
  }
  if (name == "sl2") {
    return {name, LieAlgebra::from_basis(2, {H(), E(), F()}), MembershipHint::Det1, Chart::Special2};
  }
  if (name == "b2") {
    return {name, LieAlgebra::from_basis(2, {e(2, 0, 0), e(2, 0, 1), e(2, 1, 1)}),
            MembershipHint::InvertibleUpper, Chart::Upper};
  }
  if (name == "heis3") {
    return {name, LieAlgebra::from_basis(3, {e(3, 0, 1), e(3, 1, 2), e(3, 0, 2)}),
            MembershipHint::UnipotentUpper, Chart::Unipotent};
  }
  if (name == "torus2") {
    return {name, LieAlgebra::from_basis(2, {e(2, 0, 0), e(2, 1, 1)}), MembershipHint::Diagonal,
            Chart::Diagonal};
  }
  return {name, LieAlgebra::from_basis(2, {H(), E()}), MembershipHint::Det1, Chart::SpecialUpper2};
}

std::string description(const std::string& name) {
  require(name);
  if (name == "gl2") return "GL2, basis e11 e12 e21 e22";
  if (name == "sl2") return "SL2, basis H E F";
  if (name == "b2") return "upper triangular Borel of GL2, basis e11 e12 e22";
  if (name == "heis3") return "Heisenberg group, basis X=e12 Y=e23 Z=e13";
  if (name == "torus2") return "diagonal torus of GL2, basis e11 e22";
  return "upper triangular Borel of SL2, basis H E";
}

std::vector<Subspace> known_cartans(const std::string& name) {
  require(name);
  if (name == "gl2") return {span(4, {{1, 0, 0, 0}, {0, 0, 0, 1}}), span(4, {{1, 0, 0, 1}, {0, 1, -1, 0}})};
  if (name == "sl2") return {span(3, {{1, 0, 0}}), span(3, {{0, 1, -1}})};
  if (name == "b2") return {span(3, {{1, 0, 0}, {0, 0, 1}})};
  if (name == "heis3") return {Subspace::whole(3)};
  if (name == "torus2") return {Subspace::whole(2)};
  return {span(2, {{1, 0}})};
}

std::vector<Subspace> nilpotent_subalgebras(const std::string& name) {
  auto out = known_cartans(name);
  if (name == "gl2") {
    out.push_back(span(4, {{1, 0, 0, 0}}));
    out.push_back(span(4, {{0, 1, 0, 0}}));
    out.push_back(span(4, {{1, 0, 0, 1}, {0, 1, 0, 0}}));
  } else if (name == "sl2") {
    out.push_back(span(3, {{0, 1, 0}}));
  } else if (name == "b2") {
    out.push_back(span(3, {{0, 1, 0}}));
    out.push_back(span(3, {{1, 0, 0}}));
  } else if (name == "heis3") {
    out.push_back(span(3, {{0, 0, 1}}));
    out.push_back(span(3, {{1, 0, 0}, {0, 0, 1}}));
  } else if (name == "torus2") {
    out.push_back(span(2, {{1, 0}}));
  } else if (name == "sb2") {
    out.push_back(span(2, {{0, 1}}));
  }
  return out;
}

std::vector<std::vector<Mat>> weyl_witnesses(const std::string& name) {
  require(name);
  const Scalar i = Scalar::i();
  if (name == "gl2") {
    return {{Mat::from_rows({{0, 1}, {1, 0}})}, {Mat::from_rows({{1, 0}, {0, -1}})}};
  }
  if (name == "sl2") {
    return {{Mat::from_rows({{0, 1}, {-1, 0}})}, {Mat::from_rows({{0, i}, {i, 0}})}};
  }
  return std::vector<std::vector<Mat>>(known_cartans(name).size());
}

Structure known_structure(const std::string& name) {
  require(name);
  if (name == "heis3") return {false, true, true};
  if (name == "torus2") return {true, true, true};
  if (name == "b2" || name == "sb2") return {false, false, true};
  return {false, false, false};
}

}  // namespace cartankit::corpus
