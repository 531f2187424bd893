#include "isoact/bgroup.hpp"

#include <cmath>

#include "isoact/sp_tau.hpp"

namespace isoact {

SpStep sp_step_product(const SpStep& x, const SpStep& y, ProductOrder order) {
  return bgroup_product(x, y, [](const SpMatrix& a, const SpMatrix& b) { return a * b; }, order);
}

double bgroup_cocycle(const SpStep& x, const SpStep& y) {
  return bgroup_cocycle_with(x, y, [](const SpMatrix& a, const SpMatrix& b) { return sp_tau(a, b); }, SpEqual{});
}

double bgroup_cocycle_residual(const SpStep& x, const SpStep& y, const SpStep& z) {
  return bgroup_cocycle(x, y) + bgroup_cocycle(sp_step_product(x, y), z) - bgroup_cocycle(y, z) -
         bgroup_cocycle(x, sp_step_product(y, z));
}

SpStep random_sp_step(std::mt19937_64& rng, int n, int max_level, double scale) {
  int level = std::uniform_int_distribution<int>(0, max_level)(rng);
  std::vector<int> perm(std::size_t{1} << level);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<SpMatrix> values;
  for (std::size_t i = 0; i < perm.size(); ++i) values.push_back(random_sp(rng, n, scale));
  return SpStep(level, std::move(perm), std::move(values));
}

json encode(const SpStep& x) {
  json values = json::array();
  for (const SpMatrix& g : x.values) {
    json rows = json::array();
    for (int r = 0; r < g.matrix().rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < g.matrix().cols(); ++c) row.push_back(g.matrix()(r, c));
      rows.push_back(row);
    }
    values.push_back(rows);
  }
  return json{{"cells", x.cells()}, {"perm", x.perm}, {"values", values}};
}

SpStep decode_sp_step(const json& j) {
  try {
    std::size_t cells = j.at("cells").get<std::size_t>();
    int level = 0;
    while ((std::size_t{1} << level) < cells && level <= SpStep::max_level) ++level;
    if ((std::size_t{1} << level) != cells) fail(Errc::invalid_encoding, "cells must be a power of two");
    std::vector<SpMatrix> values;
    for (const json& rows : j.at("values")) {
      int dim = static_cast<int>(rows.size());
      Eigen::MatrixXd m(dim, dim);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = rows.at(r).at(c).get<double>();
      values.push_back(SpMatrix::from_matrix(m));
    }
    return SpStep(level, j.at("perm").get<std::vector<int>>(), std::move(values));
  } catch (const json::exception& e) {
    fail(Errc::invalid_encoding, std::string("step automorphism: ") + e.what());
  }
}

}  // namespace isoact
