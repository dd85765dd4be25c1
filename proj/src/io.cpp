#include "char2forms/io.hpp"

#include <sstream>

namespace char2forms {

std::string matrix_to_text(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << " " << m.ctx().degree() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m.at(i, j).to_hex();
    }
    os << "\n";
  }
  return os.str();
}

Matrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  int n = 0, m = 0;
  if (!(is >> n >> m)) throw ParseError("malformed matrix header; expected \"n m\"");
  if (n < 0) throw ParseError("negative matrix size");
  if (m < 1 || m > 16) throw ParseError("field degree out of range in matrix header");
  const FieldCtx& ctx = FieldCtx::get(m);
  Matrix mat(ctx, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(is >> tok)) throw ParseError("matrix is truncated");
      mat.set(i, j, FieldElem::from_hex(ctx, tok).bits());
    }
  std::string extra;
  if (is >> extra) throw ParseError("trailing content after matrix entries");
  return mat;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_hex());
    rows.push_back(std::move(row));
  }
  return {{"n", m.rows()}, {"field", m.ctx().name()}, {"rows", std::move(rows)}};
}

nlohmann::json supermatrix_to_json(const SuperMatrix& m) {
  nlohmann::json j = matrix_to_json(m.entries());
  j["sdim"] = {m.sdim().n0, m.sdim().n1};
  j["parity"] = m.parity() == Parity::even ? "even" : "odd";
  return j;
}

nlohmann::json algebra_to_json(const AlgebraBasis& g) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : g.basis()) basis.push_back(matrix_to_json(b));
  return {{"n", g.n()}, {"field", g.ctx().name()}, {"dim", g.dim()}, {"basis", std::move(basis)}};
}

nlohmann::json super_algebra_to_json(const SuperAlgebraBasis& g) {
  nlohmann::json even = nlohmann::json::array(), odd = nlohmann::json::array();
  for (const auto& b : g.even_basis()) even.push_back(supermatrix_to_json(b));
  for (const auto& b : g.odd_basis()) odd.push_back(supermatrix_to_json(b));
  return {{"sdim", {g.sdim().n0, g.sdim().n1}},
          {"field", g.ctx().name()},
          {"dim", {g.even_dim(), g.odd_dim()}},
          {"even_basis", std::move(even)},
          {"odd_basis", std::move(odd)}};
}

nlohmann::json fingerprint_to_json(const Fingerprint& fp) {
  return nlohmann::json(fp.entries);
}

}  // namespace char2forms
