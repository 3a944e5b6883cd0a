#include "ybmap/json_codec.hpp"

namespace ybmap::json {

namespace {

[[noreturn]] void malformed(std::string_view path, std::string_view message) {
  throw Error(ErrorKind::MalformedInput, std::string(path) + ": " + std::string(message));
}

std::string indexed(std::string_view path, std::size_t i) {
  return std::string(path) + "[" + std::to_string(i) + "]";
}

std::string member(std::string_view path, std::string_view key) {
  return path.empty() ? std::string(key) : std::string(path) + "." + std::string(key);
}

}  // namespace

json encode(Complex z) { return json::array({z.real(), z.imag()}); }

json encode(const ColumnVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i)));
  return out;
}

json encode_matrix(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode(const Subspace& s) {
  json basis = json::array();
  for (Index j = 0; j < s.dim(); ++j) basis.push_back(encode(ColumnVector(s.basis().col(j))));
  return json{{"ambient_dim", s.ambient_dim()}, {"basis", std::move(basis)}};
}

json encode(const Polarization& p) {
  return json{{"lambda", encode(p.lambda)}, {"xi", encode(p.xi.values())}, {"eta", encode(p.eta.values())}};
}

json encode_site(Complex lambda, const ProjectorState& p) {
  return json{{"lambda", encode(lambda)}, {"projector", encode_matrix(p.matrix())}};
}

json encode(const Chain& chain) {
  json sites = json::array();
  for (const ChainSite& site : chain.sites) sites.push_back(encode_site(site.lambda, site.projector));
  return json{{"ambient_dim", chain.ambient_dim}, {"sites", std::move(sites)}};
}

const json& require(const json& object, std::string_view key, std::string_view path) {
  if (!object.is_object()) malformed(path, "expected an object");
  const auto it = object.find(std::string(key));
  if (it == object.end()) malformed(member(path, key), "missing field");
  return *it;
}

Complex decode_complex(const json& j, std::string_view path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    malformed(path, "expected a complex number [re, im]");
  }
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(z)) malformed(path, "non-finite number");
  return z;
}

double decode_real(const json& j, std::string_view path) {
  const Complex z = decode_complex(j, path);
  if (z.imag() != 0.0) malformed(path, "expected a real number");
  return z.real();
}

ColumnVector decode_vector(const json& j, std::string_view path) {
  if (!j.is_array() || j.empty()) malformed(path, "expected a non-empty array of complex numbers");
  ColumnVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = decode_complex(j[i], indexed(path, i));
  return v;
}

Matrix decode_matrix(const json& j, std::string_view path) {
  if (!j.is_array() || j.empty()) malformed(path, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) malformed(indexed(path, 0), "expected a row array");
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = indexed(path, r);
    if (!j[r].is_array() || j[r].size() != cols) malformed(row_path, "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = decode_complex(j[r][c], indexed(row_path, c));
    }
  }
  return m;
}

Subspace decode_subspace(const json& j, std::string_view path) {
  const json& dim_field = require(j, "ambient_dim", path);
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    malformed(member(path, "ambient_dim"), "expected a positive integer");
  }
  const Index n = dim_field.get<Index>();
  const json& basis = require(j, "basis", path);
  const std::string basis_path = member(path, "basis");
  if (!basis.is_array()) malformed(basis_path, "expected an array of columns");
  Matrix columns(n, static_cast<Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const ColumnVector col = decode_vector(basis[c], indexed(basis_path, c));
    if (col.size() != n) malformed(indexed(basis_path, c), "column length differs from ambient_dim");
    columns.col(static_cast<Index>(c)) = col;
  }
  try {
    return Subspace::from_basis(columns);
  } catch (const Error& e) {
    malformed(basis_path, e.what());
  }
}

Polarization decode_polarization(const json& j, std::string_view path) {
  const Complex lambda = decode_complex(require(j, "lambda", path), member(path, "lambda"));
  ColumnVector xi = decode_vector(require(j, "xi", path), member(path, "xi"));
  ColumnVector eta = decode_vector(require(j, "eta", path), member(path, "eta"));
  if (xi.size() != eta.size()) malformed(path, "xi and eta differ in length");
  return Polarization{Vec(std::move(xi)), Covec(std::move(eta)), lambda};
}

ProjectorState decode_projector(const json& j, std::string_view path, const Tolerances& tol) {
  const Matrix m = decode_matrix(j, path);
  try {
    return ProjectorState::from_matrix(m, tol);
  } catch (const Error& e) {
    malformed(path, e.what());
  }
}

Chain decode_chain(const json& j, std::string_view path, const Tolerances& tol) {
  const json& dim_field = require(j, "ambient_dim", path);
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    malformed(member(path, "ambient_dim"), "expected a positive integer");
  }
  Chain chain{dim_field.get<Index>(), {}};
  const json& sites = require(j, "sites", path);
  const std::string sites_path = member(path, "sites");
  if (!sites.is_array()) malformed(sites_path, "expected an array of sites");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const std::string site_path = indexed(sites_path, i);
    const Complex lambda = decode_complex(require(sites[i], "lambda", site_path), member(site_path, "lambda"));
    ProjectorState p = decode_projector(require(sites[i], "projector", site_path), member(site_path, "projector"), tol);
    if (p.ambient_dim() != chain.ambient_dim) malformed(member(site_path, "projector"), "size differs from ambient_dim");
    if (lambda == Complex(0.0)) malformed(member(site_path, "lambda"), "lambda must be nonzero");
    chain.sites.push_back(ChainSite{std::move(p), lambda});
  }
  return chain;
}

json parse(const std::string& text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(source, e.what());
  }
}

}  // namespace ybmap::json
