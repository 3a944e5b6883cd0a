#pragma once

// Repo-wide JSON encodings. A complex scalar is [re, im]; a matrix is a
// row-major array of rows; a subspace is {"ambient_dim": n, "basis": [columns]}.
//
// Decoders throw Error(MalformedInput) with the offending field path.

#include <string>
#include <string_view>

#include <json.hpp>

#include "ybmap/chain.hpp"
#include "ybmap/linalg.hpp"
#include "ybmap/yb_maps.hpp"

namespace ybmap::json {

using nlohmann::json;

json encode(Complex z);
json encode(const ColumnVector& v);
json encode_matrix(const Matrix& m);
json encode(const Subspace& s);
json encode(const Polarization& p);
/// {"lambda": [re, im], "projector": [[...]]}
json encode_site(Complex lambda, const ProjectorState& p);

// `path` names the field in diagnostics, e.g. "sites[2].lambda".
Complex decode_complex(const json& j, std::string_view path);
/// Accepts [re, im] or a plain number; rejects nonzero imaginary parts.
double decode_real(const json& j, std::string_view path);
ColumnVector decode_vector(const json& j, std::string_view path);
Matrix decode_matrix(const json& j, std::string_view path);
Subspace decode_subspace(const json& j, std::string_view path);
Polarization decode_polarization(const json& j, std::string_view path);
ProjectorState decode_projector(const json& j, std::string_view path, const Tolerances& tol = {});

/// {"ambient_dim": n, "sites": [site, ...]} with sites as in encode_site.
json encode(const Chain& chain);
Chain decode_chain(const json& j, std::string_view path, const Tolerances& tol = {});

const json& require(const json& object, std::string_view key, std::string_view path);

/// Parses text, converting parse errors into MalformedInput.
json parse(const std::string& text, std::string_view source);

}  // namespace ybmap::json
