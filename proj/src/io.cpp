#include "masi/io.hpp"

#include <fstream>

#include "masi/errors.hpp"

namespace masi {

using nlohmann::json;

namespace {

std::vector<std::vector<Real>> read_block(const json& j, std::size_t n, const char* key) {
  if (!j.is_array() || j.size() != n) throw Error(ErrorKind::InvalidSpec, std::string(key) + ": expected n rows");
  std::vector<std::vector<Real>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorKind::InvalidSpec, std::string(key) + ": expected n columns per row");
    std::vector<Real> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw Error(ErrorKind::InvalidSpec, std::string(key) + ": non-numeric entry");
      r.push_back(v.get<Real>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::size_t> read_dims(const json& j) {
  std::vector<std::size_t> dims;
  if (!j.is_array() || j.empty() || j.size() > 2)
    throw Error(ErrorKind::InvalidSpec, "dims must be [d] or [d_A, d_B]");
  for (const auto& d : j) {
    if (!d.is_number_integer() || d.get<long long>() < 1)
      throw Error(ErrorKind::InvalidSpec, "dims entries must be positive integers");
    dims.push_back(d.get<std::size_t>());
  }
  return dims;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json rr = json::array();
    json ir = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return {{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re")) throw Error(ErrorKind::InvalidSpec, "matrix JSON needs \"re\"");
  const json& re = j.at("re");
  if (!re.is_array() || re.empty()) throw Error(ErrorKind::InvalidSpec, "\"re\" must be a non-empty array");
  const std::size_t n = j.contains("dim") ? j.at("dim").get<std::size_t>() : re.size();
  const auto re_rows = read_block(re, n, "re");
  std::vector<std::vector<Real>> im_rows(n, std::vector<Real>(n, 0.0));
  if (j.contains("im")) im_rows = read_block(j.at("im"), n, "im");
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex{re_rows[r][c], im_rows[r][c]};
  return m;
}

StateSpec state_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw Error(ErrorKind::InvalidSpec, "state spec needs \"kind\"");
  StateSpec spec;
  spec.kind = parse_state_kind(j.at("kind").get<std::string>());
  if (j.contains("dims")) spec.dims = read_dims(j.at("dims"));
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("param")) spec.param = j.at("param").get<Real>();
  if (j.contains("path")) spec.path = j.at("path").get<std::string>();
  if (j.contains("parts"))
    for (const auto& part : j.at("parts")) spec.parts.push_back(state_spec_from_json(part));
  return spec;
}

MaterializedState state_from_json(const json& j) {
  try {
    if (j.is_object() && j.contains("kind")) return materialize(state_spec_from_json(j));
    ComplexMatrix m = matrix_from_json(j);
    std::vector<std::size_t> dims = j.contains("dims") ? read_dims(j.at("dims")) : std::vector<std::size_t>{m.dim()};
    std::size_t total = 1;
    for (auto d : dims) total *= d;
    if (total != m.dim()) throw Error(ErrorKind::InvalidSpec, "dims product does not match matrix size");
    return {DensityMatrix(std::move(m)), std::move(dims)};
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, e.what());
  }
}

MaterializedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileError, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::FileError, "'" + path + "': " + e.what());
  }
  return state_from_json(j);
}

}  // namespace masi
