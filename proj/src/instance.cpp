#include "nframe/instance.hpp"

#include <cmath>
#include <fstream>

#include "nframe/version.hpp"

namespace nframe {

namespace {

using nlohmann::json;

double checked_number(const json& v, const std::string& field) {
  if (!v.is_number())
    throw input_error("field '" + field + "': expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x))
    throw input_error("field '" + field + "': non-finite value");
  return x;
}

Vector parse_vector(const json& v, int dim, const std::string& field) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw input_error("field '" + field + "': expected an array of length " +
                      std::to_string(dim));
  Vector out(dim);
  for (int i = 0; i < dim; ++i)
    out[i] = checked_number(v[i], field + "[" + std::to_string(i) + "]");
  return out;
}

std::vector<Vector> parse_vector_list(const json& v, int dim,
                                      const std::string& field) {
  if (!v.is_array() || v.empty())
    throw input_error("field '" + field + "': expected a non-empty array");
  std::vector<Vector> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(parse_vector(v[i], dim, field + "[" + std::to_string(i) + "]"));
  return out;
}

Matrix parse_matrix(const json& v, int rows, int cols,
                    const std::string& field) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows)
    throw input_error("field '" + field + "': expected " +
                      std::to_string(rows) + " rows");
  Matrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    out.row(i) =
        parse_vector(v[i], cols, field + "[" + std::to_string(i) + "]")
            .transpose();
  return out;
}

json vector_list_to_json(const std::vector<Vector>& vs) {
  json arr = json::array();
  for (const Vector& v : vs) {
    json row = json::array();
    for (int i = 0; i < v.size(); ++i) row.push_back(v[i]);
    arr.push_back(row);
  }
  return arr;
}

json matrix_to_json(const Matrix& m) {
  json arr = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    arr.push_back(row);
  }
  return arr;
}

}  // namespace

InstanceSpec instance_from_json(const json& j) {
  if (!j.is_object()) throw input_error("instance: top level must be an object");
  for (const char* field : {"schema_version", "dim", "arity", "anchors",
                            "elements"})
    if (!j.contains(field))
      throw input_error(std::string("instance: missing required field '") +
                        field + "'");

  InstanceSpec spec;
  if (!j["schema_version"].is_number_integer())
    throw input_error("field 'schema_version': expected an integer");
  spec.schema_version = j["schema_version"].get<int>();
  if (spec.schema_version != kSchemaVersion)
    throw input_error("field 'schema_version': unsupported version " +
                      std::to_string(spec.schema_version));

  if (!j["dim"].is_number_integer() || !j["arity"].is_number_integer())
    throw input_error("fields 'dim'/'arity': expected integers");
  spec.dim = j["dim"].get<int>();
  spec.arity = j["arity"].get<int>();
  if (spec.arity < 2)
    throw input_error("field 'arity': must be at least 2");
  if (spec.dim < spec.arity)
    throw input_error("field 'dim': must be at least the arity");

  if (j.contains("kind")) {
    if (!j["kind"].is_string())
      throw input_error("field 'kind': expected a string");
    spec.kind = j["kind"].get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      throw input_error("field 'seed': expected an integer");
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("counts")) {
    if (!j["counts"].is_number_integer() || j["counts"].get<int>() <= 0)
      throw input_error("field 'counts': expected a positive integer");
    spec.counts = j["counts"].get<int>();
  }

  spec.anchors = parse_vector_list(j["anchors"], spec.dim, "anchors");
  if (static_cast<int>(spec.anchors.size()) != spec.arity - 1)
    throw input_error("field 'anchors': expected arity-1 = " +
                      std::to_string(spec.arity - 1) + " vectors");

  spec.elements = parse_vector_list(j["elements"], spec.dim, "elements");
  if (j.contains("pair_elements")) {
    spec.pair_elements =
        parse_vector_list(j["pair_elements"], spec.dim, "pair_elements");
    if (spec.pair_elements.size() != spec.elements.size())
      throw input_error(
          "field 'pair_elements': must match 'elements' in length");
  }

  const int q = spec.dim - (spec.arity - 1);
  if (j.contains("operators")) {
    if (!j["operators"].is_object())
      throw input_error("field 'operators': expected an object");
    for (const auto& [name, mat] : j["operators"].items()) {
      if (name != "K" && name != "T" && name != "L" && name != "U")
        throw input_error("field 'operators': unknown operator '" + name +
                          "' (expected K, T, L or U)");
      spec.operators[name] = parse_matrix(mat, q, q, "operators." + name);
    }
  }
  return spec;
}

json instance_to_json(const InstanceSpec& spec) {
  json j;
  j["schema_version"] = spec.schema_version;
  if (!spec.kind.empty()) j["kind"] = spec.kind;
  j["seed"] = spec.seed;
  j["dim"] = spec.dim;
  j["arity"] = spec.arity;
  j["anchors"] = vector_list_to_json(spec.anchors);
  j["elements"] = vector_list_to_json(spec.elements);
  if (!spec.pair_elements.empty())
    j["pair_elements"] = vector_list_to_json(spec.pair_elements);
  if (!spec.operators.empty()) {
    json ops;
    for (const auto& [name, mat] : spec.operators)
      ops[name] = matrix_to_json(mat);
    j["operators"] = ops;
  }
  j["counts"] = spec.counts;
  return j;
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error(path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

void save_instance(const InstanceSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error(path + ": cannot open file for writing");
  out << instance_to_json(spec).dump(2) << "\n";
}

QuotientSpace quotient_of(const InstanceSpec& spec) {
  const AmbientSpace space(spec.dim, spec.arity);
  return build_quotient(AnchorSet(space, spec.anchors));
}

FrameSequence frame_of(const InstanceSpec& spec, const QuotientSpace& qs) {
  return FrameSequence(qs, spec.elements);
}

FrameSequence pair_frame_of(const InstanceSpec& spec,
                            const QuotientSpace& qs) {
  require(!spec.pair_elements.empty(),
          "instance has no 'pair_elements' sequence");
  return FrameSequence(qs, spec.pair_elements);
}

Matrix operator_of(const InstanceSpec& spec, const QuotientSpace& qs,
                   const std::string& name) {
  const auto it = spec.operators.find(name);
  if (it == spec.operators.end())
    return Matrix::Identity(qs.q(), qs.q());
  return it->second;
}

}  // namespace nframe
