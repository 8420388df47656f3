#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nframe/frames.hpp"
#include "nframe/quotient.hpp"
#include "nframe/types.hpp"

namespace nframe {

/// On-disk description of a problem instance: space, anchors, frame
/// elements and optional named operators on X_F (q x q, row-major, in
/// orthonormal coordinates). `pair_elements` carries the second
/// sequence of two-sequence instances.
struct InstanceSpec {
  int schema_version = 1;
  std::string kind;
  std::uint64_t seed = 0;
  int dim = 0;
  int arity = 0;
  std::vector<Vector> anchors;
  std::vector<Vector> elements;
  std::vector<Vector> pair_elements;
  std::map<std::string, Matrix> operators;  // keys among K, T, L, U
  int counts = 100;
};

/// Parses and validates; throws input_error naming the offending field.
InstanceSpec instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const InstanceSpec& spec);

InstanceSpec load_instance(const std::string& path);
void save_instance(const InstanceSpec& spec, const std::string& path);

/// Derived in-memory views.
QuotientSpace quotient_of(const InstanceSpec& spec);
FrameSequence frame_of(const InstanceSpec& spec, const QuotientSpace& qs);
FrameSequence pair_frame_of(const InstanceSpec& spec, const QuotientSpace& qs);
/// Named operator, or the identity when absent.
Matrix operator_of(const InstanceSpec& spec, const QuotientSpace& qs,
                   const std::string& name);

}  // namespace nframe
