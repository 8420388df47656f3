#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace nframe {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Malformed input: dimension mismatch, bad shape, unparseable file.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Anchor vectors fail the linear-independence test.
struct degenerate_anchor_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation's stated hypothesis does not hold for the given inputs.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

}  // namespace nframe
