#include "nframe/frames.hpp"

#include <cmath>
#include <utility>

#include "nframe/tolerance.hpp"

namespace nframe {

FrameSequence::FrameSequence(QuotientSpace qs, std::vector<Vector> elems)
    : qspace(std::move(qs)), elements(std::move(elems)) {
  require(!elements.empty(), "frame sequence: at least one element required");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    require(elements[i].size() == qspace.dim(),
            "frame sequence: element " + std::to_string(i) +
                " has wrong dimension");
    require(elements[i].allFinite(),
            "frame sequence: element " + std::to_string(i) +
                " has non-finite entries");
  }
}

FrameOperators build_operators(const FrameSequence& fs) {
  const int m = fs.size();
  const int q = fs.qspace.q();
  FrameOperators ops;
  ops.analysis.resize(m, q);
  for (int i = 0; i < m; ++i)
    ops.analysis.row(i) =
        fs.qspace.orthonormal_coords(fs.elements[i]).transpose();
  ops.synthesis = ops.analysis.transpose();
  ops.frame_op = ops.synthesis * ops.analysis;
  return ops;
}

BoundsReport frame_bounds(const FrameSequence& fs) {
  const Matrix s = build_operators(fs).frame_op;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s, Eigen::EigenvaluesOnly);
  BoundsReport rep;
  rep.lower = std::max(0.0, eig.eigenvalues()(0));
  rep.upper = std::max(0.0, eig.eigenvalues()(eig.eigenvalues().size() - 1));
  rep.is_frame = rep.lower > kRankRelTol * std::max(1.0, rep.upper);
  rep.is_bessel = true;
  return rep;
}

FrameOperatorCertificate frame_operator_certificate(const FrameSequence& fs) {
  const Matrix s = build_operators(fs).frame_op;
  FrameOperatorCertificate cert;
  cert.symmetry_residual =
      (s - s.transpose()).norm() / std::max(1.0, s.norm());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s, Eigen::EigenvaluesOnly);
  cert.min_eigenvalue = eig.eigenvalues()(0);
  const double max_eig = eig.eigenvalues()(eig.eigenvalues().size() - 1);
  cert.is_frame = cert.min_eigenvalue > kRankRelTol * std::max(1.0, max_eig);
  cert.invertible = cert.is_frame;
  cert.condition = cert.invertible ? max_eig / cert.min_eigenvalue : 0.0;
  return cert;
}

}  // namespace nframe
