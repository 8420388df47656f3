#pragma once

namespace nframe {

/// Global relative tolerances. Identities (things that hold exactly in
/// exact arithmetic) are held to a tighter bound than inequalities.
struct Tolerances {
  double identity = 1e-9;
  double inequality = 1e-8;
};

/// Active tolerances. NFRAME_TOL, when set, overrides both values.
const Tolerances& tol();

/// Relative cutoff for rank decisions: singular values at or below
/// kRankRelTol * sigma_max are treated as zero. Also used as the
/// is-frame threshold and the anchor-independence threshold.
inline constexpr double kRankRelTol = 1e-10;

/// Round-off window for Gram determinants: values in
/// [-kGramClampRelTol * scale, 0) clamp to zero before sqrt.
inline constexpr double kGramClampRelTol = 1e-12;

}  // namespace nframe
