#pragma once

#include "ftskit/spinal.hh"

namespace ftskit {

/// Outcome of the orthogonality check. A witness is a decomposition
/// sigma' . a . sigma'' of an implementation trace whose new action a cannot
/// be reproduced behind any spine of sigma': evidence that spinal testing
/// may miss behavior of this implementation.
struct OrthogonalityReport {
  enum class Verdict { Orthogonal, NotOrthogonal };
  struct Witness {
    Trace sigma_prime;
    Action action;
    Trace sigma_double_prime;
  };

  Verdict verdict = Verdict::Orthogonal;
  std::optional<Witness> witness;
  int searched_depth = 0;

  bool orthogonal() const { return verdict == Verdict::Orthogonal; }
};

/// Bounded check of orthogonality w.r.t. the projected spec and the product
/// lambda: for every implementation suspension trace sigma'.a.sigma'' with
/// |sigma'.a.sigma''| <= depth and new(sigma', a), some spine sigma of
/// sigma' must let the implementation execute sigma.a.sigma''. The reported
/// witness is minimal: shortest total trace, then lexicographic by action
/// names, then shortest sigma'. Requires lambda to satisfy spec's formula
/// and to be one of its products.
OrthogonalityReport check_orthogonal(const FeatureSpec& impl, const FeatureSpec& spec,
                                     const ProductConfig& lambda, int depth);

}  // namespace ftskit
