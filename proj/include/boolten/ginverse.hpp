#pragma once

#include <optional>
#include <string>

#include "boolten/tensor.hpp"

namespace boolten {

/// Which of the four Penrose equations a candidate X satisfies:
///   (1) A*X*A = A   (2) X*A*X = X   (3) A*X symmetric   (4) X*A symmetric
/// In the weighted form (3) and (4) read M*A*X and X*A*N.
struct AxiomReport {
  bool ax1 = false;
  bool ax2 = false;
  bool ax3 = false;
  bool ax4 = false;

  bool all() const noexcept { return ax1 && ax2 && ax3 && ax4; }
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

AxiomReport check_g_axioms(const Tensor& a, const Tensor& x);

/// (A * A^{CT} * A)^{CT}. Dominates every g-inverse, and is one exactly
/// when A is regular.
Tensor max_g_inverse(const Tensor& a);

/// A has a g-inverse; decided by A * G_max * A == A.
bool is_regular(const Tensor& a);

/// G_max * A * G_max. Throws ErrorKind::not_regular for singular A.
Tensor max_reflexive_g_inverse(const Tensor& a);

/// {1,3}-inverse (A*X symmetric) if one exists: (A^T*A)^(1) * A^T.
std::optional<Tensor> one_three_inverse(const Tensor& a);

/// {1,4}-inverse (X*A symmetric) if one exists: A^T * (A*A^T)^(1).
std::optional<Tensor> one_four_inverse(const Tensor& a);

/// Moore-Penrose inverse; exists iff A*A^T*A == A and then equals A^T.
std::optional<Tensor> mp_inverse(const Tensor& a);

/// Two-sided inverse of a square tensor; exists only for permutations.
std::optional<Tensor> inverse(const Tensor& a);

/// Weights of the weighted Moore-Penrose inverse: M on the row group,
/// N on the column group.
struct WeightPair {
  Tensor m;
  Tensor n;
};

/// The four hypotheses under which the weighted MP inverse has the closed
/// form N^T * A^T * M^T.
struct WeightHypotheses {
  bool m_dominates_identity = false;  // M >= I
  bool n_dominates_identity = false;  // N >= I
  bool range_preserved = false;       // R(A) == R(A*N)
  bool transpose_range_preserved = false;  // R(A^T) == R(A^T*M^T)

  bool all() const noexcept {
    return m_dominates_identity && n_dominates_identity && range_preserved &&
           transpose_range_preserved;
  }
  /// Comma separated names of the violated hypotheses.
  std::string violated() const;
};

WeightHypotheses check_weight_hypotheses(const Tensor& a,
                                         const WeightPair& weights);

AxiomReport check_wmp_axioms(const Tensor& a, const WeightPair& weights,
                             const Tensor& z);

/// Weighted Moore-Penrose inverse. Throws ErrorKind::hypothesis naming
/// the violated hypotheses; returns nullopt when they hold but the inverse
/// does not exist.
std::optional<Tensor> wmp_inverse(const Tensor& a, const WeightPair& weights);

}  // namespace boolten
