#include "boolten/ginverse.hpp"

#include <array>

#include "boolten/error.hpp"
#include "boolten/residuation.hpp"

namespace boolten {
namespace {

void require_inverse_shape(const Tensor& a, const Tensor& x, const char* op) {
  if (x.shape() != a.shape().transposed()) {
    throw Error(ErrorKind::shape_mismatch,
                std::string(op) + ": candidate " + x.shape().to_string() +
                    " is not shaped like the transpose of " +
                    a.shape().to_string());
  }
}

bool is_symmetric(const Tensor& t) { return t == transpose(t); }

}  // namespace

AxiomReport check_g_axioms(const Tensor& a, const Tensor& x) {
  require_inverse_shape(a, x, "check_g_axioms");
  const Tensor ax = a * x;
  const Tensor xa = x * a;
  return {ax * a == a, xa * x == x, is_symmetric(ax), is_symmetric(xa)};
}

Tensor max_g_inverse(const Tensor& a) {
  return complement_transpose(a * complement_transpose(a) * a);
}

bool is_regular(const Tensor& a) { return a * max_g_inverse(a) * a == a; }

Tensor max_reflexive_g_inverse(const Tensor& a) {
  const Tensor g = max_g_inverse(a);
  if (a * g * a != a) {
    throw Error(ErrorKind::not_regular,
                "tensor of shape " + a.shape().to_string() +
                    " is singular; no reflexive g-inverse exists");
  }
  return g * a * g;
}

std::optional<Tensor> one_three_inverse(const Tensor& a) {
  const Tensor at = transpose(a);
  if (!is_regular(a) || !range_equal(at, at * a)) return std::nullopt;
  Tensor x = max_g_inverse(at * a) * at;
  const AxiomReport r = check_g_axioms(a, x);
  if (!r.ax1 || !r.ax3) {
    throw Error(ErrorKind::internal, "{1,3} construction failed its axioms");
  }
  return x;
}

std::optional<Tensor> one_four_inverse(const Tensor& a) {
  const Tensor at = transpose(a);
  if (!is_regular(a) || !range_equal(a, a * at)) return std::nullopt;
  Tensor x = at * max_g_inverse(a * at);
  const AxiomReport r = check_g_axioms(a, x);
  if (!r.ax1 || !r.ax4) {
    throw Error(ErrorKind::internal, "{1,4} construction failed its axioms");
  }
  return x;
}

std::optional<Tensor> mp_inverse(const Tensor& a) {
  Tensor at = transpose(a);
  if (a * at * a != a) return std::nullopt;
  return at;
}

std::optional<Tensor> inverse(const Tensor& a) {
  if (!a.shape().is_square()) {
    throw Error(ErrorKind::shape_mismatch,
                "inverse needs row_dims == col_dims, got " +
                    a.shape().to_string());
  }
  Tensor at = transpose(a);
  const Tensor id = identity(a.shape().row_dims());
  if (a * at != id || at * a != id) return std::nullopt;
  return at;
}

std::string WeightHypotheses::violated() const {
  std::string out;
  auto note = [&](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  note(m_dominates_identity, "M >= I");
  note(n_dominates_identity, "N >= I");
  note(range_preserved, "R(A) = R(A*N)");
  note(transpose_range_preserved, "R(A^T) = R(A^T*M^T)");
  return out;
}

WeightHypotheses check_weight_hypotheses(const Tensor& a,
                                         const WeightPair& w) {
  const Shape& s = a.shape();
  if (w.m.shape() != Shape(s.row_dims(), s.row_dims()) ||
      w.n.shape() != Shape(s.col_dims(), s.col_dims())) {
    throw Error(ErrorKind::shape_mismatch,
                "weights " + w.m.shape().to_string() + ", " +
                    w.n.shape().to_string() + " do not match " + s.to_string());
  }
  WeightHypotheses h;
  h.m_dominates_identity = leq(identity(s.row_dims()), w.m);
  h.n_dominates_identity = leq(identity(s.col_dims()), w.n);
  h.range_preserved = range_equal(a, a * w.n);
  const Tensor at = transpose(a);
  h.transpose_range_preserved = range_equal(at, at * transpose(w.m));
  return h;
}

AxiomReport check_wmp_axioms(const Tensor& a, const WeightPair& w,
                             const Tensor& z) {
  require_inverse_shape(a, z, "check_wmp_axioms");
  const Tensor az = a * z;
  const Tensor za = z * a;
  // Products below also validate the weight shapes.
  return {az * a == a, za * z == z, is_symmetric(w.m * az),
          is_symmetric(za * w.n)};
}

std::optional<Tensor> wmp_inverse(const Tensor& a, const WeightPair& w) {
  const WeightHypotheses h = check_weight_hypotheses(a, w);
  if (!h.all()) {
    throw Error(ErrorKind::hypothesis,
                "weighted Moore-Penrose hypotheses violated: " + h.violated());
  }
  const Tensor at = transpose(a);
  const Tensor mt = transpose(w.m);
  const Tensor nt = transpose(w.n);
  // Conditions (a)-(d): A * N' * A^T * M' * A == A for N' in {N, N^T} and
  // M' in {M, M^T}; they are equivalent under the hypotheses.
  const std::array<bool, 4> conditions = {
      a * w.n * at * w.m * a == a,
      a * nt * at * w.m * a == a,
      a * w.n * at * mt * a == a,
      a * nt * at * mt * a == a,
  };
  for (bool c : conditions) {
    if (c != conditions[0]) {
      throw Error(ErrorKind::internal,
                  "weighted MP existence conditions disagree");
    }
  }
  if (!conditions[0]) return std::nullopt;
  Tensor z = nt * at * mt;
  if (!check_wmp_axioms(a, w, z).all()) {
    throw Error(ErrorKind::internal,
                "weighted MP closed form failed its axioms");
  }
  return z;
}

}  // namespace boolten
