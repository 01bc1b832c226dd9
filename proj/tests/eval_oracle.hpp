#pragma once

// Independent check on the rewriting engine: the evaluation homomorphism
// t_ij(u) -> delta_ij + (-1)^{p_i} E_ij / (u - c), realized on V or V (x) V for
// the natural super vector space V = C^{M|N}. Words are mapped to dense
// rational matrices by plain matrix multiplication, so the image of a word is
// computed without ever touching the straightening code.

#include <vector>

#include "syk/yangian.hpp"

namespace syk::oracle {

using Mat = std::vector<std::vector<Rational>>;

inline Mat zero_mat(int n) { return Mat(n, std::vector<Rational>(n, Rational(0))); }

inline Mat identity_mat(int n) {
  Mat m = zero_mat(n);
  for (int a = 0; a < n; ++a) m[a][a] = 1;
  return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat c = zero_mat(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

class EvalOracle {
 public:
  /// tensor_power is 1 or 2.
  EvalOracle(Signature sig, Rational c, int tensor_power) : sig_(sig), c_(std::move(c)) {
    const int d = sig.size();
    dim_ = tensor_power == 1 ? d : d * d;
    x_.assign(d + 1, std::vector<Mat>(d + 1));
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        Mat e = zero_mat(dim_);
        if (tensor_power == 1) {
          e[i - 1][j - 1] = 1;
        } else {
          const int pe = sig.index_parity(i) ^ sig.index_parity(j);
          for (int a = 1; a <= d; ++a) {
            for (int b = 1; b <= d; ++b) {
              const int col = (a - 1) * d + (b - 1);
              if (a == j) e[(i - 1) * d + (b - 1)][col] += 1;
              if (b == j) {
                const int sign = (pe & sig.index_parity(a)) ? -1 : 1;
                e[(a - 1) * d + (i - 1)][col] += sign;
              }
            }
          }
        }
        if (sig.index_parity(i)) {
          for (auto& row : e)
            for (auto& v : row) v = -v;
        }
        x_[i][j] = std::move(e);
      }
    }
  }

  int dim() const { return dim_; }

  Mat letter(Letter l) const {
    auto g = Generator::unpack(l);
    Rational scale = 1;
    for (int k = 1; k < g.r; ++k) scale *= c_;
    Mat m = x_[g.i][g.j];
    for (auto& row : m)
      for (auto& v : row) v *= scale;
    return m;
  }

  Mat image(const Element& x) const {
    Mat out = zero_mat(dim_);
    for (const auto& t : x.terms()) {
      Mat w = identity_mat(dim_);
      for (Letter l : t.word) w = mat_mul(w, letter(l));
      for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b) out[a][b] += t.coeff * w[a][b];
    }
    return out;
  }

 private:
  Signature sig_;
  Rational c_;
  int dim_ = 0;
  std::vector<std::vector<Mat>> x_;
};

}  // namespace syk::oracle
