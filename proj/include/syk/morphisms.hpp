#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "syk/gauss.hpp"
#include "syk/report.hpp"
#include "syk/series.hpp"
#include "syk/yangian.hpp"

namespace syk {

enum class MapKind { kRho, kOmega, kPsi, kZeta, kPhi };

std::string map_name(MapKind kind);
/// "rho", "omega", "psi", "zeta", "phi". Throws ParseError.
MapKind parse_map_name(const std::string& name);

struct MorphismSpec {
  MapKind kind = MapKind::kRho;
  Signature source;
  int shift = 0;  // psi and phi only
  GeneratorOrder order = GeneratorOrder::kRIJ;

  /// rho and zeta swap M and N; psi and phi add the shift to M.
  Signature target() const;
};

/// An algebra homomorphism between two super Yangians, stored as the table of
/// images of t_ij^(r) for r <= K and extended multiplicatively.
class Morphism {
 public:
  using ImageFn = std::function<Element(int i, int j, int r)>;

  Morphism(std::shared_ptr<const Yangian> source, std::shared_ptr<const Yangian> target, int K,
           const ImageFn& image_of);

  const std::shared_ptr<const Yangian>& source() const { return source_; }
  const std::shared_ptr<const Yangian>& target() const { return target_; }
  int K() const { return K_; }

  /// Image of t_ij^(r); r = 0 gives delta_ij. Throws DegreeExceeded for r > K.
  const Element& image(int i, int j, int r) const;
  Element apply(const Element& x) const;
  MultiSeries apply(const MultiSeries& s) const;
  MatrixSeries apply(const MatrixSeries& m) const;

 private:
  std::shared_ptr<const Yangian> source_;
  std::shared_ptr<const Yangian> target_;
  int K_;
  std::vector<Element> table_;  // index ((r * d) + i - 1) * d + j - 1
};

/// Closed formulas: rho and phi by index substitution, omega from T(-u)^{-1},
/// psi_k as the quasideterminant over the leading k x k corner, zeta from T(u)^{-1}.
Morphism make_morphism(const MorphismSpec& spec, int K);
/// Definitions by composition: zeta = rho . omega, psi_k = omega . phi . omega.
/// rho, omega and phi coincide with make_morphism.
Morphism make_morphism_composed(const MorphismSpec& spec, int K);
/// outer . inner; inner's target must be outer's source.
Morphism compose(const Morphism& outer, const Morphism& inner);
Morphism identity_morphism(std::shared_ptr<const Yangian> alg, int K);

/// Homomorphism property on every pair of generators with r + s - 1 <= K,
/// agreement of the two constructions, parity, the involution or shift
/// composition laws, and the kind-specific identities: commuting corners and
/// Gauss blocks for psi, the transport of Gauss blocks for zeta.
VerifyReport verify_morphism(const MorphismSpec& spec, int K);

}  // namespace syk
