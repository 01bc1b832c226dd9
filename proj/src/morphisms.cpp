#include "syk/morphisms.hpp"

#include "syk/errors.hpp"

namespace syk {

std::string map_name(MapKind kind) {
  switch (kind) {
    case MapKind::kRho: return "rho";
    case MapKind::kOmega: return "omega";
    case MapKind::kPsi: return "psi";
    case MapKind::kZeta: return "zeta";
    case MapKind::kPhi: return "phi";
  }
  return "?";
}

MapKind parse_map_name(const std::string& name) {
  for (MapKind k : {MapKind::kRho, MapKind::kOmega, MapKind::kPsi, MapKind::kZeta, MapKind::kPhi}) {
    if (map_name(k) == name) return k;
  }
  throw ParseError("unknown map '" + name + "'");
}

Signature MorphismSpec::target() const {
  switch (kind) {
    case MapKind::kRho:
    case MapKind::kZeta: return {source.N, source.M};
    case MapKind::kPsi:
    case MapKind::kPhi: return {source.M + shift, source.N};
    case MapKind::kOmega: return source;
  }
  return source;
}

// ---------------------------------------------------------------------------

Morphism::Morphism(std::shared_ptr<const Yangian> source, std::shared_ptr<const Yangian> target, int K,
                   const ImageFn& image_of)
    : source_(std::move(source)), target_(std::move(target)), K_(K) {
  const int d = source_->signature().size();
  table_.resize(static_cast<std::size_t>((K + 1) * d * d));
  for (int r = 0; r <= K; ++r)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        table_[static_cast<std::size_t>((r * d + i - 1) * d + j - 1)] =
            r == 0 ? Element(Rational(i == j ? 1 : 0)) : image_of(i, j, r);
}

const Element& Morphism::image(int i, int j, int r) const {
  const int d = source_->signature().size();
  if (i < 1 || j < 1 || i > d || j > d || r < 0) {
    throw IndexOutOfRange("generator t" + std::to_string(i) + "," + std::to_string(j) + " outside " +
                          source_->signature().str());
  }
  if (r > K_) {
    throw DegreeExceeded("image of a generator of order " + std::to_string(r) + " needs K >= " +
                         std::to_string(r) + " (K = " + std::to_string(K_) + ")");
  }
  return table_[static_cast<std::size_t>((r * d + i - 1) * d + j - 1)];
}

Element Morphism::apply(const Element& x) const {
  ElementBuilder out;
  for (const auto& t : x.terms()) {
    Element prod(t.coeff);
    for (Letter l : t.word) {
      Generator g = Generator::unpack(l);
      prod = target_->multiply(prod, image(g.i, g.j, g.r));
      if (prod.is_zero()) break;
    }
    out.add(prod);
  }
  return out.build();
}

MultiSeries Morphism::apply(const MultiSeries& s) const {
  return map_coeffs(s, [&](const Element& c) { return apply(c); });
}

MatrixSeries Morphism::apply(const MatrixSeries& m) const {
  MatrixSeries out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = apply(m.at(i, j));
  return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.target()->signature() != outer.source()->signature()) {
    throw DimensionMismatch("cannot compose: " + inner.target()->signature().str() + " vs " +
                            outer.source()->signature().str());
  }
  return Morphism(inner.source(), outer.target(), std::min(inner.K(), outer.K()),
                  [&](int i, int j, int r) { return outer.apply(inner.image(i, j, r)); });
}

Morphism identity_morphism(std::shared_ptr<const Yangian> alg, int K) {
  auto a = alg;
  return Morphism(alg, alg, K, [&](int i, int j, int r) { return a->t(i, j, r); });
}

namespace {

Element series_coeff(const MatrixSeries& m, int i, int j, int r) { return m.at(i - 1, j - 1).coeff(Var::u, r); }

Morphism make_rho(Signature sig, int K, GeneratorOrder ord) {
  auto src = yangian(sig, ord), tgt = yangian({sig.N, sig.M}, ord);
  const int d = sig.size();
  return Morphism(src, tgt, K, [&](int i, int j, int r) {
    return tgt->t(d + 1 - i, d + 1 - j, r) * Rational(r % 2 ? -1 : 1);
  });
}

Morphism make_omega(Signature sig, int K, GeneratorOrder ord) {
  auto y = yangian(sig, ord);
  MatrixSeries inv = negate_var(matrix_invert(*y, build_T(*y, K)), Var::u);
  return Morphism(y, y, K, [&](int i, int j, int r) { return series_coeff(inv, i, j, r); });
}

Morphism make_phi(Signature sig, int k, int K, GeneratorOrder ord) {
  auto tgt = yangian({sig.M + k, sig.N}, ord);
  return Morphism(yangian(sig, ord), tgt, K, [&](int i, int j, int r) { return tgt->t(k + i, k + j, r); });
}

Morphism make_psi(Signature sig, int k, int K, GeneratorOrder ord) {
  auto tgt = yangian({sig.M + k, sig.N}, ord);
  MatrixSeries T = build_T(*tgt, K);
  const int n = T.rows();
  MatrixSeries q = quasidet(*tgt, T.sub(0, k, 0, k), T.sub(0, k, k, n), T.sub(k, n, 0, k), T.sub(k, n, k, n));
  return Morphism(yangian(sig, ord), tgt, K, [&](int i, int j, int r) { return series_coeff(q, i, j, r); });
}

Morphism make_zeta(Signature sig, int K, GeneratorOrder ord) {
  auto tgt = yangian({sig.N, sig.M}, ord);
  MatrixSeries inv = matrix_invert(*tgt, build_T(*tgt, K));
  const int d = sig.size();
  return Morphism(yangian(sig, ord), tgt, K,
                  [&](int i, int j, int r) { return series_coeff(inv, d + 1 - i, d + 1 - j, r); });
}

void require_shift(const MorphismSpec& spec) {
  if (spec.shift < 0) throw WrongShape("shift must be nonnegative");
  if ((spec.kind != MapKind::kPsi && spec.kind != MapKind::kPhi) && spec.shift != 0) {
    throw WrongShape(map_name(spec.kind) + " takes no shift");
  }
  if (spec.source.size() < 1) throw WrongShape("empty signature");
}

}  // namespace

Morphism make_morphism(const MorphismSpec& spec, int K) {
  require_shift(spec);
  switch (spec.kind) {
    case MapKind::kRho: return make_rho(spec.source, K, spec.order);
    case MapKind::kOmega: return make_omega(spec.source, K, spec.order);
    case MapKind::kPhi: return make_phi(spec.source, spec.shift, K, spec.order);
    case MapKind::kPsi: return make_psi(spec.source, spec.shift, K, spec.order);
    case MapKind::kZeta: return make_zeta(spec.source, K, spec.order);
  }
  throw WrongShape("unknown map");
}

Morphism make_morphism_composed(const MorphismSpec& spec, int K) {
  require_shift(spec);
  switch (spec.kind) {
    case MapKind::kZeta: return compose(make_rho(spec.source, K, spec.order), make_omega(spec.source, K, spec.order));
    case MapKind::kPsi: {
      Signature big{spec.source.M + spec.shift, spec.source.N};
      Morphism inner = compose(make_phi(spec.source, spec.shift, K, spec.order), make_omega(spec.source, K, spec.order));
      return compose(make_omega(big, K, spec.order), inner);
    }
    default: return make_morphism(spec, K);
  }
}

// ---------------------------------------------------------------------------
// Verification

namespace {

void check_generator_tables(VerifyReport& rep, const std::string& rel, const Morphism& a, const Morphism& b) {
  const int d = a.source()->signature().size();
  for (int r = 1; r <= std::min(a.K(), b.K()); ++r)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) rep.record(rel, {i, j, r}, a.image(i, j, r) - b.image(i, j, r));
}

void check_homomorphism(VerifyReport& rep, const Morphism& f) {
  const Yangian& src = *f.source();
  const Yangian& tgt = *f.target();
  const int d = src.signature().size();
  for (int r = 1; r <= f.K(); ++r) {
    for (int s = 1; r + s - 1 <= f.K(); ++s) {
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
          for (int h = 1; h <= d; ++h)
            for (int k = 1; k <= d; ++k) {
              // Swapped pairs give the same identity up to sign.
              if (std::tie(r, i, j) > std::tie(s, h, k)) continue;
              Element lhs = f.apply(src.defining_bracket({i, j, r}, {h, k, s}));
              Element rhs = tgt.super_commutator(f.image(i, j, r), f.image(h, k, s));
              rep.record("hom", {i, j, h, k, r, s}, lhs - rhs);
            }
    }
  }
}

void check_parity(VerifyReport& rep, const Morphism& f) {
  const Yangian& src = *f.source();
  const int d = src.signature().size();
  for (int r = 1; r <= f.K(); ++r)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        const Element& img = f.image(i, j, r);
        auto p = f.target()->parity(img);
        bool ok = img.is_zero() || (p && *p == src.parity_of(i, j));
        rep.record("parity", {i, j, r}, ok ? Element() : img);
      }
}

void check_identity(VerifyReport& rep, const std::string& rel, const Morphism& f) {
  const int d = f.source()->signature().size();
  for (int r = 1; r <= f.K(); ++r)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) rep.record(rel, {i, j, r}, f.image(i, j, r) - f.target()->t(i, j, r));
}

void check_matrix(VerifyReport& rep, const std::string& rel, std::vector<int> idx, const MatrixSeries& a,
                  const MatrixSeries& b, int K) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int r = 0; r <= K; ++r) {
        std::vector<int> full = idx;
        full.insert(full.end(), {i + 1, j + 1, r});
        rep.record(rel, std::move(full), a.at(i, j).coeff(Var::u, r) - b.at(i, j).coeff(Var::u, r));
      }
}

// Reverses rows and columns.
MatrixSeries flip(const MatrixSeries& m) {
  MatrixSeries out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(m.rows() - 1 - i, m.cols() - 1 - j);
  return out;
}

void check_psi(VerifyReport& rep, const MorphismSpec& spec, const Morphism& psi, int K) {
  const int k = spec.shift;
  const Yangian& tgt = *psi.target();
  const int d = spec.source.size();
  // The leading k x k corner supercommutes with the image.
  for (int r = 1; r <= K; ++r)
    for (int s = 1; r + s - 1 <= K; ++s)
      for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
          for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
              rep.record("psi.corner", {a, b, i, j, r, s}, tgt.super_commutator(tgt.t(a, b, r), psi.image(i, j, s)));

  // psi_1 . psi_k = psi_{k+1}.
  Morphism next = make_morphism({MapKind::kPsi, spec.target(), 1}, K);
  Morphism both = make_morphism({MapKind::kPsi, spec.source, k + 1}, K);
  check_generator_tables(rep, "psi.shift-composition", compose(next, psi), both);

  if (k == 0) {
    check_identity(rep, "psi.zero", psi);
    return;
  }
  // Gauss blocks of (k, mu) restrict to those of mu.
  auto src = psi.source();
  auto big = psi.target();
  for (const Composition& mu : all_compositions(spec.source)) {
    std::vector<int> even = {k};
    even.insert(even.end(), mu.parts().begin(), mu.parts().begin() + mu.m());
    std::vector<int> odd(mu.parts().begin() + mu.m(), mu.parts().end());
    Composition wide(even, odd);
    GaussData g = gauss_blocks(src, mu, K);
    GaussData h = gauss_blocks(big, wide, K);
    for (int a = 1; a <= mu.blocks(); ++a) {
      check_matrix(rep, "psi.gauss.D", {a}, psi.apply(g.Dm(a)), h.Dm(a + 1), K);
      for (int b = a + 1; b <= mu.blocks(); ++b) {
        check_matrix(rep, "psi.gauss.E", {a, b}, psi.apply(g.Em(a, b)), h.Em(a + 1, b + 1), K);
        check_matrix(rep, "psi.gauss.F", {b, a}, psi.apply(g.Fm(b, a)), h.Fm(b + 1, a + 1), K);
      }
    }
  }
}

void check_zeta(VerifyReport& rep, const MorphismSpec& spec, const Morphism& zeta, int K) {
  auto src = zeta.source();
  auto tgt = zeta.target();
  for (const Composition& mu : all_compositions(spec.source)) {
    const int B = mu.blocks();
    GaussData g = gauss_blocks(src, mu, K);
    GaussData h = gauss_blocks(tgt, mu.reversed(), K);
    for (int a = 1; a <= B; ++a) {
      check_matrix(rep, "zeta.gauss.D", {a}, zeta.apply(g.Dm(a)), flip(h.Dpm(B + 1 - a)), K);
      check_matrix(rep, "zeta.gauss.Dp", {a}, zeta.apply(g.Dpm(a)), flip(h.Dm(B + 1 - a)), K);
      for (int b = a + 1; b <= B; ++b) {
        check_matrix(rep, "zeta.gauss.E", {a, b}, zeta.apply(g.Em(a, b)), flip(tilde_F(h, B + 1 - a, B + 1 - b)), K);
        check_matrix(rep, "zeta.gauss.F", {b, a}, zeta.apply(g.Fm(b, a)), flip(tilde_E(h, B + 1 - b, B + 1 - a)), K);
      }
    }
  }
}

}  // namespace

VerifyReport verify_morphism(const MorphismSpec& spec, int K) {
  VerifyReport rep;
  Morphism f = make_morphism(spec, K);
  check_homomorphism(rep, f);
  check_parity(rep, f);

  switch (spec.kind) {
    case MapKind::kRho:
      check_identity(rep, "rho.involution", compose(make_morphism({MapKind::kRho, spec.target()}, K), f));
      break;
    case MapKind::kOmega:
      check_identity(rep, "omega.involution", compose(f, f));
      break;
    case MapKind::kZeta:
      check_generator_tables(rep, "zeta.construction", f, make_morphism_composed(spec, K));
      check_identity(rep, "zeta.involution", compose(make_morphism({MapKind::kZeta, spec.target()}, K), f));
      check_zeta(rep, spec, f, K);
      break;
    case MapKind::kPsi:
      check_generator_tables(rep, "psi.construction", f, make_morphism_composed(spec, K));
      check_psi(rep, spec, f, K);
      break;
    case MapKind::kPhi:
      break;
  }
  return rep;
}

}  // namespace syk
