#include "grank/classify.hpp"

#include <algorithm>

#include "grank/catalog.hpp"
#include "grank/errors.hpp"

namespace grank {

const char* rank2_variant_name(Rank2Variant v) {
  switch (v) {
    case Rank2Variant::TwoRows: return "TwoRows";
    case Rank2Variant::RowPlusColumn: return "RowPlusColumn";
    case Rank2Variant::Skew3: return "Skew3";
    case Rank2Variant::NotBounded2: return "NotBounded2";
    default: return "Unresolved";
  }
}

const char* gr2_variant_name(GR2Variant v) {
  switch (v) {
    case GR2Variant::Skew3Tensor: return "Skew3Tensor";
    case GR2Variant::UtrivM: return "UtrivM";
    case GR2Variant::NotConcise: return "NotConcise";
    case GR2Variant::NotGR2: return "NotGR2";
    case GR2Variant::SliceSpaceRank2: return "SliceSpaceRank2";
    default: return "Unresolved";
  }
}

namespace {

RatVec matrix_row(const RatMatrix& m, std::size_t i) {
  RatVec v(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
  return v;
}

RatVec matrix_col(const RatMatrix& m, std::size_t j) {
  RatVec v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

std::vector<RatVec> image_basis(const RatMatrix& m) {
  std::vector<RatVec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(matrix_col(m, j));
  return span_basis(cols);
}

std::vector<RatVec> rowspace_basis(const RatMatrix& m) {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(matrix_row(m, i));
  return span_basis(rows);
}

// joint column span of the whole slice space (exact: stack the basis slices)
std::vector<RatVec> joint_column_span(const std::vector<RatMatrix>& slices) {
  std::vector<RatVec> cols;
  for (const auto& s : slices)
    for (std::size_t j = 0; j < s.cols(); ++j) cols.push_back(matrix_col(s, j));
  return span_basis(cols);
}

std::vector<RatVec> joint_row_span(const std::vector<RatMatrix>& slices) {
  std::vector<RatVec> rows;
  for (const auto& s : slices)
    for (std::size_t i = 0; i < s.rows(); ++i) rows.push_back(matrix_row(s, i));
  return span_basis(rows);
}

RatMatrix combine_slices(const std::vector<RatMatrix>& slices, const std::vector<Rat>& weights) {
  RatMatrix m(slices.front().rows(), slices.front().cols());
  for (std::size_t q = 0; q < slices.size(); ++q) {
    if (weights[q] == 0) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) += weights[q] * slices[q].at(i, j);
  }
  return m;
}

// Sample projectively distinct generic covectors: Vandermonde rows then basis.
std::vector<std::vector<Rat>> sample_covectors(std::size_t d) {
  std::vector<std::vector<Rat>> pts;
  for (long t = 1; t <= 9; ++t) {
    std::vector<Rat> v(d);
    Rat x = 1;
    for (std::size_t q = 0; q < d; ++q) {
      v[q] = x;
      x *= t;
    }
    pts.push_back(std::move(v));
  }
  for (std::size_t q = 0; q < d; ++q) {
    std::vector<Rat> v(d);
    v[q] = 1;
    pts.push_back(std::move(v));
  }
  return pts;
}

// Candidate (row-direction, column-covector) pairs for the row+column form:
// intersections of images / row spaces of pairs of rank-2 slices.
std::vector<std::pair<RatVec, RatVec>> row_col_candidates(const std::vector<RatMatrix>& slices) {
  const std::size_t d = slices.size();
  std::vector<RatMatrix> rank2;
  for (const auto& cov : sample_covectors(d)) {
    RatMatrix m = combine_slices(slices, cov);
    if (rat_rank(m) == 2) rank2.push_back(std::move(m));
    if (rank2.size() >= 8) break;
  }
  std::vector<std::pair<RatVec, RatVec>> cands;
  for (std::size_t i = 0; i < rank2.size() && cands.size() < 8; ++i)
    for (std::size_t j = i + 1; j < rank2.size() && cands.size() < 8; ++j) {
      auto im = intersect_spans(image_basis(rank2[i]), image_basis(rank2[j]));
      auto rs = intersect_spans(rowspace_basis(rank2[i]), rowspace_basis(rank2[j]));
      if (im.size() == 1 && rs.size() == 1) cands.emplace_back(im[0], rs[0]);
    }
  return cands;
}

bool support_row_col_only(const std::vector<RatMatrix>& slices) {
  for (const auto& s : slices)
    for (std::size_t i = 1; i < s.rows(); ++i)
      for (std::size_t j = 1; j < s.cols(); ++j)
        if (s.at(i, j) != 0) return false;
  return true;
}

std::vector<RatMatrix> transform_slices(const std::vector<RatMatrix>& slices, const RatMatrix& g_row,
                                        const RatMatrix& g_col) {
  const RatMatrix gct = g_col.transposed();
  std::vector<RatMatrix> out;
  out.reserve(slices.size());
  for (const auto& s : slices) out.push_back(g_row * s * gct);
  return out;
}

// roles per slice axis: (row factor, column factor, slice factor)
std::array<int, 3> axis_roles(Axis axis) {
  switch (axis) {
    case Axis::A: return {1, 2, 0};
    case Axis::B: return {0, 2, 1};
    default: return {0, 1, 2};
  }
}

struct UtrivResult {
  bool unresolved_span = false;  // bounded form found but V_u != V_w (not Q-equivalent)
  std::optional<BasisChange> witness;
};

// Tensor is in (row, col, slice) factor order; slices along factor 2 are of
// row+column form up to basis change. Produces a witness to utriv(m), or
// reports the Q-inequivalent span situation.
UtrivResult normalize_row_plus_column(const Tensor3& t, std::size_t m) {
  UtrivResult out;
  auto slices = basis_slices(t, Axis::C);
  for (const auto& [r1, phi] : row_col_candidates(slices)) {
    RatMatrix g_row = rat_inverse(complete_basis({r1}, m));
    RatMatrix g_col = rat_inverse(complete_basis({phi}, m));
    Tensor3 t1 = change_basis(t, {g_row, g_col, RatMatrix::identity(m)});
    auto s1 = basis_slices(t1, Axis::C);
    if (!support_row_col_only(s1)) continue;
    // extract u_j = entries (0, j, .), w_i = entries (i, 0, .) for i >= 1
    std::vector<RatVec> u(m, RatVec(m)), w(m, RatVec(m));
    for (const auto& e : t1.entries()) {
      if (e.i == 0)
        u[e.j][e.k] += e.coeff;
      else
        w[e.i][e.k] += e.coeff;
    }
    std::vector<RatVec> vu(u.begin() + 1, u.end()), vw(w.begin() + 1, w.end());
    auto bu = span_basis(vu), bw = span_basis(vw);
    if (bu.size() != m - 1 || bw.size() != m - 1) continue;  // not concise enough here
    // corner must avoid both hyperplanes
    RatVec corner = u[0];
    std::optional<RatVec> corner_star;
    std::vector<RatVec> dirs{RatVec(m)};
    dirs.insert(dirs.end(), bw.begin(), bw.end());
    dirs.insert(dirs.end(), bu.begin(), bu.end());
    for (long c1 = 0; c1 < 4 && !corner_star; ++c1)
      for (const auto& dir : dirs) {
        RatVec cand(m);
        for (std::size_t q = 0; q < m; ++q) cand[q] = corner[q] + c1 * dir[q];
        if (!in_span(cand, bu) && !in_span(cand, bw)) {
          corner_star = cand;
          break;
        }
      }
    if (!corner_star) continue;
    // express the corner shift over the w's and u's
    RatVec delta(m);
    for (std::size_t q = 0; q < m; ++q) delta[q] = (*corner_star)[q] - corner[q];
    RatMatrix mix(m, 2 * (m - 1));
    for (std::size_t col = 0; col + 1 < m; ++col)
      for (std::size_t q = 0; q < m; ++q) {
        mix.at(q, col) = w[col + 1][q];
        mix.at(q, m - 1 + col) = u[col + 1][q];
      }
    auto sol = rat_solve(mix, delta);
    if (!sol) continue;
    RatMatrix g_row2 = RatMatrix::identity(m), g_col2 = RatMatrix::identity(m);
    for (std::size_t i = 1; i < m; ++i) {
      g_row2.at(0, i) = (*sol)[i - 1];
      g_col2.at(0, i) = (*sol)[m - 1 + i - 1];
    }
    Tensor3 t2 = change_basis(t1, {g_row2, g_col2, RatMatrix::identity(m)});
    std::vector<RatVec> u2(m, RatVec(m)), w2(m, RatVec(m));
    for (const auto& e : t2.entries()) {
      if (e.i == 0)
        u2[e.j][e.k] += e.coeff;
      else
        w2[e.i][e.k] += e.coeff;
    }
    auto bu2 = span_basis(std::vector<RatVec>(u2.begin() + 1, u2.end()));
    auto bw2 = span_basis(std::vector<RatVec>(w2.begin() + 1, w2.end()));
    bool same = bu2.size() == bw2.size();
    if (same)
      for (const auto& v : bu2)
        if (!in_span(v, bw2)) same = false;
    if (!same) {
      out.unresolved_span = true;
      continue;
    }
    // final maps: x-basis [corner*, u_2..u_m]; G = [corner*, w_2..w_m]
    RatMatrix fx(m, m), gm(m, m);
    for (std::size_t q = 0; q < m; ++q) {
      fx.at(q, 0) = u2[0][q];
      gm.at(q, 0) = u2[0][q];
    }
    for (std::size_t col = 1; col < m; ++col)
      for (std::size_t q = 0; q < m; ++q) {
        fx.at(q, col) = u2[col][q];
        gm.at(q, col) = w2[col][q];
      }
    RatMatrix g_x = rat_inverse(fx);
    RatMatrix g_row3 = rat_inverse((g_x * gm).transposed());
    Tensor3 t3 = change_basis(t2, {g_row3, RatMatrix::identity(m), g_x});
    if (!(t3 == catalog_make("utriv", {static_cast<long>(m)}))) continue;
    out.witness = BasisChange{g_row3 * g_row2 * g_row, g_col2 * g_col, g_x};
    return out;
  }
  return out;
}

RatMatrix cross_matrix(const RatVec& v) {
  RatMatrix m(3, 3);
  m.at(0, 1) = -v[2]; m.at(0, 2) = v[1];
  m.at(1, 0) = v[2];  m.at(1, 2) = -v[0];
  m.at(2, 0) = -v[1]; m.at(2, 1) = v[0];
  return m;
}

// Tensor in (row, col, slice) order with 3x3 slices; witness to the catalog
// skew tensor via the kernel construction.
std::optional<BasisChange> normalize_skew(const Tensor3& t) {
  const std::size_t m = 3;
  auto slices = basis_slices(t, Axis::C);
  std::vector<RatVec> ks, ls;
  for (const auto& s : slices) {
    if (rat_rank(s) != 2) return std::nullopt;
    auto k = rat_nullspace(s);
    auto l = rat_nullspace(s.transposed());
    if (k.size() != 1 || l.size() != 1) return std::nullopt;
    ks.push_back(k[0]);
    ls.push_back(l[0]);
  }
  RatMatrix kmat(3, 3), lmat(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      kmat.at(i, j) = ks[j][i];  // columns are kernels
      lmat.at(i, j) = ls[i][j];  // rows are left kernels
    }
  if (rat_rank(kmat) != 3 || rat_rank(lmat) != 3) return std::nullopt;
  Tensor3 t1 = change_basis(t, {lmat, kmat.transposed(), RatMatrix::identity(m)});
  auto sp = basis_slices(t1, Axis::C);
  for (long wt = 1; wt <= 4; ++wt) {
    std::vector<Rat> weights{1, wt, wt * wt};
    RatMatrix mg = combine_slices(sp, weights);
    if (mg.at(0, 1) == 0 || mg.at(0, 2) == 0 || mg.at(1, 2) == 0) continue;
    std::vector<Rat> sigma{1, -mg.at(1, 0) / mg.at(0, 1), -mg.at(2, 0) / mg.at(0, 2)};
    if (sigma[1] == 0 || sigma[2] == 0) continue;
    if (sigma[2] / sigma[1] != -mg.at(2, 1) / mg.at(1, 2)) continue;
    RatMatrix dc(3, 3);
    for (std::size_t i = 0; i < 3; ++i) dc.at(i, i) = sigma[i];
    Tensor3 t2 = change_basis(t1, {RatMatrix::identity(m), dc, RatMatrix::identity(m)});
    auto sq = basis_slices(t2, Axis::C);
    bool skew = true;
    for (const auto& s : sq)
      for (std::size_t i = 0; i < 3 && skew; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (s.at(i, j) != -s.at(j, i)) { skew = false; break; }
    if (!skew) continue;
    RatMatrix wmat(3, 3);
    for (std::size_t q = 0; q < 3; ++q) {
      wmat.at(0, q) = -sq[q].at(1, 2);
      wmat.at(1, q) = sq[q].at(0, 2);
      wmat.at(2, q) = -sq[q].at(0, 1);
    }
    if (rat_rank(wmat) != 3) continue;
    RatMatrix gct = rat_inverse(wmat);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) gct.at(i, j) = -gct.at(i, j);
    RatMatrix g_c = gct.transposed();
    Tensor3 t3 = change_basis(t2, {RatMatrix::identity(m), RatMatrix::identity(m), g_c});
    if (!(t3 == catalog_make("skew3", {}))) continue;
    return BasisChange{lmat, dc * kmat.transposed(), g_c};
  }
  return std::nullopt;
}

}  // namespace

Rank2SpaceKind classify_rank2_space(const Tensor3& t, Axis axis, const GridOptions& opt) {
  Rank2SpaceKind out;
  auto br = bounded_rank_test(t, axis, 2, opt);
  if (!br.bounded) {
    out.variant = Rank2Variant::NotBounded2;
    return out;
  }
  auto slices = basis_slices(t, axis);
  const std::size_t rows = slices.front().rows(), cols = slices.front().cols();
  // column-space compression (slices live in two rows after a row change)
  auto jc = joint_column_span(slices);
  if (jc.size() <= 2) {
    out.variant = Rank2Variant::TwoRows;
    out.g_row = rat_inverse(complete_basis(jc, rows));
    out.g_col = RatMatrix::identity(cols);
    return out;
  }
  auto jr = joint_row_span(slices);
  if (jr.size() <= 2) {
    out.variant = Rank2Variant::TwoRows;
    out.transposed = true;
    out.g_row = RatMatrix::identity(rows);
    out.g_col = rat_inverse(complete_basis(jr, cols));
    return out;
  }
  for (const auto& [r1, phi] : row_col_candidates(slices)) {
    RatMatrix g_row = rat_inverse(complete_basis({r1}, rows));
    RatMatrix g_col = rat_inverse(complete_basis({phi}, cols));
    if (support_row_col_only(transform_slices(slices, g_row, g_col))) {
      out.variant = Rank2Variant::RowPlusColumn;
      out.g_row = g_row;
      out.g_col = g_col;
      return out;
    }
  }
  if (rows == 3 && cols == 3) {
    // congruence onto the skew matrices via the kernel construction
    std::vector<RatVec> ks, ls;
    bool ok = true;
    std::vector<RatMatrix> gen;
    for (const auto& cov : sample_covectors(slices.size())) {
      RatMatrix mcomb = combine_slices(slices, cov);
      if (rat_rank(mcomb) == 2) gen.push_back(std::move(mcomb));
      if (gen.size() == 3) break;
    }
    if (gen.size() == 3) {
      for (const auto& s : gen) {
        auto k = rat_nullspace(s);
        auto l = rat_nullspace(s.transposed());
        if (k.size() != 1 || l.size() != 1) { ok = false; break; }
        ks.push_back(k[0]);
        ls.push_back(l[0]);
      }
      if (ok) {
        RatMatrix kmat(3, 3), lmat(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) {
            kmat.at(i, j) = ks[j][i];
            lmat.at(i, j) = ls[i][j];
          }
        if (rat_rank(kmat) == 3 && rat_rank(lmat) == 3) {
          auto tr = transform_slices(slices, lmat, kmat.transposed());  // P' = L P K
          // rescale columns so the transformed space is exactly skew
          for (long wt = 1; wt <= 4; ++wt) {
            std::vector<Rat> weights;
            Rat x = 1;
            for (std::size_t q = 0; q < tr.size(); ++q) {
              weights.push_back(x);
              x *= wt;
            }
            RatMatrix mg = combine_slices(tr, weights);
            if (mg.at(0, 1) == 0 || mg.at(0, 2) == 0 || mg.at(1, 2) == 0) continue;
            std::vector<Rat> sigma{1, -mg.at(1, 0) / mg.at(0, 1), -mg.at(2, 0) / mg.at(0, 2)};
            if (sigma[1] == 0 || sigma[2] == 0 ||
                sigma[2] / sigma[1] != -mg.at(2, 1) / mg.at(1, 2))
              continue;
            RatMatrix dc(3, 3);
            for (std::size_t i = 0; i < 3; ++i) dc.at(i, i) = sigma[i];
            RatMatrix g_col = dc * kmat.transposed();
            auto fin = transform_slices(slices, lmat, g_col);
            bool skew = true;
            for (const auto& s : fin)
              for (std::size_t i = 0; i < 3 && skew; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                  if (s.at(i, j) != -s.at(j, i)) { skew = false; break; }
            if (skew) {
              out.variant = Rank2Variant::Skew3;
              out.g_row = lmat;
              out.g_col = g_col;
              return out;
            }
          }
        }
      }
    }
  }
  out.variant = Rank2Variant::Unresolved;
  return out;
}

GR2Class classify_gr2_tensor(const Tensor3& t, const GridOptions& opt) {
  GR2Class out;
  const auto& d = t.dims();
  if (!is_concise(t)) {
    out.variant = GR2Variant::NotConcise;
    return out;
  }
  const bool cube = d[0] == d[1] && d[1] == d[2];
  bool any_bounded = false;
  bool any_unresolved = false;
  for (Axis axis : {Axis::A, Axis::B, Axis::C}) {
    auto br = bounded_rank_test(t, axis, 2, opt);
    if (!br.bounded) continue;
    any_bounded = true;
    out.bounded_axis = axis;
    if (!cube) {
      out.variant = GR2Variant::SliceSpaceRank2;
      return out;
    }
    const std::size_t m = d[0];
    const auto roles = axis_roles(axis);
    out.factor_perm = {roles[0], roles[1], roles[2]};
    Tensor3 tp = permute_factors(t, out.factor_perm);
    auto res = normalize_row_plus_column(tp, m);
    if (res.witness) {
      out.variant = GR2Variant::UtrivM;
      out.witness = res.witness;
      return out;
    }
    if (m == 3) {
      auto sk = normalize_skew(tp);
      if (sk) {
        out.variant = GR2Variant::Skew3Tensor;
        out.witness = sk;
        return out;
      }
    }
    any_unresolved = true;
  }
  if (!any_bounded) {
    out.variant = GR2Variant::NotGR2;
    out.bounded_axis.reset();
    out.factor_perm = {0, 1, 2};
  } else {
    out.variant = GR2Variant::Unresolved;
  }
  return out;
}

bool verify_compression(const Tensor3& t, Axis axis, const CompressionWitness& w) {
  auto slices = basis_slices(t, axis);
  const std::size_t rows = slices.front().rows(), cols = slices.front().cols();
  if (w.row_basis.rows() != rows || w.row_basis.cols() != rows || w.col_basis.rows() != cols ||
      w.col_basis.cols() != cols)
    fail(ErrorCode::DimensionMismatch, "compression witness dims do not match slice shape");
  if (w.k > rows || w.l > cols) fail(ErrorCode::DimensionMismatch, "compression block too large");
  for (const auto& s : transform_slices(slices, w.row_basis, w.col_basis))
    for (std::size_t i = w.k; i < rows; ++i)
      for (std::size_t j = w.l; j < cols; ++j)
        if (s.at(i, j) != 0) return false;
  return true;
}

std::optional<CompressionWitness> find_compression(const Tensor3& t, Axis axis,
                                                   std::size_t max_r) {
  auto slices = basis_slices(t, axis);
  const std::size_t rows = slices.front().rows(), cols = slices.front().cols();
  std::vector<CompressionWitness> cands;
  auto jc = joint_column_span(slices);
  if (jc.size() <= max_r && jc.size() < rows) {
    CompressionWitness w;
    w.k = jc.size();
    w.l = 0;
    w.row_basis = rat_inverse(complete_basis(jc, rows));
    w.col_basis = RatMatrix::identity(cols);
    cands.push_back(std::move(w));
  }
  auto jr = joint_row_span(slices);
  if (jr.size() <= max_r && jr.size() < cols) {
    CompressionWitness w;
    w.k = 0;
    w.l = jr.size();
    w.row_basis = RatMatrix::identity(rows);
    w.col_basis = rat_inverse(complete_basis(jr, cols));
    cands.push_back(std::move(w));
  }
  // mixed blocks from image / row-space intersections of generic slice pairs
  std::vector<RatMatrix> gen;
  for (const auto& cov : sample_covectors(slices.size())) {
    RatMatrix m = combine_slices(slices, cov);
    std::size_t r = rat_rank(m);
    if (r >= 1) gen.push_back(std::move(m));
    if (gen.size() >= 6) break;
  }
  for (std::size_t i = 0; i < gen.size(); ++i)
    for (std::size_t j = i + 1; j < gen.size(); ++j) {
      auto im = intersect_spans(image_basis(gen[i]), image_basis(gen[j]));
      auto rs = intersect_spans(rowspace_basis(gen[i]), rowspace_basis(gen[j]));
      if (im.empty() && rs.empty()) continue;
      if (im.size() + rs.size() > max_r) continue;
      if (im.size() >= rows || rs.size() >= cols) continue;
      CompressionWitness w;
      w.k = im.size();
      w.l = rs.size();
      w.row_basis = im.empty() ? RatMatrix::identity(rows)
                               : rat_inverse(complete_basis(im, rows));
      w.col_basis = rs.empty() ? RatMatrix::identity(cols)
                               : rat_inverse(complete_basis(rs, cols));
      cands.push_back(std::move(w));
    }
  std::sort(cands.begin(), cands.end(),
            [](const CompressionWitness& a, const CompressionWitness& b) {
              return a.k + a.l < b.k + b.l;
            });
  for (const auto& w : cands)
    if (w.k + w.l <= max_r && verify_compression(t, axis, w)) return w;
  return std::nullopt;
}

}  // namespace grank
