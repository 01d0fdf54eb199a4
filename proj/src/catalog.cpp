#include "grank/catalog.hpp"

#include <algorithm>

#include "grank/errors.hpp"

namespace grank {

namespace {

void need_params(const std::string& name, const std::vector<long>& p, std::size_t lo,
                 std::size_t hi, long minval) {
  if (p.size() < lo || p.size() > hi)
    fail(ErrorCode::BadParams, name + ": wrong number of parameters");
  for (auto v : p)
    if (v < minval) fail(ErrorCode::BadParams, name + ": parameter out of range");
}

Tensor3 make_matmul(int n) {
  std::vector<TensorEntry> e;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) e.push_back({u * n + v, v * n + w, w * n + u, 1});
  const int m = n * n;
  return Tensor3({m, m, m}, std::move(e));
}

Tensor3 make_cw_big(int q) {
  const int m = q + 2;
  std::vector<TensorEntry> e;
  for (int j = 1; j <= q; ++j) {
    e.push_back({0, j, j, 1});
    e.push_back({j, 0, j, 1});
    e.push_back({j, j, 0, 1});
  }
  e.push_back({0, 0, q + 1, 1});
  e.push_back({0, q + 1, 0, 1});
  e.push_back({q + 1, 0, 0, 1});
  return Tensor3({m, m, m}, std::move(e));
}

Tensor3 make_cw_small(int q) {
  const int m = q + 1;
  std::vector<TensorEntry> e;
  for (int j = 1; j <= q; ++j) {
    e.push_back({0, j, j, 1});
    e.push_back({j, 0, j, 1});
    e.push_back({j, j, 0, 1});
  }
  return Tensor3({m, m, m}, std::move(e));
}

Tensor3 make_strassen(int q) {
  std::vector<TensorEntry> e;
  for (int j = 1; j <= q; ++j) {
    e.push_back({0, j, j - 1, 1});
    e.push_back({j, 0, j - 1, 1});
  }
  return Tensor3({q + 1, q + 1, q}, std::move(e));
}

Tensor3 make_utriv(int m) {
  std::vector<TensorEntry> e{{0, 0, 0, 1}};
  for (int r = 1; r < m; ++r) {
    e.push_back({0, r, r, 1});
    e.push_back({r, 0, r, 1});
  }
  return Tensor3({m, m, m}, std::move(e));
}

Tensor3 make_maxsymcompr(int m) {
  std::vector<TensorEntry> e{{0, 0, 0, 1}};
  for (int r = 1; r < m; ++r) {
    e.push_back({0, r, r, 1});
    e.push_back({r, 0, r, 1});
    e.push_back({r, r, 0, 1});
  }
  return Tensor3({m, m, m}, std::move(e));
}

Tensor3 make_gr3_1deg(int m) {
  std::vector<TensorEntry> e;
  if (m % 2 == 0) {
    const int q = m / 2;
    for (int s = 1; s <= q; ++s) e.push_back({s - 1, 0, s - 1, 1});
    for (int t = 2; t <= q; ++t) e.push_back({t + q - 2, t - 1, 0, 1});
    for (int u = q + 1; u <= m; ++u) e.push_back({m - 1, u - 1, u - 1, 1});
  } else {
    const int q = (m + 1) / 2;
    for (int s = 2; s <= q; ++s) {
      e.push_back({s - 1, 0, s - 1, 1});
      e.push_back({s + q - 2, s - 1, 0, 1});
    }
    for (int u = q + 1; u <= m; ++u) e.push_back({0, u - 1, u - 1, 1});
  }
  return Tensor3({m, m, m}, std::move(e));
}

Tensor3 make_w() {
  return Tensor3({2, 2, 2}, {{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 0, 1}});
}

Tensor3 make_skew3() {
  std::vector<TensorEntry> e;
  const int perms[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                           {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
  for (const auto& p : perms) e.push_back({p[0], p[1], p[2], p[3]});
  return Tensor3({3, 3, 3}, std::move(e));
}

Tensor3 make_diag(int m) {
  std::vector<TensorEntry> e;
  for (int i = 0; i < m; ++i) e.push_back({i, i, i, 1});
  return Tensor3({m, m, m}, std::move(e));
}

// Structure tensor of sl_n in the basis {E_ij (i != j)} then {H_i = E_ii - E_{i+1,i+1}}.
Tensor3 make_sl(int n) {
  const int m = n * n - 1;
  struct Basis {
    int r, c;  // E_rc for r != c; r == c means H_r
  };
  std::vector<Basis> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) basis.push_back({i, j});
  for (int i = 0; i + 1 < n; ++i) basis.push_back({i, i});
  auto dense = [&](const Basis& b) {
    std::vector<long> M(static_cast<std::size_t>(n) * n, 0);
    if (b.r != b.c) {
      M[static_cast<std::size_t>(b.r) * n + b.c] = 1;
    } else {
      M[static_cast<std::size_t>(b.r) * n + b.r] = 1;
      M[static_cast<std::size_t>(b.r + 1) * n + b.r + 1] = -1;
    }
    return M;
  };
  // decompose a traceless matrix into basis coefficients (all integer)
  auto decompose = [&](const std::vector<long>& M) {
    std::vector<long> coeff(m, 0);
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) coeff[idx++] = M[static_cast<std::size_t>(i) * n + j];
    long partial = 0;
    for (int i = 0; i + 1 < n; ++i) {
      partial += M[static_cast<std::size_t>(i) * n + i];
      coeff[idx++] = partial;
    }
    return coeff;
  };
  std::vector<TensorEntry> ent;
  for (int x = 0; x < m; ++x) {
    const auto X = dense(basis[x]);
    for (int y = 0; y < m; ++y) {
      const auto Y = dense(basis[y]);
      std::vector<long> C(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          long v = 0;
          for (int t = 0; t < n; ++t)
            v += X[static_cast<std::size_t>(i) * n + t] * Y[static_cast<std::size_t>(t) * n + j] -
                 Y[static_cast<std::size_t>(i) * n + t] * X[static_cast<std::size_t>(t) * n + j];
          C[static_cast<std::size_t>(i) * n + j] = v;
        }
      const auto coeff = decompose(C);
      for (int k = 0; k < m; ++k)
        if (coeff[k] != 0) ent.push_back({x, y, k, coeff[k]});
    }
  }
  return Tensor3({m, m, m}, std::move(ent));
}

// Symmetrized matmul: coefficients of tr(XYZ) + tr(YXZ) in the E_ab basis.
Tensor3 make_smm(int n) {
  const int m = n * n;
  std::vector<TensorEntry> ent;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f) {
              int coeff = 0;
              if (b == c && d == e && f == a) ++coeff;
              if (d == a && b == e && f == c) ++coeff;
              if (coeff) ent.push_back({a * n + b, c * n + d, e * n + f, coeff});
            }
  return Tensor3({m, m, m}, std::move(ent));
}

uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// a_1 (x) (sum_j b_j (x) c_j) + T' with T' a seeded pseudo-random block of full
// flattening ranks (the "generic" block; re-seeds until ranks check out).
Tensor3 make_bigbr(int m, long seed) {
  const int bhi = m / 2;            // block B-indices: 0..bhi-1 (1-based b_1..b_{m/2})
  const int clo = (m + 1) / 2 - 1;  // block C-indices: clo..m-1 (1-based c_{ceil(m/2)}..c_m)
  for (long attempt = 0; attempt < 64; ++attempt) {
    uint64_t state = static_cast<uint64_t>(seed) * 0x100000001b3ull + attempt + 1;
    std::vector<TensorEntry> ent;
    for (int j = 0; j < m; ++j) ent.push_back({0, j, j, 1});
    for (int i = 1; i < m; ++i)
      for (int j = 0; j < bhi; ++j)
        for (int k = clo; k < m; ++k) {
          const uint64_t r = splitmix64(state);
          const int v = static_cast<int>(r % 9) - 4;  // in [-4, 4]
          if (v != 0) {
            if (j == k) {
              // avoid colliding with the identity part's (0,j,j); block has i >= 1 so no clash
            }
            ent.push_back({i, j, k, v});
          }
        }
    Tensor3 t({m, m, m}, std::move(ent));
    // verify the generic block has full flattening ranks
    std::vector<TensorEntry> block;
    for (const auto& e : t.entries())
      if (e.i >= 1) block.push_back({e.i - 1, e.j, e.k - clo, e.coeff});
    Tensor3 tb({m - 1, bhi, m - clo}, std::move(block));
    auto fr = flattening_ranks(tb);
    const std::size_t want_a =
        std::min<std::size_t>(m - 1, static_cast<std::size_t>(bhi) * (m - clo));
    if (fr[0] == want_a && fr[1] == static_cast<std::size_t>(bhi) &&
        fr[2] == static_cast<std::size_t>(m - clo))
      return t;
  }
  fail(ErrorCode::BadParams, "bigbr: could not realize a generic block");
}

}  // namespace

Tensor3 catalog_make(const std::string& name, const std::vector<long>& params) {
  if (name == "matmul") { need_params(name, params, 1, 1, 1); return make_matmul(params[0]); }
  if (name == "cw_big") { need_params(name, params, 1, 1, 1); return make_cw_big(params[0]); }
  if (name == "cw_small") { need_params(name, params, 1, 1, 1); return make_cw_small(params[0]); }
  if (name == "strassen") { need_params(name, params, 1, 1, 1); return make_strassen(params[0]); }
  if (name == "utriv") { need_params(name, params, 1, 1, 2); return make_utriv(params[0]); }
  if (name == "maxsymcompr") { need_params(name, params, 1, 1, 2); return make_maxsymcompr(params[0]); }
  if (name == "gr3_1deg") {
    need_params(name, params, 1, 1, 4);
    return make_gr3_1deg(params[0]);
  }
  if (name == "W") { need_params(name, params, 0, 0, 0); return make_w(); }
  if (name == "sl") { need_params(name, params, 1, 1, 2); return make_sl(params[0]); }
  if (name == "smm") { need_params(name, params, 1, 1, 2); return make_smm(params[0]); }
  if (name == "diag") { need_params(name, params, 1, 1, 1); return make_diag(params[0]); }
  if (name == "skew3") { need_params(name, params, 0, 0, 0); return make_skew3(); }
  if (name == "bigbr") {
    need_params(name, params, 1, 2, 0);
    if (params[0] < 4) fail(ErrorCode::BadParams, "bigbr: m must be >= 4");
    return make_bigbr(params[0], params.size() > 1 ? params[1] : 0);
  }
  fail(ErrorCode::UnknownName, "unknown catalog tensor '" + name + "'");
}

CatalogInfo catalog_info(const std::string& name, const std::vector<long>& params) {
  CatalogInfo info;
  info.id = name;
  if (!params.empty()) {
    info.id += "(";
    for (std::size_t i = 0; i < params.size(); ++i)
      info.id += (i ? "," : "") + std::to_string(params[i]);
    info.id += ")";
  }
  auto p0 = [&]() { return params.at(0); };
  if (name == "matmul") {
    const long n = p0();
    info.expected_gr = (3 * n * n + 3) / 4;
  } else if (name == "cw_big") {
    info.known_rank = 2 * p0() + 3;
    info.known_border_rank = p0() + 2;
    info.expected_gr = 3;
  } else if (name == "cw_small") {
    info.known_rank = 2 * p0() + 1;
    info.known_border_rank = p0() + 2;
    info.expected_gr = 3;
  } else if (name == "strassen") {
    info.known_rank = 2 * p0();
    info.known_border_rank = p0() + 1;
    info.expected_gr = 2;
  } else if (name == "utriv") {
    info.known_rank = 2 * p0() - 1;
    info.known_border_rank = p0();
    info.expected_gr = 2;
  } else if (name == "maxsymcompr") {
    if (p0() >= 3) info.expected_gr = 3;
  } else if (name == "gr3_1deg") {
    const long m = p0();
    if (m % 2 == 0)
      info.known_rank = 3 * m / 2 - 1;
    else
      info.known_rank = m + (m - 1) / 2 - 2;
    info.expected_gr = 3;
  } else if (name == "W") {
    info.known_rank = 3;
    info.known_border_rank = 2;
    info.expected_gr = 2;
  } else if (name == "sl") {
    info.expected_gr = p0() * p0() - p0();
  } else if (name == "smm") {
    info.expected_gr = p0() * p0() - p0() / 2;
  } else if (name == "diag") {
    info.known_rank = p0();
    info.known_border_rank = p0();
    info.expected_gr = p0();
  } else if (name == "skew3") {
    info.expected_gr = 2;
  }
  return info;
}

std::vector<std::string> catalog_names() {
  return {"matmul", "cw_big", "cw_small", "strassen", "utriv", "maxsymcompr", "gr3_1deg",
          "W",      "sl",     "smm",      "diag",     "skew3", "bigbr"};
}

}  // namespace grank
