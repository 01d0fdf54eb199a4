#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grank/tensor.hpp"

namespace grank {

struct CatalogInfo {
  std::string id;                         // canonical "name(params)" label
  std::optional<long> known_rank;         // exact tensor rank, when known
  std::optional<long> known_border_rank;  // exact border rank, when known
  std::optional<long> expected_gr;        // geometric rank, when known
};

// Names: matmul(n), cw_big(q), cw_small(q), strassen(q), utriv(m),
// maxsymcompr(m), gr3_1deg(m), W, sl(n), smm(n), diag(m), skew3, bigbr(m[,seed]).
Tensor3 catalog_make(const std::string& name, const std::vector<long>& params);
CatalogInfo catalog_info(const std::string& name, const std::vector<long>& params);
std::vector<std::string> catalog_names();

}  // namespace grank
