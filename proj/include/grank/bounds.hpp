#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grank/catalog.hpp"
#include "grank/classify.hpp"
#include "grank/grank.hpp"

namespace grank {

enum class BoundSource {
  ConciseFloor,
  MinRankExclusion,
  CompressionBound,
  GR3General,
  GR3OneStarGeneric,
};
const char* bound_source_name(BoundSource s);

struct Bound {
  long value = 0;
  BoundSource source;
  std::string witness;
  bool conditional = false;  // preconditions rest on an uncertified GR
};

struct BoundReport {
  std::vector<Bound> bounds;
  std::optional<long> best;  // max over unconditional bounds
  std::optional<long> known_rank;
  bool consistent = true;  // best <= known_rank whenever known
  std::vector<std::string> notes;
};

// max multilinear rank <= border rank <= rank
long concise_floor(const Tensor3& t);

// concise cube with certified GR < m has rank > m
std::optional<long> minrank_exclusion(const Tensor3& t, const GRReport& gr);

// rows + cols - (k + l) for a verified compression of the slice space;
// requires the two non-axis factors concise (the row/column deletions each
// remove a nonzero slice). Throws PreconditionFailed otherwise.
long compression_rank_bound(const Tensor3& t, Axis axis, const CompressionWitness& w);

// rank bounds for certified GR <= 3 concise tensors
std::optional<long> gr3_rank_bound(const Tensor3& t, const GRReport& gr,
                                   const GenericityFlags& flags);

struct BoundOptions {
  GROptions gr;
  GridOptions grid;
  std::optional<CatalogInfo> catalog;
};

BoundReport combined_bound_report(const Tensor3& t, const BoundOptions& opt = {});

}  // namespace grank
