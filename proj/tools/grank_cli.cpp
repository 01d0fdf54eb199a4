#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "grank/bounds.hpp"
#include "grank/catalog.hpp"
#include "grank/classify.hpp"
#include "grank/errors.hpp"
#include "grank/genericity.hpp"
#include "grank/grank.hpp"
#include "grank/report_json.hpp"
#include "grank/tensor_io.hpp"

namespace {

using namespace grank;

std::vector<uint32_t> parse_primes(const std::string& s) {
  std::vector<uint32_t> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(static_cast<uint32_t>(std::stoul(tok)));
  }
  if (out.empty()) fail(ErrorCode::BadParams, "empty prime list");
  return out;
}

std::vector<Pairing> parse_pairings(const std::string& s) {
  std::vector<Pairing> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "ab" || tok == "AB") out.push_back(Pairing::AB);
    else if (tok == "ac" || tok == "AC") out.push_back(Pairing::AC);
    else if (tok == "bc" || tok == "BC") out.push_back(Pairing::BC);
    else if (!tok.empty()) fail(ErrorCode::BadParams, "unknown pairing '" + tok + "'");
  }
  if (out.empty()) fail(ErrorCode::BadParams, "empty pairing list");
  return out;
}

std::pair<std::string, std::vector<long>> parse_catalog_ref(const std::string& s) {
  const auto colon = s.find(':');
  std::string name = s.substr(0, colon);
  std::vector<long> params;
  if (colon != std::string::npos) {
    std::istringstream in(s.substr(colon + 1));
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) params.push_back(std::stol(tok));
  }
  return {name, params};
}

Json report_skeleton(const Tensor3& t, const std::optional<std::string>& catalog_id,
                     uint64_t budget) {
  Json j;
  j["schema"] = 1;
  j["tensor"] = tensor_json(t, catalog_id);
  j["budget"] = budget;
  j["warnings"] = Json::array();
  return j;
}

void print_text_header(const Tensor3& t) {
  const auto& d = t.dims();
  std::cout << "tensor " << d[0] << "x" << d[1] << "x" << d[2] << ", " << t.entry_count()
            << " entries\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact geometric-rank toolkit for integer 3-tensors"};
  app.require_subcommand(1);

  std::string file, file2, outfile, axis_str = "A", primes_str = "3,5,7",
                                     pairings_str = "ab,ac,bc", catalog_ref;
  uint64_t budget = 100'000'000;
  uint32_t prime = 3;
  int threads = 0;
  bool json = false, timing = false, no_extend = false;
  std::string gen_name;
  std::vector<long> gen_params;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "emit a machine-readable report");
    cmd->add_flag("--timing", timing, "include wall-clock timing in the report");
    cmd->add_option("--budget", budget, "enumeration budget (points per axis/prime)");
    cmd->add_option("--threads", threads, "worker threads (default: GRANK_THREADS or all cores)");
  };

  auto* c_info = app.add_subcommand("info", "dimensions, multilinear ranks, genericity flags");
  c_info->add_option("file", file)->required();
  add_common(c_info);

  auto* c_gr = app.add_subcommand("gr", "geometric rank by point counting");
  c_gr->add_option("file", file)->required();
  c_gr->add_option("--primes", primes_str, "comma-separated prime ladder");
  c_gr->add_option("--pairings", pairings_str, "subset of ab,ac,bc");
  c_gr->add_flag("--no-extend", no_extend, "do not extend the prime ladder on ambiguity");
  add_common(c_gr);

  auto* c_strata = app.add_subcommand("strata", "rank stratum histogram over F_p");
  c_strata->add_option("file", file)->required();
  c_strata->add_option("--axis", axis_str, "A, B or C")->required();
  c_strata->add_option("--prime", prime, "field size")->required();
  add_common(c_strata);

  auto* c_classify = app.add_subcommand("classify", "geometric-rank-2 normal form");
  c_classify->add_option("file", file)->required();
  add_common(c_classify);

  auto* c_bound = app.add_subcommand("bound", "tensor-rank lower bounds");
  c_bound->add_option("file", file)->required();
  c_bound->add_option("--primes", primes_str, "comma-separated prime ladder");
  c_bound->add_option("--catalog", catalog_ref, "attach catalog metadata, e.g. utriv:5");
  add_common(c_bound);

  auto* c_gen = app.add_subcommand("gen", "write a catalog tensor");
  c_gen->add_option("name", gen_name)->required();
  c_gen->add_option("params", gen_params, "integer parameters");
  c_gen->add_option("-o,--output", outfile)->required();

  auto* c_kron = app.add_subcommand("kron", "Kronecker product of two tensor files");
  c_kron->add_option("file1", file)->required();
  c_kron->add_option("file2", file2)->required();
  c_kron->add_option("-o,--output", outfile)->required();

  auto* c_dsum = app.add_subcommand("dsum", "direct sum of two tensor files");
  c_dsum->add_option("file1", file)->required();
  c_dsum->add_option("file2", file2)->required();
  c_dsum->add_option("-o,--output", outfile)->required();

  CLI11_PARSE(app, argc, argv);
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  if (c_gen->parsed()) {
    write_tensor_file(outfile, catalog_make(gen_name, gen_params));
    return 0;
  }
  if (c_kron->parsed()) {
    write_tensor_file(outfile, kronecker(read_tensor_file(file), read_tensor_file(file2)));
    return 0;
  }
  if (c_dsum->parsed()) {
    write_tensor_file(outfile, direct_sum(read_tensor_file(file), read_tensor_file(file2)));
    return 0;
  }

  Tensor3 t = read_tensor_file(file);

  if (c_info->parsed()) {
    auto ml = multilinear_ranks(t);
    GridOptions gopt;
    gopt.budget = std::min<uint64_t>(budget, 10'000'000);
    auto fl = genericity_flags(t, gopt);
    if (json) {
      Json j = report_skeleton(t, std::nullopt, budget);
      j["mlranks"] = mlranks_json(ml);
      j["flags"] = flags_json(fl);
      if (timing) j["timing"] = elapsed();
      std::cout << emit_report(j);
    } else {
      print_text_header(t);
      std::cout << "multilinear ranks: (" << ml.ml_a << ", " << ml.ml_b << ", " << ml.ml_c
                << ")\n"
                << "concise: " << (fl.concise ? "yes" : "no") << "\n";
      if (fl.applicable)
        std::cout << "1_A/1_B/1_C-generic: " << fl.one_a << "/" << fl.one_b << "/" << fl.one_c
                  << (fl.probabilistic ? " (probabilistic)" : "") << "\n";
    }
    return 0;
  }

  if (c_gr->parsed()) {
    GROptions opt;
    opt.primes = parse_primes(primes_str);
    opt.pairings = parse_pairings(pairings_str);
    opt.budget = budget;
    opt.threads = threads;
    opt.auto_extend = !no_extend;
    auto rep = geometric_rank(t, opt);
    if (json) {
      Json j = report_skeleton(t, std::nullopt, budget);
      j["gr"] = gr_json(rep);
      j["strata"] = strata_json(rep, t);
      j["mlranks"] = mlranks_json(multilinear_ranks(t));
      for (const auto& w : rep.warnings) j["warnings"].push_back(w);
      if (timing) j["timing"] = elapsed();
      std::cout << emit_report(j);
    } else {
      print_text_header(t);
      if (rep.gr)
        std::cout << "geometric rank: " << *rep.gr << (rep.certified ? "" : " (uncertified)")
                  << "\n";
      else
        std::cout << "geometric rank: inconsistent routes\n";
      for (const auto& [pr, v] : rep.gr_pairing)
        std::cout << "  " << pairing_name(pr) << ": " << v << "\n";
      std::cout << "  primes:";
      for (auto p : rep.primes_used) std::cout << " " << p;
      std::cout << "\n";
      for (const auto& w : rep.warnings) std::cout << "  warning: " << w << "\n";
    }
    return 0;
  }

  if (c_strata->parsed()) {
    const Axis axis = axis_from_name(axis_str);
    auto prof = stratum_counts(t, axis, prime, budget, threads);
    if (json) {
      Json j = report_skeleton(t, std::nullopt, budget);
      Json counts;
      for (const auto& [r, c] : prof.counts) counts[std::to_string(r)] = int_to_json(c);
      j["strata"] = Json{{"axis", axis_name(axis)}, {"prime", prime}, {"counts", counts}};
      if (timing) j["timing"] = elapsed();
      std::cout << emit_report(j);
    } else {
      print_text_header(t);
      std::cout << "axis " << axis_name(axis) << ", p=" << prime << "\n";
      for (const auto& [r, c] : prof.counts)
        std::cout << "  rank " << r << ": " << c.str() << "\n";
    }
    return 0;
  }

  if (c_classify->parsed()) {
    GridOptions gopt;
    gopt.budget = std::min<uint64_t>(budget, 10'000'000);
    auto cls = classify_gr2_tensor(t, gopt);
    if (json) {
      Json j = report_skeleton(t, std::nullopt, budget);
      j["classification"] = classification_json(cls);
      if (timing) j["timing"] = elapsed();
      std::cout << emit_report(j);
    } else {
      print_text_header(t);
      std::cout << "classification: " << gr2_variant_name(cls.variant) << "\n";
      if (cls.bounded_axis)
        std::cout << "bounded-rank-2 axis: " << axis_name(*cls.bounded_axis) << "\n";
      if (cls.witness) std::cout << "witness: exact basis change recovered\n";
    }
    return 0;
  }

  if (c_bound->parsed()) {
    BoundOptions opt;
    opt.gr.primes = parse_primes(primes_str);
    opt.gr.budget = budget;
    opt.gr.threads = threads;
    opt.grid.budget = std::min<uint64_t>(budget, 10'000'000);
    if (!catalog_ref.empty()) {
      auto [name, params] = parse_catalog_ref(catalog_ref);
      opt.catalog = catalog_info(name, params);
    }
    auto rep = combined_bound_report(t, opt);
    if (json) {
      Json j = report_skeleton(t, opt.catalog ? std::optional(opt.catalog->id) : std::nullopt,
                               budget);
      j["bounds"] = bounds_json(rep);
      if (timing) j["timing"] = elapsed();
      std::cout << emit_report(j);
    } else {
      print_text_header(t);
      for (const auto& b : rep.bounds)
        std::cout << "  " << bound_source_name(b.source) << ": " << b.value << " (" << b.witness
                  << ")" << (b.conditional ? " [conditional]" : "") << "\n";
      if (rep.best) std::cout << "best lower bound: " << *rep.best << "\n";
      if (rep.known_rank)
        std::cout << "known rank: " << *rep.known_rank
                  << (rep.consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
      for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const grank::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == grank::ErrorCode::BudgetExceeded ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
