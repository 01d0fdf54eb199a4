#include "grank/tensor_io.hpp"

#include <fstream>
#include <sstream>

#include "grank/errors.hpp"

namespace grank {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

bool parse_int(const std::string& tok, Int& out) {
  if (tok.empty()) return false;
  std::size_t q = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
  if (q == tok.size()) return false;
  for (; q < tok.size(); ++q)
    if (!std::isdigit(static_cast<unsigned char>(tok[q]))) return false;
  out = Int(tok);
  return true;
}

}  // namespace

Tensor3 parse_tensor_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::array<int, 3> dims{};
  bool have_header = false;
  std::vector<TensorEntry> entries;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
      sv.remove_suffix(1);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;
    std::istringstream ls{std::string(sv)};
    if (!have_header) {
      std::string magic;
      long a, b, c;
      if (!(ls >> magic >> a >> b >> c) || magic != "t3")
        parse_fail(lineno, "expected header 't3 a b c'");
      std::string rest;
      if (ls >> rest) parse_fail(lineno, "trailing tokens after header");
      if (a < 1 || b < 1 || c < 1) parse_fail(lineno, "dimensions must be positive");
      dims = {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
      have_header = true;
      continue;
    }
    long i, j, k;
    std::string coeff_tok;
    if (!(ls >> i >> j >> k >> coeff_tok)) parse_fail(lineno, "expected 'i j k coeff'");
    std::string rest;
    if (ls >> rest) parse_fail(lineno, "trailing tokens after entry");
    Int coeff;
    if (!parse_int(coeff_tok, coeff)) parse_fail(lineno, "bad integer coefficient");
    if (i < 0 || i >= dims[0] || j < 0 || j >= dims[1] || k < 0 || k >= dims[2])
      fail(ErrorCode::IndexOutOfRange, "line " + std::to_string(lineno) + ": index out of range");
    for (const auto& e : entries)
      if (e.i == i && e.j == j && e.k == k)
        fail(ErrorCode::DuplicateEntry, "line " + std::to_string(lineno) + ": duplicate entry");
    entries.push_back(
        {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k), Rat(coeff)});
  }
  if (!have_header) fail(ErrorCode::ParseError, "empty input: missing 't3' header");
  return Tensor3(dims, std::move(entries));
}

std::string emit_tensor_file(const Tensor3& t) {
  std::ostringstream out;
  const auto& d = t.dims();
  out << "t3 " << d[0] << " " << d[1] << " " << d[2] << "\n";
  for (const auto& e : t.entries()) {
    if (!is_integer(e.coeff))
      fail(ErrorCode::BadParams, "tensor files hold integer coefficients only");
    out << e.i << " " << e.j << " " << e.k << " " << rat_num(e.coeff).str() << "\n";
  }
  return out.str();
}

Tensor3 read_tensor_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tensor_file(buf.str());
}

void write_tensor_file(const std::string& path, const Tensor3& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out << emit_tensor_file(t);
}

}  // namespace grank
