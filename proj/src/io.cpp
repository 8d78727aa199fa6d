#include "ua/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ua {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex_digest(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[std::size_t(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return s;
}

namespace {

int require_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw std::runtime_error("algebra file: " + where + " must be an integer");
  return j.get<int>();
}

}  // namespace

FiniteAlgebra parse_algebra_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("algebra file: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("algebra file: top level must be an object");
  if (!j.contains("carrier") || !j.contains("operations"))
    throw std::runtime_error("algebra file: needs \"carrier\" and \"operations\" keys");

  FiniteAlgebra a;
  a.carrier = require_int(j["carrier"], "carrier");
  if (!j["operations"].is_array())
    throw std::runtime_error("algebra file: operations must be an array");

  std::size_t idx = 0;
  for (const auto& oj : j["operations"]) {
    const std::string where = "operations[" + std::to_string(idx) + "]";
    if (!oj.is_object()) throw std::runtime_error("algebra file: " + where + " must be an object");
    if (!oj.contains("name") || !oj["name"].is_string())
      throw std::runtime_error("algebra file: " + where + ".name must be a string");
    if (!oj.contains("support") || !oj["support"].is_array())
      throw std::runtime_error("algebra file: " + where + ".support must be an array");
    if (!oj.contains("table") || !oj["table"].is_array())
      throw std::runtime_error("algebra file: " + where + ".table must be an array");

    FiniteAlgebra::NamedOp op;
    op.name = oj["name"].get<std::string>();
    op.op.carrier = a.carrier;
    std::size_t k = 0;
    for (const auto& sj : oj["support"])
      op.op.support.push_back(
          require_int(sj, where + ".support[" + std::to_string(k++) + "]"));
    k = 0;
    for (const auto& tj : oj["table"])
      op.op.table.push_back(
          require_int(tj, where + ".table[" + std::to_string(k++) + "]"));
    a.ops.push_back(std::move(op));
    ++idx;
  }

  try {
    validate_algebra(a);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("algebra file: ") + e.what());
  }
  return a;
}

FiniteAlgebra load_algebra_json(const std::string& path) {
  return parse_algebra_json(read_file(path));
}

std::string algebra_to_json(const FiniteAlgebra& a) {
  nlohmann::ordered_json j;
  j["carrier"] = a.carrier;
  j["operations"] = nlohmann::ordered_json::array();
  for (const auto& op : a.ops) {
    nlohmann::ordered_json oj;
    oj["name"] = op.name;
    oj["support"] = op.op.support;
    oj["table"] = op.op.table;
    j["operations"].push_back(std::move(oj));
  }
  return j.dump(2) + "\n";
}

SubsetFamily parse_family_lines(const std::string& text) {
  SubsetFamily fam;
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw std::runtime_error("family file: needs at least one 0/1 line");
  fam.base_size = static_cast<int>(lines.front().size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (static_cast<int>(lines[i].size()) != fam.base_size)
      throw std::runtime_error("family file: line " + std::to_string(i + 1) +
                               " has a different length");
    Subset s(fam.base_size);
    for (int p = 0; p < fam.base_size; ++p) {
      const char c = lines[i][std::size_t(p)];
      if (c != '0' && c != '1')
        throw std::runtime_error("family file: line " + std::to_string(i + 1) +
                                 " holds a character other than 0/1");
      if (c == '1') s.add(p);
    }
    fam.members.push_back(std::move(s));
  }
  try {
    validate_family(fam);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("family file: ") + e.what());
  }
  return fam;
}

SubsetFamily load_family_lines(const std::string& path) {
  return parse_family_lines(read_file(path));
}

std::string family_to_lines(const SubsetFamily& f) {
  validate_family(f);
  std::string out;
  for (const auto& m : f.members) {
    for (int p = 0; p < f.base_size; ++p) out += m.contains(p) ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace {

constexpr const char* kCertHeader = "marczewski-cert/1";

void append_ints(std::string& out, const std::vector<int>& xs) {
  for (int x : xs) out += " " + std::to_string(x);
}

struct LineReader {
  std::istringstream in;
  int number = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("certificate line " + std::to_string(number) + ": " + msg);
  }

  std::istringstream next(const std::string& expect_tag) {
    std::string line;
    if (!std::getline(in, line)) fail("unexpected end of file, wanted " + expect_tag);
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag != expect_tag)
      fail("expected a " + expect_tag + " line");
    return ls;
  }

  int read_int(std::istringstream& ls, const std::string& what) {
    int v;
    if (!(ls >> v)) fail("missing " + what);
    return v;
  }

  void done(std::istringstream& ls) {
    std::string rest;
    if (ls >> rest) fail("trailing token " + rest);
  }
};

}  // namespace

std::string certificate_to_text(const FreeSetCertificate& c) {
  std::string out = std::string(kCertHeader) + "\n";
  out += "carrier " + std::to_string(c.base.carrier) + "\n";
  out += "ops " + std::to_string(c.base.ops.size()) + "\n";
  for (const auto& op : c.base.ops) {
    if (op.name.find_first_of(" \t\r\n") != std::string::npos)
      throw std::invalid_argument(
          "operation names in certificates must not contain whitespace");
    out += "op " + op.name + " " + std::to_string(op.op.arity());
    append_ints(out, op.op.support);
    append_ints(out, op.op.table);
    out += "\n";
  }
  out += "cap " + std::to_string(c.cap) + "\n";
  out += "m " + std::to_string(c.m) + "\n";
  out += "default " + std::to_string(c.default_value) + "\n";
  out += "triples " + std::to_string(c.triples.size()) + "\n";
  for (const auto& e : c.triples) {
    out += "t " + std::to_string(e.r) + " " + std::to_string(e.alpha_idx) + " " +
           std::to_string(e.beta_idx);
    append_ints(out, e.u);
    append_ints(out, e.witness_p);
    out += "\n";
  }
  for (const auto& g : c.generators) {
    out += "gen";
    append_ints(out, g);
    out += "\n";
  }
  return out;
}

FreeSetCertificate parse_certificate_text(const std::string& text) {
  LineReader r(text);
  {
    std::string line;
    if (!std::getline(r.in, line)) r.fail("empty file");
    ++r.number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCertHeader)
      r.fail(std::string("expected version header ") + kCertHeader);
  }

  FreeSetCertificate c;
  {
    auto ls = r.next("carrier");
    c.base.carrier = r.read_int(ls, "carrier size");
    r.done(ls);
  }
  int op_count = 0;
  {
    auto ls = r.next("ops");
    op_count = r.read_int(ls, "operation count");
    r.done(ls);
  }
  if (op_count < 0) r.fail("negative operation count");
  for (int i = 0; i < op_count; ++i) {
    auto ls = r.next("op");
    FiniteAlgebra::NamedOp op;
    if (!(ls >> op.name)) r.fail("missing operation name");
    const int arity = r.read_int(ls, "arity");
    if (arity < 0 || arity > 8) r.fail("arity out of range");
    op.op.carrier = c.base.carrier;
    for (int s = 0; s < arity; ++s)
      op.op.support.push_back(r.read_int(ls, "support coordinate"));
    std::size_t entries = 0;
    try {
      entries = table_size(c.base.carrier, arity);
    } catch (const std::exception& e) {
      r.fail(e.what());
    }
    for (std::size_t t = 0; t < entries; ++t)
      op.op.table.push_back(r.read_int(ls, "table entry"));
    r.done(ls);
    c.base.ops.push_back(std::move(op));
  }
  {
    auto ls = r.next("cap");
    c.cap = r.read_int(ls, "cap");
    r.done(ls);
  }
  {
    auto ls = r.next("m");
    c.m = r.read_int(ls, "m");
    r.done(ls);
  }
  {
    auto ls = r.next("default");
    c.default_value = r.read_int(ls, "default value");
    r.done(ls);
  }
  long long triple_count = 0;
  {
    auto ls = r.next("triples");
    triple_count = r.read_int(ls, "triple count");
    r.done(ls);
  }
  if (triple_count < 0) r.fail("negative triple count");
  for (long long i = 0; i < triple_count; ++i) {
    auto ls = r.next("t");
    TripleEntry e;
    e.r = r.read_int(ls, "arity");
    if (e.r < 1 || e.r > 8) r.fail("triple arity out of range");
    e.alpha_idx = r.read_int(ls, "alpha index");
    e.beta_idx = r.read_int(ls, "beta index");
    for (int k = 0; k < e.r; ++k) e.u.push_back(r.read_int(ls, "u entry"));
    for (int k = 0; k < e.r; ++k) e.witness_p.push_back(r.read_int(ls, "witness entry"));
    r.done(ls);
    c.triples.push_back(std::move(e));
  }
  if (c.m < 0 || c.m > 1000000) r.fail("m out of range");
  const long long xs = triple_count + c.m;
  for (int j = 0; j < c.m; ++j) {
    auto ls = r.next("gen");
    PowerElement g;
    for (long long x = 0; x < xs; ++x) g.push_back(r.read_int(ls, "generator value"));
    r.done(ls);
    c.generators.push_back(std::move(g));
  }
  {
    std::string line;
    while (std::getline(r.in, line)) {
      ++r.number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) r.fail("trailing content after the certificate");
    }
  }
  return c;
}

FreeSetCertificate load_certificate(const std::string& path) {
  return parse_certificate_text(read_file(path));
}

}  // namespace ua
