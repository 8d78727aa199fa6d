#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ua/clone.hpp"
#include "ua/corpus.hpp"
#include "ua/free_set.hpp"
#include "ua/hull.hpp"
#include "ua/independence.hpp"
#include "ua/io.hpp"
#include "ua/power.hpp"
#include "ua/set_family.hpp"
#include "ua/subset.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

std::string g_command_echo;

void print_command() { std::cout << "command:" << g_command_echo << "\n"; }

std::string load_with_digest(const std::string& path, std::string& text) {
  text = ua::read_file(path);
  return ua::hex_digest(ua::fnv1a64(text));
}

ua::FiniteAlgebra load_algebra_reported(const std::string& path) {
  std::string text;
  const std::string digest = load_with_digest(path, text);
  std::cout << "input " << path << ": fnv1a64 " << digest << "\n";
  return ua::parse_algebra_json(text);
}

ua::Subset parse_set(const std::string& spec, int carrier) {
  ua::Subset s(carrier);
  std::stringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    const int v = std::stoi(tok);
    if (v < 0 || v >= carrier)
      throw std::runtime_error("set element " + tok + " outside carrier 0.." +
                               std::to_string(carrier - 1));
    s.add(v);
  }
  return s;
}

std::string describe(const ua::Operation& op) { return ua::to_string(op); }

std::string tuple_string(const std::vector<ua::Element>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

int run_clone(const std::string& file, int cap, bool tables) {
  print_command();
  const ua::FiniteAlgebra a = load_algebra_reported(file);
  const ua::CloneSlice s = ua::clone_upto(a, cap);
  std::cout << "counts: ";
  for (int r = 0; r <= cap; ++r)
    std::cout << (r ? ", " : "") << r << "-ary: " << s.per_arity[std::size_t(r)].size();
  std::cout << "\n" << "total: " << s.total_ops() << "\n";
  if (tables)
    for (int r = 0; r <= cap; ++r)
      for (std::size_t i = 0; i < s.per_arity[std::size_t(r)].size(); ++i)
        std::cout << "t" << r << "_" << i << ": "
                  << describe(s.per_arity[std::size_t(r)][i]) << "\n";
  return kExitTrue;
}

int run_hull(const std::string& file, const std::string& set_spec, bool one_step,
             const std::string& check, std::optional<std::uint64_t> seed, int samples) {
  print_command();
  const ua::FiniteAlgebra a = load_algebra_reported(file);
  if (check.empty()) {
    const ua::Subset b = parse_set(set_spec, a.carrier);
    std::cout << "set: " << b.to_string() << "\n";
    const ua::Subset h =
        one_step ? ua::algebra_hull_once(a, b) : ua::generated_subalgebra(a, b);
    std::cout << (one_step ? "one-step hull: " : "hull: ") << h.to_string() << "\n";
    return kExitTrue;
  }

  ua::HullCheckOptions opts;
  opts.seed = seed;
  opts.samples = samples;
  if (seed) std::cout << "seed: " << *seed << "\n";
  const ua::HullOperator h = ua::subalgebra_hull(a);
  std::cout << "check: " << check << "\n";
  bool verdict;
  if (check == "closure") {
    const auto r = ua::check_closure(h, opts);
    verdict = r.holds;
    if (r.witness)
      std::cout << "witness: set " << r.witness->set.to_string()
                << " has a non-idempotent hull\n";
  } else if (check == "exchange") {
    const auto r = ua::check_exchange(h, opts);
    verdict = r.holds;
    if (r.witness)
      std::cout << "witness: set " << r.witness->set.to_string() << " with x "
                << r.witness->x << ", y " << r.witness->y << "\n";
  } else if (check == "monotone") {
    const auto r = ua::check_monotone(h, opts);
    verdict = r.holds;
    if (r.witness)
      std::cout << "witness: set " << r.witness->set.to_string() << " with x "
                << r.witness->x << "\n";
  } else if (check == "matroid") {
    verdict = ua::is_matroid_type(h, opts);
  } else {
    throw std::runtime_error("unknown check " + check);
  }
  std::cout << "verdict: " << (verdict ? "true" : "false") << "\n";
  return verdict ? kExitTrue : kExitFalse;
}

int run_indep(const std::string& file, const std::string& set_spec,
              const std::string& mode) {
  print_command();
  const ua::FiniteAlgebra a = load_algebra_reported(file);
  const ua::Subset b = parse_set(set_spec, a.carrier);
  std::cout << "set: " << b.to_string() << "\n" << "mode: " << mode << "\n";

  bool verdict;
  if (mode == "independent") {
    const auto r = ua::is_independent(ua::subalgebra_hull(a), b);
    verdict = r.holds;
    if (r.witness)
      std::cout << "witness: element " << r.witness->b
                << " lies in the hull of the rest\n";
  } else if (mode == "strong") {
    const auto r = ua::is_strongly_independent(ua::subalgebra_hull(a), b);
    verdict = r.holds;
    if (r.witness) {
      if (r.witness->in_empty_hull)
        std::cout << "witness: element " << *r.witness->in_empty_hull
                  << " already lies in the hull of {}\n";
      else
        std::cout << "witness: hulls of " << r.witness->pair->first.to_string()
                  << " and " << r.witness->pair->second.to_string() << " meet at "
                  << r.witness->point << " beyond the hull of their intersection\n";
    }
  } else if (mode == "free") {
    const auto r = ua::is_free(a, b);
    verdict = r.holds;
    if (r.witness) {
      std::cout << "witness: alpha " << describe(r.witness->alpha) << " on x "
                << tuple_string(r.witness->x) << " agrees with beta "
                << describe(r.witness->beta) << " on y " << tuple_string(r.witness->y)
                << " but separates under f " << tuple_string(r.witness->f) << "\n";
    }
  } else if (mode == "free-clone") {
    const auto r = ua::is_free_clone(ua::clone_upto(a, b.count()), b);
    verdict = r.holds;
    if (r.witness)
      std::cout << "witness: " << describe(r.witness->alpha) << " and "
                << describe(r.witness->beta) << " agree on injective tuple "
                << tuple_string(r.witness->tuple) << "\n";
  } else {
    throw std::runtime_error("unknown mode " + mode);
  }
  std::cout << "verdict: " << (verdict ? "true" : "false") << "\n";
  return verdict ? kExitTrue : kExitFalse;
}

int run_family(const std::string& sub, const std::string& file, int m, int n,
               const std::string& out_path, bool agreement) {
  print_command();
  ua::SubsetFamily fam;
  if (sub == "verify") {
    std::string text;
    const std::string digest = load_with_digest(file, text);
    std::cout << "input " << file << ": fnv1a64 " << digest << "\n";
    fam = ua::parse_family_lines(text);
  } else if (sub == "coordinate") {
    fam = ua::coordinate_family(m);
  } else if (sub == "hausdorff") {
    fam = ua::hausdorff_family(n);
  } else {
    throw std::runtime_error("unknown family subcommand " + sub);
  }

  const auto verdict = ua::is_independent_family(fam);
  std::cout << "base: " << fam.base_size << "\n"
            << "members: " << fam.members.size() << "\n"
            << "independent: " << (verdict.independent ? "true" : "false") << "\n";
  if (verdict.missing_pattern) {
    std::cout << "witness: empty combination for pattern ";
    for (std::size_t i = 0; i < fam.members.size(); ++i)
      std::cout << (*verdict.missing_pattern >> i & 1);
    std::cout << " (1 = member straight, 0 = complemented)\n";
  }
  if (agreement)
    std::cout << "freeness agreement: "
              << (ua::check_family_freeness_agreement(fam) ? "true" : "false") << "\n";
  if (!out_path.empty()) {
    ua::write_file(out_path, ua::family_to_lines(fam));
    std::cout << "written: " << out_path << "\n";
  }
  return verdict.independent ? kExitTrue : kExitFalse;
}

int run_build_free(const std::string& file, int m, int cap, const std::string& out) {
  print_command();
  const ua::FiniteAlgebra a = load_algebra_reported(file);
  const ua::FreeSetResult res = ua::build_free_set(a, m, cap);
  std::cout << "x_size: " << res.x_size << "\n"
            << "triples: " << res.certificate.triples.size() << "\n";
  bool distinct = true;
  for (std::size_t i = 0; i < res.functions.size() && distinct; ++i)
    for (std::size_t j = i + 1; j < res.functions.size(); ++j)
      if (res.functions[i] == res.functions[j]) {
        distinct = false;
        break;
      }
  std::cout << "functions: " << res.functions.size()
            << " (pairwise distinct: " << (distinct ? "yes" : "no") << ")\n";
  const std::string text = ua::certificate_to_text(res.certificate);
  if (!out.empty()) {
    ua::write_file(out, text);
    std::cout << "certificate: " << out << " (fnv1a64 "
              << ua::hex_digest(ua::fnv1a64(text)) << ")\n";
  } else {
    std::cout << "certificate: not written (fnv1a64 "
              << ua::hex_digest(ua::fnv1a64(text)) << ")\n";
  }
  return kExitTrue;
}

int run_verify_cert(const std::string& file) {
  print_command();
  std::string text;
  const std::string digest = load_with_digest(file, text);
  std::cout << "input " << file << ": fnv1a64 " << digest << "\n";
  const ua::FreeSetCertificate cert = ua::parse_certificate_text(text);
  const auto check = ua::check_certificate(cert);
  if (check.ok) {
    std::cout << "certificate: ok (x_size " << cert.x_size() << ", m " << cert.m
              << ")\n";
    return kExitTrue;
  }
  std::cout << "certificate: invalid\n";
  for (const auto& f : check.failures) std::cout << "- " << f << "\n";
  return kExitFalse;
}

int run_demo(const std::string& which, int k, int n) {
  print_command();
  if (which == "basis-maximality") {
    const auto rep = ua::check_basis_maximality(k);
    std::cout << "bases: " << rep.basis_count << "\n"
              << "cases: " << rep.cases_checked << "\n"
              << rep.deviations.size() << " deviations over " << rep.group_order
              << "-element group\n";
    for (const auto& d : rep.deviations) std::cout << "- " << d << "\n";
    return rep.ok() ? kExitTrue : kExitFalse;
  }
  if (which == "gould") {
    const ua::FiniteAlgebra a = ua::gould_algebra();
    bool all_closed = true;
    for (std::uint64_t mask = 0; mask < 4; ++mask) {
      const ua::Subset b = ua::Subset::from_mask(2, mask);
      if (!(ua::generated_subalgebra(a, b) == b)) all_closed = false;
    }
    std::cout << "every subset a subalgebra: " << (all_closed ? "yes" : "no") << "\n";
    const ua::Subset full = ua::Subset::full(2);
    const bool indep = ua::is_independent(ua::subalgebra_hull(a), full).holds;
    std::cout << "carrier independent: " << (indep ? "true" : "false") << "\n";
    const auto fr = ua::is_free(a, full);
    std::cout << "carrier free: " << (fr.holds ? "true" : "false") << "\n";
    if (fr.witness)
      std::cout << "witness: alpha " << describe(fr.witness->alpha) << " on x "
                << tuple_string(fr.witness->x) << " agrees with beta "
                << describe(fr.witness->beta) << " on y " << tuple_string(fr.witness->y)
                << " but separates under f " << tuple_string(fr.witness->f) << "\n";
    const bool as_expected = all_closed && indep && !fr.holds;
    std::cout << "as expected: " << (as_expected ? "yes" : "no") << "\n";
    return as_expected ? kExitTrue : kExitFalse;
  }
  if (which == "fkh") {
    const auto fam = ua::hausdorff_family(n);
    const auto verdict = ua::is_independent_family(fam);
    std::cout << "base: " << fam.base_size << "\n"
              << "members: " << fam.members.size() << "\n"
              << "independent: " << (verdict.independent ? "true" : "false") << "\n";
    return verdict.independent ? kExitTrue : kExitFalse;
  }
  if (which == "family-freeness") {
    const auto fam = ua::coordinate_family(3);
    const bool indep = ua::is_independent_family(fam).independent;
    const bool free =
        ua::verify_free_in_power(ua::boolean_clone_slice(3),
                                 ua::family_to_functions(fam)).holds;
    const bool agree = ua::check_family_freeness_agreement(fam);
    std::cout << "coordinate family on 8 points: independent " << (indep ? "true" : "false")
              << ", free in the lifted Boolean clone " << (free ? "true" : "false")
              << "\n"
              << "agreement: " << (agree ? "true" : "false") << "\n";
    return (indep && free && agree) ? kExitTrue : kExitFalse;
  }
  throw std::runtime_error("unknown demo " + which);
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) g_command_echo += std::string(" ") + argv[i];

  CLI::App app{"workbench for hulls, independence and free sets in finite algebras"};
  app.require_subcommand(1);

  std::string file, set_spec, mode = "independent", check, out_path, family_sub, demo_which;
  int cap = 2, m = 2, n = 2, k = 2, samples = 4096;
  bool tables = false, one_step = false, agreement = false;
  std::optional<std::uint64_t> seed;

  auto* c_clone = app.add_subcommand("clone", "term operations of an algebra up to an arity cap");
  c_clone->add_option("file", file, "algebra JSON file")->required();
  c_clone->add_option("--cap", cap, "arity cap")->capture_default_str();
  c_clone->add_flag("--tables", tables, "dump every table");

  auto* c_hull = app.add_subcommand("hull", "hulls and hull-operator property checks");
  c_hull->add_option("file", file, "algebra JSON file")->required();
  c_hull->add_option("--set", set_spec, "comma-separated elements");
  c_hull->add_flag("--one-step", one_step, "apply the one-step hull instead of closing");
  c_hull->add_option("--check", check, "closure | exchange | monotone | matroid");
  c_hull->add_option("--seed", seed, "seed for sampled subset batteries");
  c_hull->add_option("--samples", samples, "sample count for seeded batteries")
      ->capture_default_str();

  auto* c_indep = app.add_subcommand("indep", "independence of a subset");
  c_indep->add_option("file", file, "algebra JSON file")->required();
  c_indep->add_option("--set", set_spec, "comma-separated elements")->required();
  c_indep->add_option("--mode", mode, "independent | strong | free | free-clone")
      ->capture_default_str();

  auto* c_free = app.add_subcommand("free", "freeness of a subset (shorthand for indep --mode free)");
  c_free->add_option("file", file, "algebra JSON file")->required();
  c_free->add_option("--set", set_spec, "comma-separated elements")->required();

  auto* c_family = app.add_subcommand("family", "independent families of sets");
  c_family->add_option("subcommand", family_sub, "verify | coordinate | hausdorff")
      ->required();
  c_family->add_option("file", file, "family file for verify");
  c_family->add_option("--m", m, "coordinate family size")->capture_default_str();
  c_family->add_option("--n", n, "hausdorff parameter")->capture_default_str();
  c_family->add_option("--out", out_path, "write the family as 0/1 lines");
  c_family->add_flag("--check-agreement", agreement,
                     "also compare independence with power freeness");

  auto* c_build = app.add_subcommand("build-free", "build a free set in a power with certificate");
  c_build->add_option("file", file, "algebra JSON file")->required();
  c_build->add_option("--m", m, "number of functions")->required();
  c_build->add_option("--cap", cap, "clone slice arity cap")->required();
  c_build->add_option("--out", out_path, "certificate output path");

  auto* c_verify = app.add_subcommand("verify-cert", "re-derive a stored certificate");
  c_verify->add_option("file", file, "certificate file")->required();

  auto* c_demo = app.add_subcommand("demo", "packaged walkthroughs");
  c_demo->add_option("which", demo_which,
                     "basis-maximality | gould | fkh | family-freeness")
      ->required();
  c_demo->add_option("--k", k, "dimension for basis-maximality")->capture_default_str();
  c_demo->add_option("--n", n, "parameter for fkh")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitError : kExitTrue;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitError;
  try {
    if (c_clone->parsed()) code = run_clone(file, cap, tables);
    else if (c_hull->parsed()) code = run_hull(file, set_spec, one_step, check, seed, samples);
    else if (c_indep->parsed()) code = run_indep(file, set_spec, mode);
    else if (c_free->parsed()) code = run_indep(file, set_spec, "free");
    else if (c_family->parsed()) code = run_family(family_sub, file, m, n, out_path, agreement);
    else if (c_build->parsed()) code = run_build_free(file, m, cap, out_path);
    else if (c_verify->parsed()) code = run_verify_cert(file);
    else if (c_demo->parsed()) code = run_demo(demo_which, k, n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kExitError;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  return code;
}
