#include "registry.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>

#include "poisson_ore/errors.hpp"
#include "poisson_ore/parse.hpp"

#ifndef POISSON_ORE_DATA_DIR
#define POISSON_ORE_DATA_DIR "data"
#endif

namespace poisson_ore::cli {

namespace {

std::vector<std::string> split_trimmed(const std::string& s, const char* seps) {
  std::vector<std::string> parts;
  boost::split(parts, s, boost::is_any_of(seps));
  for (auto& p : parts) boost::trim(p);
  return parts;
}

std::map<std::string, std::string> assignments(const std::string& spec) {
  std::map<std::string, std::string> out;
  for (const auto& part : split_trimmed(spec, ",")) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw PreconditionError("expected NAME=EXPR in '" + part + "'");
    out[boost::trim_copy(part.substr(0, eq))] = part.substr(eq + 1);
  }
  return out;
}

}  // namespace

std::vector<Example> load_registry(const std::string& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw std::runtime_error("cannot read registry: " + std::string(e.what()));
  }
  std::vector<Example> out;
  for (const auto& [name, sec] : tree) {
    Example ex;
    ex.name = name;
    ex.kind = sec.get<std::string>("kind", "delta");
    ex.delta = sec.get<std::string>("delta", "");
    ex.a = sec.get<std::string>("a", "");
    if (auto l = sec.get_optional<std::string>("lambda")) ex.lambdas = split_trimmed(*l, ",");
    ex.dmax = sec.get<int>("dmax", 2);
    ex.note = sec.get<std::string>("note", "");
    ex.expected = sec.get<std::string>("expected", "");
    if (ex.kind != "delta" && ex.kind != "exact") throw std::runtime_error("unknown example kind '" + ex.kind + "'");
    out.push_back(std::move(ex));
  }
  return out;
}

std::string default_registry_path() {
  if (const char* env = std::getenv("POISSON_ORE_REGISTRY")) return env;
  return std::string(POISSON_ORE_DATA_DIR) + "/registry.ini";
}

Derivation parse_delta(const std::string& spec, const std::string& lambda) {
  auto images = assignments(spec);
  for (const auto& [k, v] : images)
    if (k != "x" && k != "y") throw PreconditionError("delta assigns unknown variable '" + k + "'");
  std::vector<Poly> polys;
  for (const char* v : {"x", "y"}) {
    auto it = images.find(v);
    if (it == images.end()) throw PreconditionError(std::string("delta is missing an image for ") + v);
    std::string expr = it->second;
    if (!lambda.empty()) boost::replace_all(expr, "lambda", "(" + lambda + ")");
    polys.push_back(parse_poly(expr, ring_a()));
  }
  return Derivation(ring_a(), std::move(polys));
}

SpectrumDescription run_example(const Example& ex, int dmax, unsigned threads, const std::string& lambda) {
  if (ex.kind == "exact") {
    std::vector<GaussRat> samples;
    for (const auto& l : ex.lambdas) samples.push_back(parse_poly(l, ring_a()).constant_term());
    return classify_exact_spectrum(parse_poly(ex.a, ring_a()), samples, dmax, threads);
  }
  std::string value = lambda;
  if (value.empty() && !ex.lambdas.empty()) value = ex.lambdas.front();
  return classify_delta_spectrum(DeltaBracket{parse_delta(ex.delta, value)}, dmax, threads);
}

bool matches_expected(const SpectrumDescription& s, const std::string& expected) {
  Ring wide = ring_b().extended({"alpha", "t1", "t2", "t3"});
  std::vector<std::vector<Poly>> want;
  for (const auto& entry : split_trimmed(expected, "|")) {
    SpectrumEntry e;
    for (const auto& g : split_trimmed(entry, ",")) {
      Poly p = parse_poly(g, wide);
      if (!p.is_zero()) e.generators.push_back(p);
    }
    for (std::size_t v = ring_b().size(); v < wide.size(); ++v) {
      bool used = false;
      for (const auto& g : e.generators) used = used || g.uses(v);
      if (used) e.parameter_names.push_back(wide.var(v));
    }
    SpectrumDescription one;
    one.entries.push_back(e);
    for (const auto& p : instantiate(one)) want.push_back(p.generators);
  }
  auto got = instantiate(s);
  if (got.size() != want.size()) return false;
  std::vector<bool> used(want.size(), false);
  for (const auto& p : got) {
    bool found = false;
    for (std::size_t k = 0; k < want.size() && !found; ++k) {
      if (used[k] || !same_ideal(IdealPres(ring_b(), p.generators), IdealPres(ring_b(), want[k]))) continue;
      used[k] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace poisson_ore::cli
