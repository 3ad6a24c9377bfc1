#pragma once

#include <string>
#include <vector>

#include "poisson_ore/derivation.hpp"
#include "poisson_ore/spectra.hpp"

namespace poisson_ore::cli {

struct Example {
  std::string name;
  std::string kind;  // "delta" or "exact"
  std::string delta;  // x=EXPR,y=EXPR, may mention `lambda`
  std::string a;
  std::vector<std::string> lambdas;
  int dmax = 2;
  std::string note;
  std::string expected;
};

/// Examples in file order. Throws std::runtime_error on a malformed file.
std::vector<Example> load_registry(const std::string& path);

/// Path from $POISSON_ORE_REGISTRY, else the data directory of the source tree.
std::string default_registry_path();

/// `x=EXPR,y=EXPR` as a derivation of Q(i)[x,y]; `lambda`, if given, is
/// substituted first.
Derivation parse_delta(const std::string& spec, const std::string& lambda = "");

/// Spectrum of the example; `lambda` overrides the default parameter value of
/// a delta example.
SpectrumDescription run_example(const Example& ex, int dmax, unsigned threads, const std::string& lambda = "");

/// Whether the instantiated points of `s` are exactly those listed in
/// `expected` (compared as ideals, in any order).
bool matches_expected(const SpectrumDescription& s, const std::string& expected);

}  // namespace poisson_ore::cli
