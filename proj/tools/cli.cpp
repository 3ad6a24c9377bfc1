#include "cli.hpp"

#include <functional>
#include <map>

#include <boost/algorithm/string.hpp>

#include "CLI11.hpp"
#include "json_output.hpp"
#include "poisson_ore/errors.hpp"
#include "poisson_ore/ore.hpp"
#include "poisson_ore/parse.hpp"
#include "poisson_ore/poisson.hpp"
#include "poisson_ore/spectra.hpp"
#include "registry.hpp"

namespace poisson_ore::cli {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string delta, triple, exact, ideal, target, lambda, side = "poisson", kind, generators, params;
  std::string c, a, b;
  std::string order = "grevlex";
  std::string registry;
  int dmax = 2;
  int max_iter = 8;
  unsigned threads = 1;
  bool json = false, quantum = false, list = false;
  std::vector<std::string> inputs;
  std::string name;
};

struct Context {
  Options opt;
  MonomialOrder order = MonomialOrder::grevlex();
  std::ostream& out;
  std::ostream& err;
};

// Terms listed in the requested order.
std::string render(const Poly& p, const MonomialOrder& order) {
  if (order.kind() == MonomialOrder::Kind::grevlex || p.num_terms() < 2) return p.to_string();
  std::vector<Term> terms = p.terms();
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  std::string s;
  for (const auto& t : terms) {
    std::string one = Poly::term(p.ring(), t.mono, t.coef).to_string();
    if (s.empty())
      s = one;
    else if (one[0] == '-')
      s += " - " + one.substr(1);
    else
      s += " + " + one;
  }
  return s;
}

std::string render_list(const std::vector<Poly>& ps, const MonomialOrder& order) {
  std::string s = "(";
  for (std::size_t k = 0; k < ps.size(); ++k) s += (k ? ", " : "") + render(ps[k], order);
  return s + ")";
}

std::vector<std::string> render_all(const std::vector<Poly>& ps, const MonomialOrder& order) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(render(p, order));
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  if (boost::trim_copy(s).empty()) return parts;
  boost::split(parts, s, boost::is_any_of(","));
  for (auto& p : parts) boost::trim(p);
  return parts;
}

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw Usage(std::string("missing ") + flag);
  return value;
}

Derivation delta_of(const Options& o) { return parse_delta(need(o.delta, "--delta"), o.lambda); }

PoissonTriple triple_of(const std::string& spec) {
  std::map<std::string, Poly> parts;
  for (const auto& item : split_list(spec)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Usage("expected NAME=EXPR in --triple");
    std::string key = boost::trim_copy(item.substr(0, eq));
    if (key != "f" && key != "g" && key != "h") throw Usage("--triple takes f, g and h");
    parts[key] = parse_poly(item.substr(eq + 1), ring_b());
  }
  for (const char* k : {"f", "g", "h"})
    if (!parts.count(k)) throw Usage(std::string("--triple is missing ") + k);
  return {parts["f"], parts["g"], parts["h"]};
}

PoissonStructure structure_of(const Options& o) {
  if (!o.triple.empty()) return triple_of(o.triple);
  if (!o.exact.empty()) return exact_triple(parse_poly(o.exact, ring_b()), Poly::constant(ring_b(), 1));
  if (!o.delta.empty()) return DeltaBracket{delta_of(o)};
  throw Usage("give a bracket with --triple, --delta or --exact");
}

Poly input(const Context& cx, std::size_t k, const Ring& ring) {
  if (cx.opt.inputs.size() <= k) throw Usage("missing polynomial argument");
  return parse_poly(cx.opt.inputs[k], ring);
}

void emit(Context& cx, const Json& j, const std::function<void()>& text) {
  if (cx.opt.json)
    cx.out << j.dump(2) << "\n";
  else
    text();
}

void print_spectrum(Context& cx, const SpectrumDescription& s) {
  emit(cx, to_json(s), [&] {
    cx.out << "side: " << to_string(s.side) << "\ncompleteness: " << s.completeness << "\n";
    for (const auto& e : s.entries) {
      cx.out << "[" << to_string(e.kind) << "] " << (e.generators.empty() ? "0" : render_list(e.generators, cx.order));
      if (e.parameters) cx.out << "  " << *e.parameters;
      cx.out << "\n";
      for (const auto& c : e.certificates) {
        cx.out << "    " << c.check;
        for (std::size_t k = 0; k < c.details.size(); ++k)
          cx.out << (k ? ", " : ": ") << c.details[k].first << " = " << c.details[k].second;
        cx.out << "\n";
      }
    }
  });
}

// ---------------------------------------------------------------------------

int cmd_bracket(Context& cx) {
  auto s = structure_of(cx.opt);
  Poly v = bracket(s, input(cx, 0, ring_b()), input(cx, 1, ring_b()));
  emit(cx, Json{{"value", render(v, cx.order)}}, [&] { cx.out << render(v, cx.order) << "\n"; });
  return 0;
}

int cmd_jacobi(Context& cx) {
  auto s = structure_of(cx.opt);
  PoissonTriple t = std::holds_alternative<PoissonTriple>(s) ? std::get<PoissonTriple>(s) : to_triple(std::get<DeltaBracket>(s));
  TripleCheck check = is_poisson_triple(t);
  emit(cx, Json{{"poisson", check.ok}, {"residual", render(check.residual, cx.order)}}, [&] {
    if (check.ok)
      cx.out << "poisson\n";
    else
      cx.out << "not a Poisson triple\nresidual: " << render(check.residual, cx.order) << "\n";
  });
  return check.ok ? 0 : 1;
}

int cmd_decompose(Context& cx) {
  PoissonTriple t = triple_of(need(cx.opt.triple, "--triple"));
  auto d = decompose_fg0(t.f, t.g);
  if (!d) {
    emit(cx, Json{{"decomposable", false}}, [&] { cx.out << "no decomposition: f g_z != g f_z\n"; });
    return 1;
  }
  Json j{{"decomposable", true}, {"h", render(d->h, cx.order)}, {"f1", render(d->f1, cx.order)}, {"g1", render(d->g1, cx.order)}};
  emit(cx, j, [&] {
    cx.out << "h = " << render(d->h, cx.order) << "\nf1 = " << render(d->f1, cx.order) << "\ng1 = " << render(d->g1, cx.order)
           << "\n";
  });
  return 0;
}

int cmd_ham(Context& cx) {
  Derivation d = hamiltonian(structure_of(cx.opt), input(cx, 0, ring_b()));
  Json j = Json::object();
  for (std::size_t v = 0; v < d.ring().size(); ++v) j[d.ring().var(v)] = render(d.image(v), cx.order);
  emit(cx, j, [&] { cx.out << d.to_string() << "\n"; });
  return 0;
}

Derivation twist_of(const Context& cx) {
  Derivation d = delta_of(cx.opt);
  return cx.opt.quantum ? t_twist(d) : d;
}

int cmd_ore_mul(Context& cx) {
  Derivation tw = twist_of(cx);
  Ring ring = commutative_ring(tw.ring());
  SkewPoly u = SkewPoly::from_commutative(tw, input(cx, 0, ring));
  SkewPoly v = SkewPoly::from_commutative(tw, input(cx, 1, ring));
  Poly w = (u * v).to_commutative();
  emit(cx, Json{{"product", render(w, cx.order)}}, [&] { cx.out << render(w, cx.order) << "\n"; });
  return 0;
}

int cmd_commutator(Context& cx) {
  if (cx.opt.inputs.empty()) {
    IdealPres j = groebner_basis(commutator_ideal(structure_of(cx.opt)), cx.order);
    emit(cx, Json{{"basis", render_all(j.generators(), cx.order)}},
         [&] { cx.out << "J = " << render_list(j.generators(), cx.order) << "\n"; });
    return 0;
  }
  Derivation tw = twist_of(cx);
  Ring ring = commutative_ring(tw.ring());
  SkewPoly u = SkewPoly::from_commutative(tw, input(cx, 0, ring));
  SkewPoly v = SkewPoly::from_commutative(tw, input(cx, 1, ring));
  Poly w = commutator(u, v).to_commutative();
  emit(cx, Json{{"commutator", render(w, cx.order)}}, [&] { cx.out << render(w, cx.order) << "\n"; });
  return 0;
}

int cmd_semiclassical(Context& cx) {
  Derivation d = delta_of(cx.opt);
  Derivation tw = t_twist(d);
  SkewPoly u = SkewPoly::from_commutative(tw, input(cx, 0, ring_t()));
  SkewPoly v = SkewPoly::from_commutative(tw, input(cx, 1, ring_t()));
  Poly limit = semiclassical_bracket(u, v);
  Poly expected = bracket_delta(DeltaBracket{d}, reduce_mod_h(u), reduce_mod_h(v));
  bool agree = limit == expected;
  Json j{{"limit", render(limit, cx.order)}, {"bracket", render(expected, cx.order)}, {"agree", agree}};
  emit(cx, j, [&] {
    cx.out << "h^-1 [u, v] at h = 0: " << render(limit, cx.order) << "\n{u, v}: " << render(expected, cx.order) << "\n"
           << (agree ? "agree" : "differ") << "\n";
  });
  return agree ? 0 : 1;
}

int cmd_darboux(Context& cx) {
  DarbouxSearch s = darboux_search(delta_of(cx.opt), cx.opt.dmax, cx.opt.threads);
  emit(cx, to_json(s), [&] {
    for (const auto& c : s.certificates) {
      cx.out << "q = " << render(c.q, cx.order) << ", cofactor = " << render(c.cofactor, cx.order);
      if (!c.directions.empty()) cx.out << ", plus span" << render_list(c.directions, cx.order);
      cx.out << "\n";
    }
    if (s.certificates.empty()) cx.out << "no invariant polynomials up to degree " << cx.opt.dmax << "\n";
    if (!s.complete()) cx.out << "unresolved leading monomials: " << boost::join(s.unresolved, ", ") << "\n";
    if (s.irrational_omitted) cx.out << "some invariant polynomials need constants outside Q(i)\n";
  });
  return 0;
}

int cmd_shamsuddin(Context& cx) {
  ShamsuddinVerdict v;
  if (!cx.opt.delta.empty()) {
    v = shamsuddin_simple(delta_of(cx.opt));
  } else {
    GaussRat c = parse_poly(need(cx.opt.c, "--c or --delta"), ring_a()).constant_term();
    if (!parse_poly(cx.opt.c, ring_a()).is_constant()) throw Usage("--c must be a constant");
    v = shamsuddin_simple(c, parse_poly(need(cx.opt.a, "--a"), ring_a()), parse_poly(need(cx.opt.b, "--b"), ring_a()));
  }
  Json j{{"simple", v.simple}, {"r", v.r ? Json(v.r->to_string()) : Json(nullptr)}};
  emit(cx, j, [&] { cx.out << v.to_string() << "\n"; });
  return v.simple ? 0 : 1;
}

int cmd_core(Context& cx) {
  Derivation d = delta_of(cx.opt);
  IdealPres m(ring_a(), parse_poly_list(need(cx.opt.ideal, "--ideal"), ring_a()));
  DeltaCore core = delta_core(d, m, cx.opt.max_iter);
  auto basis = core.ideal.basis(cx.order).polys;
  std::string status = core.status == CoreStatus::exact ? "exact" : "upper_bound";
  Json j{{"basis", render_all(basis, cx.order)}, {"status", status}, {"iterations", core.iterations}};
  emit(cx, j, [&] {
    cx.out << "core = " << (basis.empty() ? "0" : render_list(basis, cx.order)) << "\nstatus: " << status
           << " after " << core.iterations << " steps\n";
  });
  return 0;
}

int cmd_singular(Context& cx) {
  SingularLocus s = singular_locus(delta_of(cx.opt));
  auto basis = s.ideal.basis(cx.order).polys;
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back({p[0].to_string(), p[1].to_string()});
  Json j{{"basis", render_all(basis, cx.order)}, {"points", pts}, {"resolved", s.resolved}, {"has_other_points", s.has_other_points}};
  emit(cx, j, [&] {
    cx.out << "J = " << (basis.empty() ? "0" : render_list(basis, cx.order)) << "\n";
    for (const auto& p : s.points) cx.out << "point (" << p[0].to_string() << ", " << p[1].to_string() << ")\n";
    if (!s.resolved) cx.out << "zero set not finite\n";
    if (s.has_other_points) cx.out << "some zeros lie outside Q(i)\n";
  });
  return 0;
}

int cmd_image_solve(Context& cx) {
  auto p = image_solvable(delta_of(cx.opt), parse_poly(need(cx.opt.target, "--target"), ring_a()), cx.opt.dmax);
  emit(cx, Json{{"solution", p ? Json(render(*p, cx.order)) : Json(nullptr)}},
       [&] { cx.out << (p ? "p = " + render(*p, cx.order) : "none up to degree " + std::to_string(cx.opt.dmax)) << "\n"; });
  return p ? 0 : 1;
}

SpectrumDescription to_side(const Context& cx, SpectrumDescription s, const Derivation& d) {
  if (cx.opt.side == "ore") return gamma_map(s, d);
  if (cx.opt.side != "poisson") throw Usage("--side takes poisson or ore");
  return s;
}

int cmd_classify(Context& cx) {
  if (!cx.opt.exact.empty()) {
    std::vector<GaussRat> lambdas;
    for (const auto& l : split_list(need(cx.opt.lambda, "--lambda"))) lambdas.push_back(parse_poly(l, ring_a()).constant_term());
    Poly a = parse_poly(cx.opt.exact, ring_a());
    auto s = classify_exact_spectrum(a, lambdas, cx.opt.dmax, cx.opt.threads);
    Derivation d = restrict(hamiltonian(exact_triple(a, Poly::constant(ring_b(), 1)), Poly::variable(ring_b(), "z")), ring_a());
    print_spectrum(cx, to_side(cx, s, d));
    return 0;
  }
  Derivation d = delta_of(cx.opt);
  print_spectrum(cx, to_side(cx, classify_delta_spectrum(DeltaBracket{d}, cx.opt.dmax, cx.opt.threads), d));
  return 0;
}

int cmd_gamma(Context& cx) {
  Derivation d = delta_of(cx.opt);
  SpectrumEntry e;
  if (cx.opt.kind == "type1")
    e.kind = EntryKind::type1;
  else if (cx.opt.kind == "type2")
    e.kind = EntryKind::type2;
  else
    throw Usage("--kind takes type1 or type2");
  if (cx.opt.side == "ore")
    e.side = Side::ore;
  else if (cx.opt.side != "poisson")
    throw Usage("--side takes poisson or ore");
  e.parameter_names = split_list(cx.opt.params);
  Ring ring = e.parameter_names.empty() ? ring_b() : ring_b().extended(e.parameter_names);
  if (!e.parameter_names.empty()) e.parameters = boost::join(e.parameter_names, ", ") + " in Q(i)";
  for (const auto& g : parse_poly_list(cx.opt.generators, ring))
    if (!g.is_zero()) e.generators.push_back(g);
  SpectrumEntry image;
  try {
    image = gamma_map(e, d);
  } catch (const PreconditionError& ex) {
    emit(cx, Json{{"mapped", false}, {"reason", ex.what()}}, [&] { cx.out << "not mapped: " << ex.what() << "\n"; });
    return 1;
  }
  SpectrumDescription one{image.side, "", {image}};
  Json j = to_json(one);
  emit(cx, Json{{"mapped", true}, {"side", j["side"]}, {"entry", j["entries"][0]}}, [&] {
    cx.out << to_string(image.side) << " [" << to_string(image.kind) << "] "
           << (image.generators.empty() ? "0" : render_list(image.generators, cx.order)) << "\n";
  });
  return 0;
}

int cmd_example(Context& cx) {
  std::string path = cx.opt.registry.empty() ? default_registry_path() : cx.opt.registry;
  auto examples = load_registry(path);
  if (cx.opt.list) {
    Json names = Json::array();
    for (const auto& ex : examples) names.push_back(ex.name);
    emit(cx, names, [&] {
      for (const auto& ex : examples) cx.out << ex.name << "  " << ex.note << "\n";
    });
    return 0;
  }
  if (cx.opt.name.empty()) throw Usage("example needs a name or --list");
  auto it = std::find_if(examples.begin(), examples.end(), [&](const Example& ex) { return ex.name == cx.opt.name; });
  if (it == examples.end()) throw Usage("unknown example '" + cx.opt.name + "'");
  SpectrumDescription s = run_example(*it, it->dmax, cx.opt.threads, cx.opt.lambda);
  bool match = it->expected.empty() || matches_expected(s, it->expected);
  Derivation d = it->kind == "exact"
                     ? restrict(hamiltonian(exact_triple(parse_poly(it->a, ring_a()), Poly::constant(ring_b(), 1)),
                                            Poly::variable(ring_b(), "z")),
                                ring_a())
                     : parse_delta(it->delta, cx.opt.lambda.empty() && !it->lambdas.empty() ? it->lambdas.front() : cx.opt.lambda);
  SpectrumDescription shown = to_side(cx, s, d);
  if (!cx.opt.json) cx.out << it->name << ": " << it->note << "\n";
  print_spectrum(cx, shown);
  if (!cx.opt.json) cx.out << "expected spectrum: " << (match ? "match" : "MISMATCH") << "\n";
  if (!match) cx.err << "example " << it->name << " does not match its expected spectrum\n";
  return match ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context cx{Options{}, MonomialOrder::grevlex(), out, err};
  Options& o = cx.opt;
  CLI::App app{"Poisson brackets on A[z], Ore extensions A[z; delta] and their prime spectra", "poisson_ore"};
  app.set_config("--file", "", "read options from an INI or TOML file");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--delta", o.delta, "derivation of Q(i)[x,y] as x=EXPR,y=EXPR");
  app.add_option("--triple", o.triple, "Poisson triple as f=EXPR,g=EXPR,h=EXPR");
  app.add_option("--exact", o.exact, "exact bracket of a in Q(i)[x,y]");
  app.add_option("--dmax", o.dmax, "degree bound for searches")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--order", o.order, "monomial order for printed bases")
      ->check(CLI::IsMember({"grevlex", "lex"}))
      ->envname("POISSON_ORE_ORDER");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--lambda", o.lambda, "parameter value, or level values for --exact");
  app.add_option("--side", o.side, "poisson or ore");
  app.add_flag("--quantum", o.quantum, "work in Q(i)[x,y,h][z; h delta]");

  struct Sub {
    const char* name;
    const char* help;
    int (*fn)(Context&);
    int positionals;
  };
  const Sub subs[] = {
      {"bracket", "evaluate {P, Q}", cmd_bracket, 2},
      {"jacobi", "check the Jacobi identity", cmd_jacobi, 0},
      {"decompose", "write f = h f1, g = h g1 with f1, g1 free of z", cmd_decompose, 0},
      {"ham", "hamiltonian derivation {A, -}", cmd_ham, 1},
      {"ore-mul", "product U V in A[z; delta]", cmd_ore_mul, 2},
      {"commutator", "commutator ideal, or [U, V] in A[z; delta]", cmd_commutator, 2},
      {"semiclassical", "h^-1 [U, V] at h = 0 against {U, V}", cmd_semiclassical, 2},
      {"darboux", "invariant polynomials up to --dmax", cmd_darboux, 0},
      {"shamsuddin", "simplicity of d(x) = c, d(y) = a(x) y + b(x)", cmd_shamsuddin, 0},
      {"core", "largest delta-stable ideal inside --ideal", cmd_core, 0},
      {"singular", "zeros of (delta(x), delta(y))", cmd_singular, 0},
      {"image-solve", "solve delta(p) = --target", cmd_image_solve, 0},
      {"classify", "prime spectrum up to --dmax", cmd_classify, 0},
      {"gamma", "move a spectrum entry to the other side", cmd_gamma, 0},
      {"example", "run a registry example", cmd_example, 0},
  };
  std::map<std::string, int (*)(Context&)> handlers;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    handlers[s.name] = s.fn;
    if (s.positionals > 0) sub->add_option("inputs", o.inputs, "polynomials")->expected(0, s.positionals);
    std::string name = s.name;
    if (name == "shamsuddin") {
      sub->add_option("--c", o.c, "constant d(x)");
      sub->add_option("--a", o.a, "a(x)");
      sub->add_option("--b", o.b, "b(x)");
    } else if (name == "core") {
      sub->add_option("--ideal", o.ideal, "generators of M, comma separated");
      sub->add_option("--max-iter", o.max_iter, "step bound")->check(CLI::NonNegativeNumber);
    } else if (name == "image-solve") {
      sub->add_option("--target", o.target, "right-hand side");
    } else if (name == "gamma") {
      sub->add_option("--kind", o.kind, "type1 or type2")->required();
      sub->add_option("--generators", o.generators, "generators, comma separated");
      sub->add_option("--params", o.params, "parameter variables of a family");
    } else if (name == "example") {
      sub->add_option("name", o.name, "example name");
      sub->add_flag("--list", o.list, "list the examples");
      sub->add_option("--registry", o.registry, "registry file");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cx.order = MonomialOrder::from_name(o.order);

  try {
    for (auto* sub : app.get_subcommands()) return handlers.at(sub->get_name())(cx);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownVariable& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const RingMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace poisson_ore::cli
