// Command-line front end. Every verb prints one JSON certificate; the exit
// code reports operational failure only (2 for input and usage errors, 1 for
// engine bounds and absent colimits), never the verdict.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <set>

#include "adjunct/adjoint.hpp"
#include "adjunct/brown.hpp"
#include "adjunct/error.hpp"
#include "adjunct/io.hpp"
#include "adjunct/limits.hpp"
#include "adjunct/simplicial.hpp"
#include "adjunct/suites.hpp"
#include "adjunct/trunc2.hpp"

using namespace adjunct;
using io::ordered_json;

namespace {

struct Options {
  std::string out;
  std::uint32_t seed = 0;
  std::string oracle_bounds = "4,16";
  std::size_t closure_bound = 10000;

  std::string category, functor, gcat, gfunctor, sset, set_functor, object, flag, suite;
  bool experimental = false;
  int max_size = 2;
};

ordered_json names(const FinCategory& c, const std::vector<int>& objects) {
  ordered_json j = ordered_json::array();
  for (int x : objects) j.push_back(c.object(x));
  return j;
}

ordered_json nullable(const std::optional<std::string>& s) { return s ? ordered_json(*s) : ordered_json(nullptr); }

ordered_json gap_json(const std::optional<LimitGap>& g) {
  if (!g) return nullptr;
  return {{"kind", g->kind}, {"detail", g->detail}};
}

ordered_json profile_json(const FunctorProfile& p) {
  return {{"surjective_on_objects", p.surjective_on_objects},
          {"full", p.full},
          {"faithful", p.faithful},
          {"conservative", p.conservative},
          {"equalizing_pairs", p.equalizing_pairs}};
}

ordered_json unit_json(const FinFunctor& g, const std::vector<int>& unit) {
  ordered_json j = ordered_json::object();
  const FinCategory& c = *g.target;
  for (int x = 0; x < c.object_count(); ++x) j[c.object(x)] = c.name(unit[x]);
  return j;
}

template <typename W>
ordered_json witness_json(const FinCategory& c, const std::optional<W>& w) {
  if (!w) return nullptr;
  std::vector<std::string> morphisms;
  for (int m : w->morphisms) morphisms.push_back(c.name(m));
  return {{"kind", w->kind}, {"objects", names(c, w->objects)}, {"morphisms", morphisms}};
}

OracleBounds parse_bounds(const std::string& s) {
  OracleBounds b;
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    b.max_objects = std::stoi(s.substr(0, comma));
    b.max_morphisms = std::stoi(s.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedInput, "--oracle-bounds expects OBJECTS,MORPHISMS");
  }
  return b;
}

bool is_law_failure(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedInput:
    case ErrorCode::MissingComposite:
    case ErrorCode::AssociativityViolation:
    case ErrorCode::IdentityViolation:
    case ErrorCode::InconsistentPresentation:
    case ErrorCode::UnknownObject:
    case ErrorCode::NotFunctorial:
    case ErrorCode::LawViolation:
      return true;
    default:
      return false;
  }
}

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::UnknownVerb || is_law_failure(c);
}

// ---------------------------------------------------------------------------
// Verbs
// ---------------------------------------------------------------------------

ordered_json run_validate(const Options& o, io::Loader& loader) {
  ordered_json j;
  std::string kind;
  ordered_json summary;
  try {
    if (!o.set_functor.empty()) {
      kind = "set-functor";
      const auto f = loader.set_functor(o.set_functor, loader.category(o.category));
      summary["sizes"] = ordered_json::object();
      for (int x = 0; x < f.base->object_count(); ++x) summary["sizes"][f.base->object(x)] = f.size(x);
    } else if (!o.functor.empty()) {
      kind = "functor";
      summary["profile"] = profile_json(functor_profile(loader.functor(o.functor)));
    } else if (!o.gfunctor.empty()) {
      kind = "enriched-functor";
      const auto g = loader.gfunctor(o.gfunctor);
      summary["objects"] = g.source->object_count();
    } else if (!o.gcat.empty()) {
      kind = "enriched-category";
      const auto g = loader.gcat(o.gcat);
      summary["objects"] = g->object_count();
      summary["discrete_homs"] = g->discrete_homs();
    } else if (!o.sset.empty()) {
      kind = "simplicial-set";
      const auto k = loader.sset(o.sset);
      summary["counts"] = {k.count(0), k.count(1), k.count(2), k.count(3)};
      summary["inner_horns_unique"] = inner_horn_check(k).unique;
    } else if (!o.category.empty()) {
      kind = "category";
      const auto c = loader.category(o.category);
      summary["objects"] = c->object_count();
      summary["morphisms"] = c->morphism_count();
      summary["thin"] = c->is_thin();
    } else {
      throw Error(ErrorCode::MalformedInput, "validate needs one of --category, --functor, --gcat, --gfunctor, --sset, --set-functor");
    }
    j["verdict"] = "valid";
    j["kind"] = kind;
    j["summary"] = std::move(summary);
    j["violation"] = nullptr;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || kind.empty() || !is_law_failure(e.code())) throw;
    j["verdict"] = "invalid";
    j["kind"] = kind;
    j["summary"] = nullptr;
    j["violation"] = {{"code", to_string(e.code())}, {"message", e.what()}};
  }
  return j;
}

ordered_json run_initial(const Options& o, io::Loader& loader) {
  const auto c = loader.category(o.category);
  const auto init = initial_objects(*c);
  std::set<int> apexes;
  for (const auto& k : identity_limits(c)) apexes.insert(k.apex);
  ordered_json j;
  j["verdict"] = !init.empty();
  j["initial_objects"] = names(*c, init);
  j["identity_limit_apexes"] = names(*c, {apexes.begin(), apexes.end()});
  j["terminal_objects"] = names(*c, terminal_objects(*c));
  return j;
}

ordered_json run_limits(const Options& o, io::Loader& loader) {
  const auto c = loader.category(o.category);
  const auto r = has_finite_limits(c);
  const auto s = colimit_support(c);
  ordered_json j;
  j["verdict"] = r.has_finite_limits;
  j["first_missing"] = gap_json(r.first_missing);
  j["missing"] = {{"terminal", gap_json(r.missing_terminal)},
                  {"product", gap_json(r.missing_product)},
                  {"equalizer", gap_json(r.missing_equalizer)}};
  j["colimits"] = {{"initial", s.initial}, {"binary_coproducts", s.binary_coproducts}, {"pushouts", s.pushouts}};
  j["weakly_initial_sets"] = ordered_json::array();
  for (const auto& w : weakly_initial_sets(*c)) j["weakly_initial_sets"].push_back(names(*c, w));
  return j;
}

ordered_json run_adjoint(const Options& o, io::Loader& loader) {
  const auto g = loader.functor(o.functor);
  const auto bounds = parse_bounds(o.oracle_bounds);
  const auto r = brute_force_left_adjoint(g, bounds);
  ordered_json j;
  j["verdict"] = r.exists;
  j["method"] = "brute force";
  j["adjoint_count"] = r.adjoints.size();
  j["left_adjoint"] = r.adjoints.empty() ? ordered_json(nullptr) : io::to_json(r.adjoints.front().first);
  j["unit"] = r.adjoints.empty() ? ordered_json(nullptr) : unit_json(g, r.adjoints.front().second);
  j["oracle_bounds"] = {{"max_objects", bounds.max_objects}, {"max_morphisms", bounds.max_morphisms}};
  return j;
}

ordered_json run_gaft(const Options& o, io::Loader& loader) {
  const auto g = loader.functor(o.functor);
  const auto r = gaft_decide(g);
  ordered_json j;
  j["verdict"] = r.exists;
  if (r.certificate) {
    j["left_adjoint"] = io::to_json(r.certificate->left);
    j["unit"] = unit_json(g, r.certificate->unit);
    const auto v = verify_adjunction(*r.certificate);
    j["verification"] = {{"ok", v.ok}, {"violated", nullable(v.violated)}};
    j["hypotheses_consulted"] = r.certificate->hypotheses_consulted;
  } else {
    j["left_adjoint"] = nullptr;
    j["unit"] = nullptr;
  }
  j["witness_failure"] = r.witness_failure ? ordered_json{{"object", g.target->object(*r.witness_failure)}} : ordered_json(nullptr);
  return j;
}

ordered_json run_gaft_fin(const Options& o, io::Loader& loader) {
  const auto g = loader.gfunctor(o.gfunctor);
  const auto r = gaft_fin_decide(g);
  ordered_json j;
  j["verdict"] = r.exists;
  j["h_initial_condition"] = r.h_initial_condition;
  j["divergent"] = r.divergent;
  j["table"] = ordered_json::array();
  for (const auto& row : r.table) {
    const auto k = enriched_comma_under(g, row.anchor);
    auto name = [&](const std::optional<int>& x) { return x ? ordered_json(k.category->object(*x)) : ordered_json(nullptr); };
    j["table"].push_back({{"anchor", g.target->object(row.anchor)},
                          {"initial", name(row.initial)},
                          {"h_initial", name(row.h_initial)},
                          {"differs", row.differs}});
  }
  return j;
}

ordered_json run_compare(const Options& o, io::Loader& loader) {
  const auto g = loader.gfunctor(o.gfunctor);
  std::optional<bool> flag;
  if (o.flag == "true") flag = true;
  if (o.flag == "false") flag = false;
  const auto a = homotopy_adjoint_compare(g, flag);
  ordered_json j;
  j["verdict"] = to_string(a.consistent);
  j["h_adjoint"] = a.h_adjoint;
  j["full_adjoint"] = a.full_adjoint;
  j["preserves_finite_limits"] = a.preserves_finite_limits ? ordered_json(*a.preserves_finite_limits) : ordered_json(nullptr);
  j["flag_derived"] = a.flag_derived;
  j["anchors"] = ordered_json::array();
  for (int c = 0; c < g.target->object_count(); ++c) {
    const auto cmp = comparison_functor(g, c);
    const auto r = initial_reflection_check(cmp.functor);
    j["anchors"].push_back(
        {{"anchor", g.target->object(c)},
         {"profile", profile_json(cmp.profile)},
         {"reflection",
          {{"applies", r.applies},
           {"reflects", r.applies ? ordered_json(r.reflects) : ordered_json(nullptr)},
           {"witness", r.witness ? ordered_json(cmp.source.category->object(*r.witness)) : ordered_json(nullptr)}}}});
  }
  return j;
}

ordered_json run_tau1(const Options& o, io::Loader& loader) {
  const auto c = tau1(loader.sset(o.sset), o.closure_bound);
  ordered_json j;
  j["verdict"] = "computed";
  j["category"] = io::to_json(c);
  return j;
}

ordered_json run_nerve(const Options& o, io::Loader& loader) {
  const auto k = nerve(*loader.category(o.category));
  const auto h = inner_horn_check(k);
  ordered_json j;
  j["verdict"] = "computed";
  j["inner_horns_unique"] = h.unique;
  j["truncated_at"] = TruncSSet::kTop;
  j["sset"] = io::to_json(k);
  return j;
}

ordered_json run_classify(const Options& o, io::Loader& loader) {
  const auto g = loader.gcat(o.gcat);
  const int x = g->object_index(o.object);
  const auto cls = classify_object(*g, x);
  ordered_json j;
  j["verdict"] = {{"initial", cls.initial}, {"h_initial", cls.h_initial}, {"weakly_initial_singleton", cls.weakly_initial_singleton}};
  j["object"] = o.object;
  j["mapping_invariants"] = ordered_json::array();
  for (int y = 0; y < g->object_count(); ++y) {
    const auto m = mapping_invariants(*g, x, y);
    j["mapping_invariants"].push_back(
        {{"to", g->object(y)}, {"components", m.components}, {"automorphism_orders", m.automorphism_orders}});
  }
  return j;
}

ordered_json brown_report(const FinCategory& c, const BrownReport& r) {
  return {{"holds", r.holds}, {"witness", witness_json(c, r.witness)}};
}

ordered_json run_brown(const Options& o, io::Loader& loader) {
  const auto c = loader.category(o.category);
  ordered_json j;
  if (!o.set_functor.empty()) {
    const auto F = loader.set_functor(o.set_functor, c);
    const auto b1 = check_B1(F);
    const auto b2 = check_B2(F);
    const auto rep = representability_search(F);
    j["verdict"] = rep.representable ? "representable" : "not-representable";
    j["side"] = "necessity";
    j["B1"] = brown_report(*c, b1);
    j["B2"] = brown_report(*c, b2);
    j["representation"] = rep.representable ? ordered_json{{"object", c->object(rep.object)},
                                                           {"element", F.sets[rep.object][rep.element]}}
                                            : ordered_json(nullptr);
    j["obstructions"] = rep.obstructions;
  } else if (!o.functor.empty()) {
    const auto F = loader.functor(o.functor);
    if (F.source != c) throw Error(ErrorCode::MalformedInput, "--functor must have --category as its source");
    const auto r = check_B1p_B2p(F);
    j["verdict"] = r.holds;
    j["side"] = "necessity";
    j["B1p"] = r.b1;
    j["B2p"] = r.b2;
    j["witness"] = witness_json(*c, r.witness);
    // c ↦ hom(F c, d) for each d, checked instance-wise
    j["hom_functors"] = ordered_json::array();
    for (int d = 0; d < F.target->object_count(); ++d) {
      const auto H = hom_into(F, d);
      j["hom_functors"].push_back({{"d", F.target->object(d)}, {"B1", check_B1(H).holds}, {"B2", check_B2(H).holds}});
    }
  } else {
    const auto gens = weak_generators(*c);
    j["verdict"] = "computed";
    j["side"] = "necessity";
    j["weak_generators"] = ordered_json::array();
    for (const auto& g : gens) j["weak_generators"].push_back(names(*c, g));
  }
  if (o.experimental) {
    const auto e = brown_property_experimental(c, o.max_size);
    j["experimental"] = {{"holds", e.holds},
                         {"enumerated", e.enumerated},
                         {"satisfying", e.satisfying},
                         {"max_size", o.max_size},
                         {"counterexample", e.counterexample ? io::to_json(*e.counterexample) : ordered_json(nullptr)}};
  }
  j["h_compact"] = "vacuous at finite scale";
  return j;
}

ordered_json run_corpus(const Options& o, io::Loader&) { return suites::run(o.suite, o.seed).to_json(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite category engine: adjoints, limits, enriched and simplicial fixtures, Brown checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "write the certificate here instead of standard output");
  app.add_option("--seed", o.seed, "seed for generated instances")->capture_default_str();
  app.add_option("--oracle-bounds", o.oracle_bounds, "brute-force limits OBJECTS,MORPHISMS")->capture_default_str();
  app.add_option("--closure-bound", o.closure_bound, "maximum morphisms produced by closure")->capture_default_str();

  using Run = std::function<ordered_json(const Options&, io::Loader&)>;
  std::map<std::string, Run> verbs;
  auto verb = [&](const std::string& name, const std::string& help, Run run) {
    verbs[name] = std::move(run);
    return app.add_subcommand(name, help);
  };

  auto* validate = verb("validate", "check a file against its laws", run_validate);
  validate->add_option("--category", o.category);
  validate->add_option("--functor", o.functor);
  validate->add_option("--gcat", o.gcat);
  validate->add_option("--gfunctor", o.gfunctor);
  validate->add_option("--sset", o.sset);
  validate->add_option("--set-functor", o.set_functor)->needs(validate->get_option("--category"));

  verb("initial", "initial objects and identity limits", run_initial)->add_option("--category", o.category)->required();
  verb("limits", "finite limits, colimit support, weakly initial sets", run_limits)
      ->add_option("--category", o.category)
      ->required();
  verb("adjoint", "left adjoint by brute force", run_adjoint)->add_option("--functor", o.functor)->required();
  verb("gaft", "left adjoint via initial comma objects", run_gaft)->add_option("--functor", o.functor)->required();
  verb("gaft-fin", "enriched decision with h-initial table", run_gaft_fin)->add_option("--gfunctor", o.gfunctor)->required();

  auto* compare = verb("compare", "homotopy versus full adjoint, comparison functors", run_compare);
  compare->add_option("--gfunctor", o.gfunctor)->required();
  compare->add_option("--flag", o.flag, "source has finite limits preserved by G")->check(CLI::IsMember({"true", "false"}));

  verb("tau1", "fundamental category of a simplicial set", run_tau1)->add_option("--sset", o.sset)->required();
  verb("nerve", "nerve truncated at dimension 3", run_nerve)->add_option("--category", o.category)->required();

  auto* classify = verb("classify", "initial, h-initial and mapping invariants", run_classify);
  classify->add_option("--gcat", o.gcat)->required();
  classify->add_option("--object", o.object)->required();

  auto* brown = verb("brown", "B1/B2, representability, B1'/B2', weak generators", run_brown);
  brown->add_option("--category", o.category)->required();
  brown->add_option("--set-functor", o.set_functor);
  brown->add_option("--functor", o.functor);
  brown->add_flag("--experimental", o.experimental, "exhaustive search over small set functors");
  brown->add_option("--max-size", o.max_size, "largest set size for --experimental")->capture_default_str();

  verb("corpus", "built-in invariant suites", run_corpus)
      ->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember(suites::suite_names()));

  if (argc > 1 && argv[1][0] != '-' && verbs.count(argv[1]) == 0) {
    std::cerr << "error: " << Error(ErrorCode::UnknownVerb, std::string("unknown verb '") + argv[1] + "'").what() << "\n";
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string name;
  for (const auto* sub : app.get_subcommands()) name = sub->get_name();
  try {
    io::Loader loader(ValidateOptions{o.closure_bound});
    auto body = verbs.at(name)(o, loader);
    const std::string op = name == "corpus" ? "corpus " + o.suite : name;
    const auto text = io::dump(io::certificate(op, std::move(body), loader.inputs()));
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(o.out, std::ios::binary);
      if (!(out << text)) throw Error(ErrorCode::MalformedInput, "cannot write " + o.out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  }
  return 0;
}
