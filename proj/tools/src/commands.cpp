#include "commands.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "shiftgeom/approximation.hpp"
#include "shiftgeom/bounds.hpp"
#include "shiftgeom/errors.hpp"
#include "shiftgeom/homotopy.hpp"
#include "shiftgeom/measures.hpp"
#include "shiftgeom/metrics.hpp"
#include "shiftgeom/paths.hpp"

namespace shiftgeom::cli {

namespace {

Alphabet union_alphabet(std::initializer_list<std::string_view> literals) {
  std::set<char> symbols;
  for (auto lit : literals) {
    for (char c : infer_alphabet(lit).symbols()) symbols.insert(c);
  }
  return Alphabet(std::string(symbols.begin(), symbols.end()));
}

ShiftPresentation load_shift(CommandState& state, const std::string& role, const std::string& path) {
  return shift_from_json(state.inputs.load_file(role, path));
}

Configuration load_config(CommandState& state, const std::string& role, const std::string& literal,
                          const Alphabet& alphabet) {
  state.inputs.literal(role, literal);
  return parse_config(literal, alphabet);
}

CellularAutomaton load_ca(CommandState& state, const std::string& spec) {
  if (spec.rfind("eca:", 0) == 0) {
    state.inputs.literal("automaton", spec);
    return load_automaton(spec);
  }
  return automaton_from_json(state.inputs.load_file("automaton", spec));
}

Json names_of(const Face& face, const std::vector<std::string>& vertices) {
  Json out = Json::array();
  for (auto v : face) out.push_back(vertices[v]);
  return out;
}

Json check_json(const PropertyCheck& c) {
  Json j{{"violated", c.violated}};
  if (c.witness) j["witness"] = witness_json(*c.witness);
  return j;
}

Json minimizers_json(const MinimizerSet& m) {
  Json points = Json::array(), reps = Json::array();
  for (const auto& p : m.points) points.push_back(format_config(p));
  for (const auto& p : m.orbit_representatives) reps.push_back(format_config(p));
  return Json{{"distance", rational_json(m.distance)},
              {"points", points},
              {"orbit_representatives", reps},
              {"period_bound", m.period_bound}};
}

// Registers a subcommand whose callback installs `run` as the pending action.
CLI::App* leaf(CLI::App& parent, CommandState& state, const std::string& name, const std::string& help,
               std::function<Json()> run) {
  auto* sub = parent.add_subcommand(name, help);
  std::string full = parent.get_parent() ? parent.get_name() + " " + name : name;
  sub->callback([&state, full, run = std::move(run)] {
    state.command = full;
    state.action = run;
  });
  return sub;
}

}  // namespace

void add_dist(CLI::App& app, CommandState& state) {
  struct Options {
    std::string x, y, to_shift;
    bool db = false, dw = false, dc = false;
    std::int64_t window = 0;
  };
  auto o = std::make_shared<Options>();
  auto* sub = leaf(app, state, "dist", "Distance between two points, or from a point to a shift", [&state, o]() {
    if (!o->to_shift.empty()) {
      auto shift = load_shift(state, "shift", o->to_shift);
      auto x = load_config(state, "x", o->x, shift.alphabet());
      auto d = distance_to_shift(x, shift);
      return Json{{"metric", "besicovitch"},
                  {"distance", rational_json(d.distance)},
                  {"nearest", format_config(d.nearest)}};
    }
    if (o->y.empty()) throw InputError("dist needs two points or --to-shift");
    const Alphabet a = union_alphabet({o->x, o->y});
    auto x = load_config(state, "x", o->x, a);
    auto y = load_config(state, "y", o->y, a);
    Json out;
    if (o->dc) {
      out = {{"metric", "cantor"}, {"distance", rational_json(d_cantor(x, y))}};
    } else if (o->dw) {
      out = {{"metric", "weyl"}};
      out["distance"] = rational_json(o->window > 0
                                          ? weyl_estimate(WindowSource::of(x), WindowSource::of(y), o->window, o->window)
                                          : d_weyl(x, y));
    } else {
      out = {{"metric", "besicovitch"}};
      out["distance"] = rational_json(o->window > 0 ? density_estimate(WindowSource::of(x), WindowSource::of(y), o->window)
                                                    : d_besicovitch(x, y));
    }
    if (o->window > 0) out["window"] = o->window;
    return out;
  });
  sub->add_option("x", o->x, "First point, e.g. inf(01).1inf(0)")->required();
  sub->add_option("y", o->y, "Second point");
  auto* db = sub->add_flag("--db", o->db, "Besicovitch (default)");
  auto* dw = sub->add_flag("--dw", o->dw, "Weyl");
  auto* dc = sub->add_flag("--dc", o->dc, "Cantor");
  db->excludes(dw)->excludes(dc);
  dw->excludes(dc);
  sub->add_option("--to-shift", o->to_shift, "Shift file; computes inf over the shift");
  sub->add_option("--window", o->window, "Finite estimate on [-N, N] instead of the exact value")
      ->check(CLI::NonNegativeNumber);
}

void add_classify(CLI::App& app, CommandState& state) {
  struct Options {
    std::string automaton, shift;
    std::size_t period = 8, length = 4;
    bool rigidity = false;
    std::string zero;
  };
  auto o = std::make_shared<Options>();
  auto* sub = leaf(app, state, "classify", "Contracting/isometric/expanding classification", [&state, o]() {
    if (o->rigidity) {
      if (o->shift.empty()) throw InputError("--rigidity needs --shift");
      auto x = load_shift(state, "shift", o->shift);
      const char zero = o->zero.empty() ? x.alphabet().symbol(0) : o->zero[0];
      auto v = rigidity_precondition(x, zero, o->length, o->period);
      Json out{{"pass", v.pass}, {"max_length", o->length}, {"period_bound", o->period},
               {"largest_period", v.largest_period}};
      if (!v.pass) out["reason"] = v.reason;
      if (v.word) out["word"] = *v.word;
      if (v.symbol) out["symbol"] = std::string(1, *v.symbol);
      return out;
    }
    if (o->automaton.empty()) throw InputError("classify needs an automaton");
    auto f = load_ca(state, o->automaton);
    if (o->shift.empty()) {
      auto r = classify_full_shift(f);
      Json out{{"neighborhood", neighborhood_json(r.minimal)},
               {"contracting", r.contracting},
               {"isometric", r.isometric},
               {"expanding", r.expanding}};
      if (r.decomposition) {
        std::string perm;
        for (auto i : r.decomposition->permutation) perm += f.alphabet().symbol(i);
        out["decomposition"] = {{"shift", r.decomposition->shift}, {"permutation", perm}};
      }
      if (r.witness) out["witness"] = witness_json(*r.witness);
      return out;
    }
    auto x = load_shift(state, "shift", o->shift);
    auto v = check_on_subshift(f, x, o->period);
    return Json{{"period_bound", v.period_bound},
                {"points", v.points},
                {"orbits", v.orbits},
                {"pairs", v.pairs},
                {"neighborhood", neighborhood_json(minimal_neighborhood_on(f, x))},
                {"contracting", check_json(v.contracting)},
                {"isometric", check_json(v.isometric)},
                {"expanding", check_json(v.expanding)}};
  });
  sub->add_option("automaton", o->automaton, "eca:N or automaton file");
  sub->add_option("--shift", o->shift, "Check on the periodic points of this shift");
  sub->add_option("--period", o->period, "Period bound")->check(CLI::PositiveNumber);
  sub->add_flag("--rigidity", o->rigidity, "Check the neighborhood-size-1 precondition of --shift");
  sub->add_option("--length", o->length, "Word length bound for --rigidity");
  sub->add_option("--zero", o->zero, "Fixed-point symbol for --rigidity");
}

void add_complex(CLI::App& app, CommandState& state) {
  struct Options {
    std::string shift, complex, config;
  };
  auto o = std::make_shared<Options>();
  auto* sub = app.add_subcommand("complex", "Shifts and simplicial complexes");
  sub->require_subcommand(1);

  auto* extract = leaf(*sub, state, "extract", "Complex of transitive components", [&state, o]() {
    auto e = extract_complex(load_shift(state, "shift", o->shift));
    Json f_vector = Json::array();
    for (std::size_t k = 1; k <= static_cast<std::size_t>(e.complex.dimension() + 1); ++k) {
      f_vector.push_back(e.complex.face_count(k));
    }
    Json poset = Json::array();
    for (const auto& el : e.poset.elements) {
      poset.push_back({{"components", el.components}, {"states", el.shift.state_count()}});
    }
    return Json{{"complex", to_json(e.complex)},
                {"dimension", e.complex.dimension()},
                {"f_vector", f_vector},
                {"components", e.components.size()},
                {"poset", poset},
                {"leq", e.poset.leq}};
  });
  extract->add_option("shift", o->shift, "Shift file")->required();

  auto* embed = leaf(*sub, state, "embed", "Subshifts indexed by the faces of a complex", [&state, o]() {
    auto k = complex_from_json(state.inputs.load_file("complex", o->complex));
    auto x = load_shift(state, "shift", o->shift);
    auto e = embed_complex(k, x);
    Json faces = Json::array();
    for (const auto& fs : e.faces) {
      faces.push_back({{"face", names_of(fs.face, k.vertices())}, {"presentation", to_json(fs.shift)}});
    }
    return Json{{"w", e.w}, {"v", e.v}, {"u", e.u}, {"faces", faces}};
  });
  embed->add_option("complex", o->complex, "Complex file")->required();
  embed->add_option("shift", o->shift, "Shift file")->required();

  auto* coords = leaf(*sub, state, "coords", "Barycentric coordinates of a point", [&state, o]() {
    auto x = load_shift(state, "shift", o->shift);
    auto e = extract_complex(x);
    auto p = complex_coordinates(load_config(state, "x", o->config, x.alphabet()), e);
    Json weights = Json::array();
    for (const auto& w : p.weights) weights.push_back(rational_json(w));
    return Json{{"simplex", names_of(p.simplex, e.complex.vertices())}, {"weights", weights}};
  });
  coords->add_option("shift", o->shift, "Shift file")->required();
  coords->add_option("x", o->config, "Point of the shift")->required();
}

void add_path(CLI::App& app, CommandState& state) {
  struct Options {
    std::string r;
    std::vector<std::string> coords;
    std::size_t length = 64;
  };
  auto o = std::make_shared<Options>();
  auto* sub = app.add_subcommand("path", "Path constructions");
  sub->require_subcommand(1);

  using WordFn = Word (*)(const Rational&, std::size_t);
  const std::vector<std::tuple<std::string, std::string, WordFn, bool>> kinds{
      {"u", "Prefix of U(r)", &u_prefix, false},
      {"uprime", "Prefix of U'(r)", &uprime_prefix, false},
      {"t", "Window [-N, N] of T(r)", &t_window, true},
      {"tprime", "Window [-N, N] of T'(r)", &tprime_window, true}};
  for (const auto& [name, help, fn, centred] : kinds) {
    auto* k = leaf(*sub, state, name, help, [&state, o, fn = fn, centred = centred]() {
      state.inputs.literal("r", o->r);
      const Rational r = Rational::parse(o->r);
      Json out{{"r", rational_json(r)}, {"word", fn(r, o->length)}};
      out["first"] = centred ? -static_cast<std::int64_t>(o->length) : 0;
      return out;
    });
    k->add_option("r", o->r, "Rational in [0,1]")->required();
    k->add_option("--length", o->length, "N");
  }

  auto* embed = leaf(*sub, state, "embed", "Interleaved embedding of a rational vector", [&state, o]() {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < o->coords.size(); ++i) {
      state.inputs.literal("v" + std::to_string(i), o->coords[i]);
      v.push_back(Rational::parse(o->coords[i]));
    }
    auto p = embed_point(v, o->length);
    return Json{{"word", p.word}, {"unrepresented", p.unrepresented}};
  });
  embed->add_option("coordinates", o->coords, "Rational coordinates")->required();
  embed->add_option("--length", o->length, "Prefix length");

  auto* sample = leaf(*sub, state, "sample", "Window of a sampled path point", [&state, o]() {
    return Json{{"seed", state.seed},
                {"r", rational_json(sample_uniform(state.seed))},
                {"word", sample_measure(state.seed, o->length)},
                {"first", -static_cast<std::int64_t>(o->length)}};
  });
  sample->add_option("--length", o->length, "N");
}

void add_uap(CLI::App& app, CommandState& state) {
  struct Options {
    std::string shift, config;
    std::size_t period = 8;
  };
  auto o = std::make_shared<Options>();
  auto* sub = app.add_subcommand("uap", "Unique approximation by periodic points");
  sub->require_subcommand(1);

  auto* nearest = leaf(*sub, state, "nearest", "Nearest periodic points", [&state, o]() {
    auto x = pointed_set_from_json(state.inputs.load_file("shift", o->shift));
    auto y = load_config(state, "y", o->config, x.shift().alphabet());
    return minimizers_json(nearest_periodic(x, y, o->period));
  });
  nearest->add_option("shift", o->shift, "Shift file, optionally with anchors")->required();
  nearest->add_option("y", o->config, "Target point")->required();
  nearest->add_option("--period", o->period, "Period bound")->check(CLI::PositiveNumber);

  auto* search = leaf(*sub, state, "search", "Search for a point with two nearest periodic points", [&state, o]() {
    auto v = uap_search(pointed_set_from_json(state.inputs.load_file("shift", o->shift)), o->period);
    Json out{{"period_bound", v.period_bound}, {"violation", v.violation}};
    if (v.witness) out["witness"] = format_config(*v.witness);
    if (v.minimizers) out["minimizers"] = minimizers_json(*v.minimizers);
    return out;
  });
  search->add_option("shift", o->shift, "Shift file, optionally with anchors")->required();
  search->add_option("--period", o->period, "Period bound")->check(CLI::PositiveNumber);
}

void add_shift(CLI::App& app, CommandState& state) {
  auto path = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("shift", "Sofic shift operations");
  sub->require_subcommand(1);
  auto add = [&](const std::string& name, const std::string& help, std::function<Json(const ShiftPresentation&)> fn) {
    auto* c = leaf(*sub, state, name, help, [&state, path, fn]() { return fn(load_shift(state, "shift", *path)); });
    c->add_option("shift", *path, "Shift file")->required();
  };
  add("compile", "Presentation of an SFT or sofic shift", [](const ShiftPresentation& x) {
    return Json{{"states", x.state_count()}, {"presentation", to_json(x)}};
  });
  add("cover", "Shannon cover", [](const ShiftPresentation& x) {
    auto c = shannon_cover(x);
    return Json{{"states", c.state_count()}, {"presentation", to_json(c)}};
  });
  add("components", "Transitive components", [](const ShiftPresentation& x) {
    auto d = transitive_components(x);
    Json comps = Json::array();
    for (const auto& c : d.components) comps.push_back(to_json(c));
    return Json{{"count", d.components.size()},
                {"components", comps},
                {"contained", d.contained},
                {"intersecting", d.intersecting}};
  });
  add("mixing", "Mixing distance", [](const ShiftPresentation& x) {
    return Json{{"mixing_distance", mixing_distance(x)}};
  });
  add("sync-word", "Least unbordered synchronizing word",
      [](const ShiftPresentation& x) { return Json{{"word", find_unbordered_synchronizing(x)}}; });
  add("entropy", "Whether the entropy is positive",
      [](const ShiftPresentation& x) { return Json{{"positive_entropy", positive_entropy(x)}}; });
  add("inside", "Mixing positive-entropy subshift", [](const ShiftPresentation& x) {
    auto s = mixing_sft_inside(x);
    return Json{{"w", s.w}, {"u", s.u}, {"v", s.v}, {"presentation", to_json(s.shift)}};
  });
}

void add_measure(CLI::App& app, CommandState& state) {
  struct Options {
    std::string shift, word, k, a, w, eps = "1/4", alphabet = "01";
    std::uint64_t n = 0, m = 0, p = 0;
    std::size_t length = 12;
  };
  auto o = std::make_shared<Options>();
  auto* sub = app.add_subcommand("measure", "Markov measures and counting bounds");
  sub->require_subcommand(1);

  auto* parry = leaf(*sub, state, "parry", "Maximal-entropy Markov measure", [&state, o]() {
    auto mu = parry_measure(load_shift(state, "shift", o->shift));
    const auto& x = mu.presentation;
    Json edges = Json::array(), stationary = Json::object();
    for (std::size_t e = 0; e < x.edges().size(); ++e) {
      const auto& ed = x.edges()[e];
      edges.push_back({{"from", x.state_names()[ed.from]},
                       {"to", x.state_names()[ed.to]},
                       {"label", std::string(1, x.alphabet().symbol(ed.label))},
                       {"probability", mu.transition[e]}});
    }
    for (std::size_t s = 0; s < x.state_count(); ++s) stationary[x.state_names()[s]] = mu.stationary[s];
    return Json{{"eigenvalue", mu.eigenvalue},
                {"iterations", mu.iterations},
                {"transitions", edges},
                {"stationary", stationary},
                {"stochasticity_residual", mu.stochasticity_residual()},
                {"stationarity_residual", mu.stationarity_residual()}};
  });
  parry->add_option("shift", o->shift, "Shift file")->required();

  auto* cyl = leaf(*sub, state, "cylinder", "Measure of a cylinder", [&state, o]() {
    auto mu = parry_measure(load_shift(state, "shift", o->shift));
    state.inputs.literal("word", o->word);
    return Json{{"word", o->word}, {"probability", cylinder(mu, o->word)}};
  });
  cyl->add_option("shift", o->shift, "Shift file")->required();
  cyl->add_option("word", o->word, "Word")->required();

  auto* gamma = leaf(*sub, state, "gamma", "Exponential cylinder bound certificate", [&state, o]() {
    auto mu = parry_measure(load_shift(state, "shift", o->shift));
    auto cert = gamma_t_bound(mu, o->length);
    return Json{{"gamma", rational_json(cert.gamma)},
                {"t", cert.t},
                {"verified_length", cert.verified_length},
                {"words_checked", cert.words_checked},
                {"verified", verify_certificate(mu, cert)}};
  });
  gamma->add_option("shift", o->shift, "Shift file")->required();
  gamma->add_option("--length", o->length, "Verification length");

  auto* stirling = leaf(*sub, state, "stirling", "Binomial bound C(mn, pn) check", [&state, o]() {
    state.inputs.literal("nmp", std::to_string(o->n) + " " + std::to_string(o->m) + " " + std::to_string(o->p));
    return Json{{"n", o->n}, {"m", o->m}, {"p", o->p}, {"holds", verify_stirling_bound(o->n, o->m, o->p)}};
  });
  stirling->add_option("n", o->n)->required();
  stirling->add_option("m", o->m)->required();
  stirling->add_option("p", o->p)->required();

  auto* threshold = leaf(*sub, state, "threshold", "Least m, n0 with C(n, n/m) <= k^(na)", [&state, o]() {
    state.inputs.literal("k", o->k);
    state.inputs.literal("a", o->a);
    auto t = binomial_exponential_threshold(Rational::parse(o->k), Rational::parse(o->a));
    return Json{{"m", t.m}, {"n0", t.n0}, {"verified_range", {t.n0, 8 * t.n0}}};
  });
  threshold->add_option("k", o->k, "Base k > 1")->required();
  threshold->add_option("a", o->a, "Exponent a > 0")->required();

  auto* generic = leaf(*sub, state, "generic", "Prefix of a uniform Bernoulli generic point", [&state, o]() {
    state.inputs.literal("alphabet", o->alphabet);
    return Json{{"seed", state.seed}, {"word", bernoulli_prefix(Alphabet(o->alphabet), state.seed, o->length)}};
  });
  generic->add_option("--length", o->length, "Prefix length");
  generic->add_option("--alphabet", o->alphabet, "Symbols");

  auto* dn = leaf(*sub, state, "dn", "Words near the factors of a periodic point", [&state, o]() {
    state.inputs.literal("w", o->w);
    state.inputs.literal("eps", o->eps);
    auto r = neighborhood_count(Alphabet(o->alphabet), o->w, o->length, Rational::parse(o->eps));
    return Json{{"count", r.count}, {"bound", r.bound.str()}, {"ok", r.ok}};
  });
  dn->add_option("w", o->w, "Period word")->required();
  dn->add_option("--length", o->length, "n");
  dn->add_option("--eps", o->eps, "Radius as a fraction of n");
  dn->add_option("--alphabet", o->alphabet, "Symbols");
}

}  // namespace shiftgeom::cli
