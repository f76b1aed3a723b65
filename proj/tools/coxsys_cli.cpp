// coxsys: command-line front end for the Coxeter/systole toolkit.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxsys/coxsys.hpp"

using nlohmann::ordered_json;
using namespace coxsys;

namespace {

struct GlobalOpts {
  uint64_t seed = 1;
  int threads = 0;  // 0 = library default; results are thread-count independent
  bool deterministic = false;
  std::string format = "json";
};

ordered_json config_header(const std::string& subcommand, const GlobalOpts& g,
                           ordered_json params) {
  ordered_json j;
  j["command"] = subcommand;
  j["seed"] = g.seed;
  j["threads"] = g.threads;
  j["format"] = g.format;
  j["params"] = std::move(params);
  if (!g.deterministic) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  }
  return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json word_json(const Word& w) { return word_to_string(w); }

ordered_json moves_json(const std::vector<HomotopyMove>& moves) {
  ordered_json arr = ordered_json::array();
  for (const auto& m : moves) {
    ordered_json mj;
    mj["kind"] = m.kind == HomotopyMove::Kind::DeleteTT ? "DELETE_TT" : "SQUARE_SUS";
    mj["position"] = m.position;
    mj["s"] = m.s + 1;
    mj["u"] = word_to_string(m.u);
    arr.push_back(std::move(mj));
  }
  return arr;
}

ordered_json trace_json(const std::vector<ReductionStep>& steps) {
  ordered_json arr = ordered_json::array();
  for (const auto& st : steps) {
    ordered_json sj;
    sj["type"] = st.type;
    sj["pos"] = st.pos;
    if (st.type == 2) {
      sj["s"] = st.s + 1;
      sj["t"] = st.t + 1;
    } else {
      sj["letter"] = st.s + 1;
    }
    arr.push_back(std::move(sj));
  }
  return arr;
}

Partition parse_partition(const CoxeterMatrix& m, const std::string& red_csv) {
  Partition p;
  Word red = word_from_string(red_csv);
  p.red.assign(red.begin(), red.end());
  for (int g = 0; g < m.size(); ++g)
    if (std::find(p.red.begin(), p.red.end(), g) == p.red.end()) p.blue.push_back(g);
  return p;
}

QuotientDatum load_datum(const std::string& path) {
  std::ifstream is(path);
  require(static_cast<bool>(is), Errc::IoError, "cannot read " + path);
  nlohmann::json j;
  is >> j;
  QuotientDatum d;
  d.k = j.at("k").get<int>();
  d.points = j.at("points").get<size_t>();
  for (const auto& gen : j.at("generators")) {
    std::vector<int> img;
    for (const auto& v : gen) {
      int x = v.get<int>();
      require(x >= 1 && static_cast<size_t>(x) <= d.points, Errc::Usage,
              "permutation images are 1-based points");
      img.push_back(x - 1);
    }
    require(img.size() == d.points, Errc::Usage, "permutation image has wrong length");
    d.perm_gens.push_back(std::move(img));
  }
  require(d.perm_gens.size() == 6, Errc::Usage, "datum needs exactly 6 generators");
  return d;
}

QuotientDatum datum_from_prime(int k, long prime) {
  for (long f = 2; f * f <= prime; ++f)
    require(prime % f != 0, Errc::UnsupportedModulus,
            "modulus must be prime; " + std::to_string(prime) + " is composite");
  require(prime >= 2, Errc::UnsupportedModulus, "prime must be >= 2");
  TitsContext t(k);
  QuotientDatum d;
  d.k = k;
  d.mat_ctx = std::make_shared<const ModContext>(Int(prime), t.field()->psi());
  for (int i = 0; i < 6; ++i) d.mat_gens.push_back(ModMat::from_exact(d.mat_ctx, t.reflection(i)));
  return d;
}

std::string cache_path_for(int k, int radius, const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  const char* dir = std::getenv("COXSYS_CACHE_DIR");
  if (!dir) return {};
  return std::string(dir) + "/ball_k" + std::to_string(k) + "_r" + std::to_string(radius) + ".txt";
}

ordered_json int_json(const Int& v) { return v.str(); }

int run(int argc, char** argv) {
  CLI::App app{"coxsys: Coxeter word combinatorics, exact Tits representation, "
               "congruence certificates, quotient surfaces, hyperbolic arc tracing, "
               "and totient asymptotics"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for randomized operations (bit-reproducible)");
  app.add_option("--threads", g.threads, "worker threads (results are thread-count independent)");
  app.add_flag("--deterministic", g.deterministic, "suppress the timestamp field");
  app.add_option("--format", g.format, "output format: json or tsv (bounds only)")
      ->check(CLI::IsMember({"json", "tsv"}));

  int k = 4, radius = 2, m_exp = 1, max_len = 12, samples = 1000;
  long cap = 100000, order_cap = 0, prime = 3, trials = 10000, tile_cap = 1000000;
  double tolerance = 1e-12, delta_plus = 9.5;
  int primorials = 5;
  std::string word_csv, red_csv = "1,3,5", datum_path, export_path, cache_file;
  std::vector<double> genus_list;
  bool synthetic = false;

  auto* c_reduce = app.add_subcommand("reduce", "Tits reduction to a canonical reduced word");
  c_reduce->add_option("--k", k)->required();
  c_reduce->add_option("--word", word_csv)->required();
  c_reduce->add_option("--cap", cap, "braid-orbit search cap");

  auto* c_loop = app.add_subcommand("loop-reduce", "null-homotopy certificate for a cyclic loop");
  c_loop->add_option("--k", k)->required();
  c_loop->add_option("--word", word_csv)->required();
  c_loop->add_option("--red", red_csv, "red generators (default 1,3,5)");

  auto* c_part = app.add_subcommand("partition", "right-angled / Gal partition report");
  c_part->add_option("--k", k)->required();
  c_part->add_option("--red", red_csv);

  auto* c_minpoly = app.add_subcommand("minpoly", "minimal polynomial of 2cos(pi/k)");
  c_minpoly->add_option("--k", k)->required();

  auto* c_gram = app.add_subcommand("gram", "Gram form and exact determinant (two routes)");
  c_gram->add_option("--k", k)->required();

  auto* c_rel = app.add_subcommand("relations", "verify the 18 defining relations exactly");
  c_rel->add_option("--k", k)->required();

  auto* c_order = app.add_subcommand("order", "order of rho(word) up to a cap");
  c_order->add_option("--k", k)->required();
  c_order->add_option("--word", word_csv)->required();
  c_order->add_option("--cap", order_cap, "default 2k+2");

  auto* c_norms = app.add_subcommand("norms", "operator-norm and rho-norm bound checks");
  c_norms->add_option("--k", k)->required();
  c_norms->add_option("--radius", radius, "ball radius for the exhaustive check");
  c_norms->add_option("--samples", samples);
  c_norms->add_option("--maxlen", max_len);

  auto* c_ball = app.add_subcommand("ball", "breadth-first ball enumeration");
  c_ball->add_option("--k", k)->required();
  c_ball->add_option("--radius", radius)->required();
  c_ball->add_option("--cache", cache_file, "cache file (default from COXSYS_CACHE_DIR)");

  auto* c_avoid = app.add_subcommand("avoid", "ball-avoidance certificates for H(k)");
  c_avoid->add_option("--k", k)->required();
  c_avoid->add_option("--m", m_exp, "modulus exponent: modulus 3^m")->required();
  c_avoid->add_option("--radius", radius)->required();

  auto* c_qorder = app.add_subcommand("quotient-order", "stabilizer-chain order of a quotient");
  c_qorder->add_option("--k", k);
  c_qorder->add_option("--prime", prime);
  c_qorder->add_option("--datum", datum_path);

  auto* c_surface = app.add_subcommand("surface", "build the tessellated quotient surface");
  c_surface->add_option("--k", k);
  c_surface->add_option("--prime", prime);
  c_surface->add_option("--datum", datum_path);
  c_surface->add_flag("--synthetic", synthetic, "use the built-in order-16 datum");
  c_surface->add_option("--export", export_path);
  c_surface->add_option("--tile-cap", tile_cap);

  auto* c_hex = app.add_subcommand("hexagon", "right-angled regular hexagon and reflections");
  c_hex->add_option("--tolerance", tolerance);

  auto* c_arcs = app.add_subcommand("arcs", "Monte-Carlo length experiments for random arcs");
  c_arcs->add_option("--trials", trials);
  c_arcs->add_option("--k", k)->required();

  auto* c_bounds = app.add_subcommand("bounds", "primorial/totient tables and the bound chain");
  c_bounds->add_option("--primorials", primorials);
  c_bounds->add_option("--delta-plus", delta_plus);
  c_bounds->add_option("--genus", genus_list, "genus values for the fill bound");

  CLI11_PARSE(app, argc, argv);

  int exit_code = 0;

  if (c_reduce->parsed()) {
    ordered_json out = config_header("reduce", g, {{"k", k}, {"word", word_csv}, {"cap", cap}});
    CoxeterMatrix m = CoxeterMatrix::wk(k);
    Word w = word_from_string(word_csv);
    ReduceResult r = reduce(w, m, static_cast<size_t>(cap));
    out["reduced"] = word_json(r.word);
    out["canonical"] = r.canonical;
    if (!r.canonical) out["flag"] = "NONCANONICAL";
    out["trace"] = trace_json(r.trace);
    SignSupport ss = sign_support(w, m);
    out["sign"] = ss.sign;
    ordered_json sup = ordered_json::array();
    for (int s : ss.support) sup.push_back(s + 1);
    out["support"] = sup;
    emit(out);
  } else if (c_loop->parsed()) {
    ordered_json out =
        config_header("loop-reduce", g, {{"k", k}, {"word", word_csv}, {"red", red_csv}});
    CoxeterMatrix m = CoxeterMatrix::wk(k);
    TitsContext t(k);
    Partition p = parse_partition(m, red_csv);
    CyclicWord cw(word_from_string(word_csv));
    auto moves = reduce_loop(cw, m, p, t.identity_oracle());
    out["canonicalRotation"] = cw.to_string();
    out["moves"] = moves_json(moves);
    out["moveCount"] = moves.size();
    emit(out);
  } else if (c_part->parsed()) {
    ordered_json out = config_header("partition", g, {{"k", k}, {"red", red_csv}});
    CoxeterMatrix m = CoxeterMatrix::wk(k);
    Partition p = parse_partition(m, red_csv);
    PartitionReport r = check_partition(m, p);
    out["rightAngled"] = r.right_angled;
    out["gal"] = r.gal;
    out["redGirth"] = r.red_girth == kInfEntry ? ordered_json("inf") : ordered_json(r.red_girth);
    out["blueGirth"] = r.blue_girth == kInfEntry ? ordered_json("inf") : ordered_json(r.blue_girth);
    if (!r.note.empty()) out["note"] = r.note;
    emit(out);
  } else if (c_minpoly->parsed()) {
    ordered_json out = config_header("minpoly", g, {{"k", k}});
    auto ctx = make_context(k);
    ordered_json psi = ordered_json::array();
    for (const Int& c : ctx->psi()) psi.push_back(c.convert_to<long long>());
    out["psi"] = psi;
    out["degree"] = ctx->degree();
    emit(out);
  } else if (c_gram->parsed()) {
    ordered_json out = config_header("gram", g, {{"k", k}});
    TitsContext t(k);
    AlgebraicInt oracle = gram_det_eigen_oracle(t.field());
    AlgebraicInt closed = gram_det_closed_form(t.field());
    out["det"] = t.gram_det().to_string();
    out["eigenOracle"] = oracle.to_string();
    out["closedForm"] = closed.to_string();
    bool agree = t.gram_det() == oracle && oracle == closed;
    out["agree"] = agree;
    if (!agree) exit_code = 2;
    emit(out);
  } else if (c_rel->parsed()) {
    ordered_json out = config_header("relations", g, {{"k", k}});
    TitsContext t(k);
    RelationReport r = verify_relations(t);
    out["ok"] = r.ok;
    out["failures"] = r.failures;
    if (!r.ok) exit_code = 2;
    emit(out);
  } else if (c_order->parsed()) {
    if (order_cap <= 0) order_cap = 2 * k + 2;
    ordered_json out =
        config_header("order", g, {{"k", k}, {"word", word_csv}, {"cap", order_cap}});
    TitsContext t(k);
    auto ord = t.element_order(word_from_string(word_csv), order_cap);
    if (ord)
      out["order"] = *ord;
    else
      out["order"] = "CAP_EXCEEDED";
    emit(out);
  } else if (c_norms->parsed()) {
    ordered_json out = config_header(
        "norms", g, {{"k", k}, {"radius", radius}, {"samples", samples}, {"maxlen", max_len}});
    TitsContext t(k);
    NormCheckReport l20 = check_operator_norms(t, samples, max_len, g.seed);
    out["lemma20"] = {{"checked", l20.checked}, {"failures", l20.failures},
                      {"maxRatio", l20.max_ratio}};
    Ball b = ball_enumerate(t, radius);
    NormCheckReport l21 = check_rho_norms_ball(t, b);
    out["lemma21"] = {{"checked", l21.checked}, {"failures", l21.failures},
                      {"maxRatio", l21.max_ratio}};
    emit(out);
  } else if (c_ball->parsed()) {
    ordered_json out =
        config_header("ball", g, {{"k", k}, {"radius", radius}, {"cache", cache_file}});
    TitsContext t(k);
    std::string cache = cache_path_for(k, radius, cache_file);
    std::optional<Ball> b;
    bool from_cache = false;
    if (!cache.empty()) {
      b = ball_load(t, radius, cache);
      from_cache = b.has_value();
    }
    if (!b) {
      b = ball_enumerate(t, radius);
      if (!cache.empty()) ball_save(*b, cache);
    }
    out["fromCache"] = from_cache;
    out["count"] = b->size();
    out["sizes"] = b->size_by_radius;
    emit(out);
  } else if (c_avoid->parsed()) {
    ordered_json out = config_header("avoid", g, {{"k", k}, {"m", m_exp}, {"radius", radius}});
    TitsContext t(k);
    Ball b = ball_enumerate(t, radius);
    AvoidanceCertificate cert = ball_avoidance_certificate(t, m_exp, b);
    out["k"] = cert.k;
    out["m"] = cert.m;
    out["radiusChecked"] = cert.radius_checked;
    out["analyticRadius"] = cert.analytic_radius;
    out["pass"] = cert.exhaustive_pass;
    out["criterion18Covered"] = cert.criterion18_covered;
    out["elementsChecked"] = cert.elements_checked;
    if (!cert.exhaustive_pass) {
      exit_code = 2;
      ordered_json v = ordered_json::array();
      for (auto& [w, d] : cert.violations) v.push_back({{"word", word_to_string(w)}, {"depth", d}});
      out["violations"] = v;
    }
    emit(out);
  } else if (c_qorder->parsed()) {
    ordered_json out = config_header(
        "quotient-order", g, {{"k", k}, {"prime", prime}, {"datum", datum_path}});
    Int order;
    std::optional<Int> closure;
    int membership = 0;
    std::vector<size_t> orbits;
    if (!datum_path.empty()) {
      QuotientDatum d = load_datum(datum_path);
      PermAction a{d.points};
      StabilizerChain<PermAction> chain(a, d.perm_gens, g.seed);
      order = chain.order();
      orbits = chain.orbit_sizes();
      membership = chain.membership_sanity(100, g.seed + 1);
      if (order <= 1000000) closure = chain.closure_order(2000000);
      out["k"] = d.k;
    } else {
      QuotientDatum d = datum_from_prime(k, prime);
      MatAction a(d.mat_ctx);
      std::vector<MatAction::Elt> gens;
      for (const ModMat& mm : d.mat_gens) gens.push_back({mm, mm});
      StabilizerChain<MatAction> chain(a, gens, g.seed);
      order = chain.order();
      orbits = chain.orbit_sizes();
      membership = chain.membership_sanity(100, g.seed + 1);
      if (order <= 1000000) closure = chain.closure_order(2000000);
      out["k"] = k;
    }
    out["order"] = int_json(order);
    out["orbitSizes"] = orbits;
    out["membership"] = std::to_string(membership) + "/100";
    if (membership != 100) exit_code = 2;
    out["closureChecked"] = closure.has_value();
    if (closure) {
      out["closureAgrees"] = *closure == order;
      if (*closure != order) exit_code = 2;
    }
    double log3_order = ln_big(order) / std::log(3.0);
    out["log3Order"] = log3_order;
    int kk = datum_path.empty() ? k : out["k"].get<int>();
    out["log3Bound"] = 72.0 * kk * euler_phi(2 * static_cast<unsigned>(kk));
    emit(out);
  } else if (c_surface->parsed()) {
    ordered_json out = config_header(
        "surface", g,
        {{"k", k}, {"prime", prime}, {"datum", datum_path}, {"synthetic", synthetic},
         {"tileCap", tile_cap}, {"export", export_path}});
    QuotientDatum d;
    if (synthetic)
      d = synthetic_f2_16_datum();
    else if (!datum_path.empty())
      d = load_datum(datum_path);
    else
      d = datum_from_prime(k, prime);
    SurfaceBuildResult r = build_surface(d, static_cast<size_t>(tile_cap), g.seed);
    out["k"] = d.k;
    out["countsOnly"] = r.counts_only;
    out["f0"] = int_json(r.f0);
    out["f1"] = int_json(r.f1);
    out["f2"] = int_json(r.f2);
    out["genus"] = int_json(r.genus);
    out["curveCount"] = int_json(r.curve_count);
    SystoleReport srep = systole_report(r, d.k);
    out["systoleReport"] = {{"curveLength", srep.curve_length},
                            {"area", srep.area},
                            {"gaussBonnet", srep.gauss_bonnet},
                            {"gaussBonnetConsistent", srep.gauss_bonnet_consistent},
                            {"theorem25Bound", srep.theorem25_bound},
                            {"systolesCertified", srep.systoles_certified}};
    if (!export_path.empty()) export_surface(r, export_path);
    emit(out);
  } else if (c_hex->parsed()) {
    ordered_json out = config_header("hexagon", g, {{"tolerance", tolerance}});
    hyp::HexagonModel h = hyp::build_hexagon(tolerance);
    out["apothem"] = h.apothem;
    out["sideLength"] = h.side_length;
    out["arcosh2"] = std::acosh(2.0);
    double max_angle_err = 0;
    for (double a : h.angles) max_angle_err = std::max(max_angle_err, std::abs(a - std::numbers::pi / 2));
    out["maxAngleError"] = max_angle_err;
    out["sideLengthError"] = std::abs(h.side_length - std::acosh(2.0));
    hyp::Isometry tr = h.refl[0] * h.refl[2];
    out["translationLength"] = tr.translation_length();
    out["translationError"] = std::abs(tr.translation_length() - 2 * h.side_length);
    bool ok = max_angle_err < 1e-9 && out["sideLengthError"].get<double>() < 1e-9 &&
              out["translationError"].get<double>() < 1e-8;
    out["pass"] = ok;
    if (!ok) exit_code = 2;
    emit(out);
  } else if (c_arcs->parsed()) {
    ordered_json out = config_header("arcs", g, {{"trials", trials}, {"k", k}});
    hyp::HexagonModel h = hyp::build_hexagon();
    hyp::LengthExperimentReport r = hyp::length_experiments(h, trials, k, g.seed);
    out["trials"] = r.trials;
    out["rejected"] = r.rejected;
    out["counterexamplesA"] = r.counterexamples_a;
    out["counterexamplesB"] = r.counterexamples_b;
    out["windowsB"] = r.windows_b;
    out["minMarginA"] = r.min_margin_a;
    out["minMarginB"] = r.min_margin_b;
    if (r.counterexamples_a || r.counterexamples_b) {
      exit_code = 2;
      ordered_json fails = ordered_json::array();
      for (auto& f : r.failures)
        fails.push_back({{"x", f.x}, {"y", f.y}, {"theta", f.theta}, {"seed", f.trial_seed}});
      out["failures"] = fails;
    }
    emit(out);
  } else if (c_bounds->parsed()) {
    ordered_json out = config_header(
        "bounds", g, {{"primorials", primorials}, {"deltaPlus", delta_plus}, {"genus", genus_list}});
    auto rows = totient_primorials(primorials);
    auto landau = landau_table(primorials);
    ChainReport chain = bound_chain(rows, delta_plus);
    if (g.format == "tsv") {
      std::cout << "n\tq\tphi\tlnln_q\tratio\te_minus_gamma\tln_delta\t242\t243\t244\n";
      for (size_t i = 0; i < rows.size(); ++i) {
        const auto& cr = chain.rows[i];
        std::cout << rows[i].n << "\t" << rows[i].q << "\t" << rows[i].phi << "\t"
                  << landau[i].lnln_q << "\t" << landau[i].ratio << "\t" << exp_minus_gamma()
                  << "\t" << cr.ln_delta << "\t" << cr.holds_242 << "\t" << cr.holds_243 << "\t"
                  << cr.holds_244 << "\n";
      }
      return 0;
    }
    out["delta"] = chain.delta;
    out["sixDelta"] = 6 * chain.delta;
    out["deltaPlus"] = chain.delta_plus;
    out["eMinusGamma"] = exp_minus_gamma();
    ordered_json table = ordered_json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& cr = chain.rows[i];
      table.push_back({{"n", rows[i].n},
                       {"q", int_json(rows[i].q)},
                       {"phi", int_json(rows[i].phi)},
                       {"lnlnQ", landau[i].lnln_q},
                       {"landauRatio", landau[i].ratio},
                       {"landauOracle", landau[i].ratio_oracle},
                       {"lnDelta", cr.ln_delta},
                       {"holds242", cr.holds_242},
                       {"holds243", cr.holds_243},
                       {"holds244", cr.holds_244},
                       {"margins", {cr.margin_242, cr.margin_243, cr.margin_244}},
                       {"indeterminate", cr.indeterminate}});
    }
    out["rows"] = table;
    out["first242"] = chain.first_242;
    out["first243"] = chain.first_243;
    out["first244"] = chain.first_244;
    out["monotoneOnceTrue"] =
        chain.monotone_242 && chain.monotone_243 && chain.monotone_244;
    ordered_json fills = ordered_json::array();
    for (double gv : genus_list)
      fills.push_back({{"genus", gv}, {"fillBound", fill_bound(gv)}});
    out["fillBounds"] = fills;
    emit(out);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::Usage:
      case Errc::IoError:
      case Errc::KTooSmall:
      case Errc::UnsupportedModulus:
      case Errc::MalformedMatrix:
      case Errc::Domain:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
