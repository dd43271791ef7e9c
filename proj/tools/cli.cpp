#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "compmat/compmat.hpp"

namespace compmat::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string ring = "z";
  std::string f;
  std::string g;
  std::vector<std::string> extra;
  bool json = false;
  std::size_t trials = 100;
  std::size_t max_word_len = 8;
  std::uint64_t seed = 1;
  std::string variant = "auto";
  std::string factor;
  bool sweep = false;
  std::size_t diag_ones = 0;
};

std::vector<std::string> poly_texts(const Options& o) {
  std::vector<std::string> out;
  if (!o.f.empty()) out.push_back(o.f);
  if (!o.g.empty()) out.push_back(o.g);
  out.insert(out.end(), o.extra.begin(), o.extra.end());
  return out;
}

template <ExactRing R>
std::vector<MonicPoly<R>> parse_all(const R& ring, const Options& o, std::size_t min_count, std::size_t max_count) {
  const auto texts = poly_texts(o);
  if (texts.size() < min_count || texts.size() > max_count) {
    const std::string want = min_count == max_count ? std::to_string(min_count)
                                                    : "between " + std::to_string(min_count) + " and " +
                                                          (max_count == SIZE_MAX ? std::string("any number of")
                                                                                 : std::to_string(max_count));
    throw ParseError("expected " + want + " polynomials (via -f, -g or positional), got " + std::to_string(texts.size()));
  }
  std::vector<MonicPoly<R>> out;
  for (const auto& t : texts) out.push_back(parse_monic(ring, t));
  return out;
}

template <ExactRing R>
CompanionPair<R> parse_pair(const R& ring, const Options& o) {
  auto polys = parse_all(ring, o, 2, 2);
  return CompanionPair<R>(polys[0], polys[1]);
}

template <ExactRing R>
std::string fmt(const R& ring, const typename R::value_type& v) {
  return ring.format(v);
}

template <ExactRing R>
Json vector_json(const R& ring, const std::vector<typename R::value_type>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(ring.format(x));
  return a;
}

template <ExactRing R>
Json matrix_json(const Matrix<R>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.ring().format(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json monomials_json(const std::vector<Monomial>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(Json::array({m.x, m.y}));
  return a;
}

Json monomial_names(const std::vector<Monomial>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(word_str(monomial_word(m)));
  return a;
}

template <ExactRing R>
Json bipoly_json(const BiPoly<R>& b) {
  Json a = Json::array();
  for (const auto& [m, c] : b.terms()) a.push_back(Json{{"x", m.x}, {"y", m.y}, {"coeff", b.ring().format(c)}});
  return a;
}

template <ExactRing R>
Json wordpoly_json(const WordPoly<R>& w) {
  Json a = Json::array();
  for (const auto& [word, c] : w.terms()) a.push_back(Json{{"word", word_key(word)}, {"coeff", w.ring().format(c)}});
  return a;
}

// ---- subcommands; each returns the "result" object -------------------------

template <ExactRing R>
Json cmd_resultant(const R& ring, const Options& o) {
  const auto polys = parse_all(ring, o, 2, 2);
  if (polys[0].degree() != polys[1].degree()) throw DomainError("resultant: f and g must have the same degree");
  return Json{{"n", polys[0].degree()}, {"resultant", fmt(ring, resultant(polys[0], polys[1]))}};
}

template <ExactRing R>
Json cmd_det_identity(const R& ring, const Options& o) {
  if (!o.sweep) {
    const auto pair = parse_pair(ring, o);
    const auto rep = det_identity_check(pair);
    return Json{{"n", pair.n()},
                {"det_M", fmt(ring, rep.det_m)},
                {"resultant", fmt(ring, rep.resultant)},
                {"res_power", fmt(ring, rep.res_power)},
                {"equal", rep.equal}};
  }
  if (!poly_texts(o).empty()) throw ParseError("--sweep draws random pairs and takes no polynomials");
  if (!ring.is_domain()) throw DomainError("det-identity needs an integral domain, got " + ring.descriptor().name());
  std::mt19937_64 rng(o.seed);
  Json rows = Json::array();
  bool all = true;
  for (std::size_t n = 2; n <= 5; ++n) {
    std::size_t zero = 0;
    bool row_all = true;
    for (std::size_t t = 0; t < o.trials; ++t) {
      const auto f = random_monic(ring, n, rng, 9);
      const auto g = random_monic(ring, n, rng, 9);
      const auto rep = det_identity_check(CompanionPair<R>(f, g));
      row_all = row_all && rep.equal;
      if (ring.is_zero(rep.resultant)) ++zero;
    }
    rows.push_back(Json{{"n", n}, {"pairs", o.trials}, {"zero_resultants", zero}, {"all_equal", row_all}});
    all = all && row_all;
  }
  return Json{{"coefficient_bound", 9}, {"seed", o.seed}, {"sweep", rows}, {"all_equal", all}};
}

template <ExactRing R>
Json cmd_index(const R& ring, const Options& o) {
  if constexpr (EuclideanRing<R>) {
    const auto pair = parse_pair(ring, o);
    const auto rep = lattice_index(pair);
    auto opt = [](const std::optional<Integer>& v) { return v ? Json(v->str()) : Json("infinite"); };
    return Json{{"n", pair.n()},
                {"resultant", fmt(ring, rep.resultant)},
                {"predicted_index", opt(rep.predicted_index)},
                {"snf_index", opt(rep.snf_index)},
                {"invariant_factors", vector_json(ring, rep.invariant_factors)},
                {"rank", rep.rank},
                {"agree", rep.agree}};
  } else {
    throw DomainError("index needs Z or Z[i], got " + ring.descriptor().name());
  }
}

template <ExactRing R>
Json cmd_generates(const R& ring, const Options& o) {
  const auto polys = parse_all(ring, o, 2, SIZE_MAX);
  const auto v = generates_full(polys);
  Json r{{"generates", v.generates}, {"method", v.method}};
  if (v.gcd) r["gcd"] = v.gcd->str();
  if (v.resultant) r["resultant"] = fmt(ring, *v.resultant);
  if (!v.candidate_primes.empty()) {
    Json ps = Json::array();
    for (const auto& p : v.candidate_primes) ps.push_back(p.str());
    r["candidate_primes"] = ps;
  }
  if (v.constant_generator) r["constant_generator"] = v.constant_generator->str();
  Json obs = Json::array();
  for (const auto& ob : v.obstructions) {
    obs.push_back(Json{{"prime", ob.prime.str()},
                       {"common_factor", ob.common_factor ? Json(ob.common_factor->str()) : Json(nullptr)}});
  }
  r["obstructions"] = obs;
  return r;
}

template <ExactRing R>
Json cmd_basis(const R& ring, const Options& o) {
  const auto pair = parse_pair(ring, o);
  const auto rep = rank_and_basis(pair);
  const auto h = h_annihilator_check(pair);
  return Json{{"n", pair.n()},
              {"m", rep.m},
              {"gcd", rep.gcd.str()},
              {"h", rep.h.str()},
              {"rank", rep.rank},
              {"basis", monomial_names(rep.basis_monomials)},
              {"basis_exponents", monomials_json(rep.basis_monomials)},
              {"oracle_dimension", rep.oracle_dimension},
              {"h_annihilates", h.holds}};
}

template <ExactRing R>
Json cmd_relations(const R& ring, const Options& o) {
  const auto pair = parse_pair(ring, o);
  const auto seq = p_sequence(pair);  // also checks (C-D) D^(j-1) (C-D) = a_j (C-D)
  const Matrix<R> p = verify_gP(pair, seq);
  coord_identity_checks(pair, o.trials, o.seed);
  Json ps = Json::array(), bigp = Json::array(), bigp_terms = Json::array();
  for (const auto& pj : seq.p) ps.push_back(pj.str());
  for (const auto& pj : seq.P) {
    bigp.push_back(pj.str());
    bigp_terms.push_back(bipoly_json(pj));
  }
  return Json{{"n", pair.n()},
              {"s", pair.s().str()},
              {"a", vector_json(ring, pair.a())},
              {"p", ps},
              {"P", bigp},
              {"P_terms", bigp_terms},
              {"P_matrix", matrix_json(p)},
              {"checks",
               Json{{"eq3_a_j", true},
                    {"p_j_C_times_C_minus_D", true},
                    {"D_j_C_equals_P_j", true},
                    {"g_C_P_equals_minus_f_D", true},
                    {"coordinate_identities", true}}}};
}

template <ExactRing R>
Json cmd_solve_q(const R& ring, const Options& o) {
  const auto pair = parse_pair(ring, o);
  const auto rep = solve_Q(pair);
  Json ker = Json::array();
  for (const auto& v : rep.kernel_basis) ker.push_back(vector_json(ring, v));
  return Json{{"n", pair.n()},
              {"particular", matrix_json(rep.particular)},
              {"kernel_basis", ker},
              {"unique", rep.unique},
              {"kernel_full", rep.kernel_full}};
}

template <ExactRing R>
PresentationVariant pick_variant(const CompanionPair<R>& pair, const Options& o) {
  return o.variant == "auto" ? choose_variant(pair) : parse_variant(o.variant);
}

template <ExactRing R>
Json presentation_json(const PresentationDoc<R>& doc) {
  Json rels = Json::array();
  for (const auto& r : doc.relations) {
    Json rel{{"label", r.label}};
    if (r.label == "swap-j") rel["j"] = r.j;
    rel["lhs"] = wordpoly_json(r.lhs);
    rel["rhs"] = wordpoly_json(r.rhs);
    rel["text"] = r.str();
    rels.push_back(rel);
  }
  Json out{{"variant", variant_name(doc.variant)}, {"n", doc.n}, {"generators", Json::array({"X", "Y"})}};
  if (doc.h) out["h"] = doc.h->str();
  out["relations"] = rels;
  out["basis"] = monomial_names(doc.basis);
  return out;
}

template <ExactRing R>
Json cmd_presentation(const R& ring, const Options& o, std::string& text) {
  const auto pair = parse_pair(ring, o);
  const auto doc = emit_presentation(pair, pick_variant(pair, o));
  text = doc.str();
  return presentation_json(doc);
}

template <ExactRing R>
Json cmd_verify_presentation(const R& ring, const Options& o) {
  const auto pair = parse_pair(ring, o);
  const auto variant = pick_variant(pair, o);
  const auto rep = verify_presentation(pair, variant, o.trials, o.max_word_len, o.seed);
  return Json{{"variant", variant_name(variant)},
              {"n", pair.n()},
              {"seed", o.seed},
              {"relations_checked", rep.relations_checked},
              {"words_checked", rep.words_checked},
              {"max_word_len", o.max_word_len},
              {"splits_checked", rep.splits_checked},
              {"basis_size", rep.basis_size},
              {"basis_rank", rep.basis_rank},
              {"idempotent", rep.idempotent},
              {"ok", rep.ok}};
}

template <ExactRing R>
Json cmd_commutant(const R& ring, const Options& o) {
  const auto pair = parse_pair(ring, o);
  const auto rep = commutant(pair);
  Json basis = Json::array();
  for (const auto& m : rep.basis) basis.push_back(matrix_json(m));
  return Json{{"n", pair.n()}, {"dimension", rep.dimension}, {"basis", basis}};
}

template <ExactRing R>
Json cmd_invariant_subspaces(const R& ring, const Options& o) {
  const auto polys = parse_all(ring, o, 1, SIZE_MAX);
  std::optional<Poly<R>> factor;
  if (!o.factor.empty()) factor = parse_poly(ring, o.factor);
  const auto rep = common_invariant_subspaces(polys, factor);
  Json basis = Json::array();
  for (const auto& v : rep.subspace_basis) basis.push_back(vector_json(ring, v));
  return Json{{"n", polys.front().degree()},
              {"gcd", rep.d.str()},
              {"gcd_degree", rep.d.degree()},
              {"exists_nontrivial", rep.exists_nontrivial},
              {"factor", rep.factor ? Json(rep.factor->str()) : Json(nullptr)},
              {"subspace_dimension", rep.subspace_basis.size()},
              {"subspace_basis", basis},
              {"verified", rep.verified}};
}

template <ExactRing R>
Json cmd_oracle_span(const R& ring, const Options& o) {
  std::vector<Matrix<R>> gens;
  if (o.diag_ones > 0) {
    if (!poly_texts(o).empty()) throw ParseError("--diag-ones takes no polynomials");
    const std::size_t n = o.diag_ones;
    Matrix<R> a(ring, n, n), b(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, i) = ring.from_integer(Integer(i + 1));
      for (std::size_t j = 0; j < n; ++j) b(i, j) = ring.one();
    }
    gens = {a, b};
  } else {
    for (const auto& p : parse_all(ring, o, 1, SIZE_MAX)) gens.push_back(companion(p));
  }
  const auto rep = span_closure_oracle(gens);
  Json r{{"generators", gens.size()}, {"n", gens.front().rows()}, {"dimension", rep.dimension}};
  if constexpr (EuclideanRing<R>) r["lattice_index"] = rep.lattice_index ? Json(rep.lattice_index->str()) : Json("infinite");
  if (gens.size() == 2) {
    r["products_rank"] = rep.products_rank;
    r["products_closed"] = rep.closed;
  }
  return r;
}

// ---- text rendering ---------------------------------------------------------

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_flat(const Json& v) {
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured(); });
}

void render(std::ostream& os, const Json& v, const std::string& indent) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& x = it.value();
    os << indent << it.key() << ":";
    if (!x.is_structured()) {
      os << " " << scalar_text(x) << "\n";
    } else if (x.is_array() && is_flat(x)) {
      os << " [";
      for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar_text(x[i]);
      os << "]\n";
    } else if (x.is_array()) {
      os << "\n";
      for (const auto& e : x) {
        if (e.is_object()) {
          os << indent << "  -\n";
          render(os, e, indent + "    ");
        } else if (e.is_array() && is_flat(e)) {
          os << indent << "  [";
          for (std::size_t i = 0; i < e.size(); ++i) os << (i ? ", " : "") << scalar_text(e[i]);
          os << "]\n";
        } else if (e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& r) { return r.is_array() && is_flat(r); })) {
          os << indent << "  [";
          for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < e[i].size(); ++j) os << (j ? " " : "") << scalar_text(e[i][j]);
          }
          os << "]\n";
        } else {
          os << indent << "  " << e.dump() << "\n";
        }
      }
    } else {
      os << "\n";
      render(os, x, indent + "  ");
    }
  }
}

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"resultant", "Res(f, g) via the Sylvester determinant, cross-checked"},
    {"det-identity", "det M_{f,g} against Res(f,g)^(n-1); --sweep for random pairs"},
    {"index", "index of R<C,D> in M_n(R) over Z or Z[i]"},
    {"generates", "whether the companion matrices generate M_n(R)"},
    {"basis", "rank and monomial basis of R<C,D>"},
    {"relations", "a_j, p_j, P_j and the identities they satisfy"},
    {"solve-q", "all Q with g(C) Q = -f(D) over a field"},
    {"presentation", "generators and relations for R<C,D>"},
    {"verify-presentation", "check a presentation against matrix evaluation"},
    {"commutant", "matrices commuting with C and D over a field"},
    {"invariant-subspaces", "common invariant subspaces over a field"},
    {"oracle-span", "brute-force closure of the algebra generated"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with pairs of companion matrices", "compmat"};
  app.require_subcommand(1);
  Options o;
  for (const auto& [name, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--ring", o.ring, "z | q | zi | zmod:<m> | gf:<p>")->capture_default_str();
    sub->add_option("-f", o.f, "first monic polynomial");
    sub->add_option("-g", o.g, "second monic polynomial");
    sub->add_option("polys", o.extra, "further polynomials");
    sub->add_flag("--json", o.json, "print the report as JSON");
    sub->add_option("--trials", o.trials, "random trials")->capture_default_str();
    sub->add_option("--max-word-len", o.max_word_len, "longest random word")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
    if (name == "presentation" || name == "verify-presentation") {
      sub->add_option("--variant", o.variant, "auto | full | full-constant-s | subalgebra")->capture_default_str();
    }
    if (name == "invariant-subspaces") sub->add_option("--factor", o.factor, "monic factor h of the gcd");
    if (name == "det-identity") sub->add_flag("--sweep", o.sweep, "random pairs for n = 2..5, coefficients in [-9, 9]");
    if (name == "oracle-span") sub->add_option("--diag-ones", o.diag_ones, "use diag(1..n) and the all-ones matrix");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const RingDescriptor desc = parse_ring_spec(o.ring);
    std::string text;
    Json result = dispatch(desc, [&](const auto& ring) -> Json {
      if (command == "resultant") return cmd_resultant(ring, o);
      if (command == "det-identity") return cmd_det_identity(ring, o);
      if (command == "index") return cmd_index(ring, o);
      if (command == "generates") return cmd_generates(ring, o);
      if (command == "basis") return cmd_basis(ring, o);
      if (command == "relations") return cmd_relations(ring, o);
      if (command == "solve-q") return cmd_solve_q(ring, o);
      if (command == "presentation") return cmd_presentation(ring, o, text);
      if (command == "verify-presentation") return cmd_verify_presentation(ring, o);
      if (command == "commutant") return cmd_commutant(ring, o);
      if (command == "invariant-subspaces") return cmd_invariant_subspaces(ring, o);
      return cmd_oracle_span(ring, o);
    });
    Json inputs = Json::object();
    if (!o.f.empty()) inputs["f"] = o.f;
    if (!o.g.empty()) inputs["g"] = o.g;
    if (!o.extra.empty()) inputs["polys"] = o.extra;
    if (o.json) {
      Json report{{"command", command}, {"ring", desc.spec()}, {"inputs", inputs}, {"result", result}};
      out << report.dump(2) << "\n";
    } else if (!text.empty()) {
      out << text;
    } else {
      out << command << " over " << desc.name() << "\n";
      render(out, result, "  ");
    }
    return kOk;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    if (!e.dump().empty()) err << e.dump() << "\n";
    return kInvariant;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace compmat::cli
