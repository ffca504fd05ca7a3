// Command-line front end: structure-condition checks, Habiro-ring
// calculations, Grothendieck/Tate class manipulation, family sweeps,
// brute-force oracles, and the named verification targets.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_util.hpp"
#include "fzeta/families.hpp"
#include "fzeta/fforacle.hpp"
#include "fzeta/grothendieck.hpp"
#include "fzeta/habiro.hpp"
#include "fzeta/qseries.hpp"
#include "fzeta/tateroot.hpp"
#include "verify.hpp"

namespace {

using namespace fzeta;
using fzeta::cli::coeff_map_json;
using fzeta::cli::cyclotomic_json;
using fzeta::cli::habiro_json;
using fzeta::cli::json;
using fzeta::cli::normal_form_json;

struct GlobalOpts {
  bool json_out = false;
  bool csv_out = false;
  std::string convention = "one-minus-n";
  int threads = 1;

  EvalConvention conv() const {
    return convention == "minus-n" ? EvalConvention::minus_n
                                   : EvalConvention::one_minus_n;
  }
};

void print_human(const json& j) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_string())
      std::cout << it.key() << ": " << it->get<std::string>() << "\n";
    else
      std::cout << it.key() << ": " << it->dump() << "\n";
  }
}

void emit(const GlobalOpts& g, const json& j) {
  if (g.json_out)
    std::cout << j.dump(2) << "\n";
  else
    print_human(j);
}

std::map<long, Int> coeff_map_of(const std::string& text) {
  const IntPoly p = parse_poly(text);
  std::map<long, Int> m;
  for (long k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) m[k] = p.coeff(k);
  return m;
}

std::vector<std::vector<long>> parse_matrix(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<long> r;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) r.push_back(std::stol(cell));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw std::invalid_argument("matrix must be square: rows of length " +
                                  std::to_string(rows.size()) + " expected");
  return rows;
}

json tate_json(const TateRootClass& c) {
  return {{"root_order", c.root_order()},
          {"value", format_laurent(c.value())},
          {"pretty", pretty_laurent(c.value(), "t")}};
}

json sign_rows_json(const std::vector<SignTableRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j = {{"n", r.n},         {"eval_point", r.eval_point},
              {"cutoff", r.cutoff}, {"value", to_dec(r.value)},
              {"sign", r.sign},   {"claimed", r.claimed},
              {"match", r.match}};
    if (!r.proof_claimed.empty()) {
      j["proof_claimed"] = r.proof_claimed;
      j["proof_match"] = r.proof_match;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

GrothClass dual_class(const GrothClass& c) {
  LaurentPoly d;
  for (const auto& [k, v] : c.value().terms()) {
    const bool odd = (k % 2) != 0;
    d = d + LaurentPoly::monomial(k, odd ? Int(-v) : v);
  }
  return GrothClass(d);
}

int report_and_code(const GlobalOpts& g, const ConditionReport& rep) {
  emit(g, rep.to_json());
  return verdict_exit_code(rep.verdict);
}

// ---------------------------------------------------------------- check ----

struct CheckArgs {
  std::string cond;
  std::string poly;
  long n = 0;
  std::string split_b, split_p;
  std::vector<std::string> groups;
};

void add_check(CLI::App& app, GlobalOpts& g, int& rc) {
  auto args = std::make_shared<CheckArgs>();
  auto* c = app.add_subcommand("check", "Structure-condition checks");
  c->add_option("--cond", args->cond, "Condition id")
      ->required()
      ->check(CLI::IsMember({"motivic-f1", "eval-fzeta", "partial-eval",
                             "interp-positivity", "dual-torification",
                             "constructible-f1"}));
  c->add_option("--poly", args->poly,
                "Class or counting polynomial (sparse k:c;... or dense c0,c1,...)");
  c->add_option("--n", args->n, "Root-of-unity order for eval/partial-eval");
  c->add_option("--split-b", args->split_b, "Explicit split: b part");
  c->add_option("--split-p", args->split_p, "Explicit split: P part");
  c->add_option("--group", args->groups,
                "Summand group for constructible-f1, '|'-separated polynomials "
                "(repeatable)");
  c->callback([args, &g, &rc] {
    ConditionReport rep;
    if (args->cond == "constructible-f1") {
      if (args->groups.empty())
        throw std::invalid_argument("constructible-f1 needs at least one --group");
      std::vector<std::vector<IntPoly>> groups;
      for (const auto& gtext : args->groups) {
        std::vector<IntPoly> group;
        std::stringstream ss(gtext);
        std::string part;
        while (std::getline(ss, part, '|')) group.push_back(parse_poly(part));
        groups.push_back(std::move(group));
      }
      rep = check_constructible_f1(groups);
    } else if (args->poly.empty()) {
      throw std::invalid_argument("--poly is required for " + args->cond);
    } else if (args->cond == "motivic-f1") {
      rep = check_motivic_f1(GrothClass(parse_laurent(args->poly)));
    } else if (args->cond == "eval-fzeta") {
      if (args->n < 1) throw std::invalid_argument("--n >= 1 required");
      rep = check_eval_fzeta(parse_poly(args->poly), args->n);
    } else if (args->cond == "partial-eval") {
      if (args->n < 1) throw std::invalid_argument("--n >= 1 required");
      std::optional<PartialEvalSplit> split;
      if (!args->split_b.empty() || !args->split_p.empty())
        split = PartialEvalSplit{parse_poly(args->split_b),
                                 parse_poly(args->split_p)};
      rep = check_partial_eval(parse_poly(args->poly), args->n, split);
    } else if (args->cond == "interp-positivity") {
      rep = check_interp_positivity(parse_poly(args->poly));
    } else {  // dual-torification
      rep = check_dual_torification(GrothClass(parse_laurent(args->poly)));
    }
    rc = report_and_code(g, rep);
  });
}

// --------------------------------------------------------------- habiro ----

struct HabiroArgs {
  long level = 1;
  std::string poly;
  long n = 1;
  long order = 1;
  long numer = 1;
  long k = 1;
  long to = 1;
  std::string poly2;
};

void add_habiro(CLI::App& app, GlobalOpts& g, int& rc) {
  auto args = std::make_shared<HabiroArgs>();
  auto* h = app.add_subcommand("habiro", "Truncated Habiro-ring engine");
  h->require_subcommand(1);

  auto with_level = [&](CLI::App* s, bool need_poly) {
    s->add_option("--level", args->level, "Truncation level N")->required();
    auto* p = s->add_option("--poly", args->poly, "Representative polynomial");
    if (need_poly) p->required();
    return s;
  };

  auto* nf = with_level(h->add_subcommand("normal-form",
                                          "Expand in the (q)_m block basis"),
                        true);
  nf->callback([args, &g, &rc] {
    const HabiroElement a(args->level, parse_poly(args->poly));
    const HabiroNormalForm f = normal_form(a);
    json out = normal_form_json(f);
    out["element"] = habiro_json(a);
    out["roundtrip"] = from_normal_form(f) == a;
    emit(g, out);
    rc = 0;
  });

  auto* ev = with_level(h->add_subcommand("eval-n", "Residue mod q^n - 1"), true);
  ev->add_option("--n", args->n, "Evaluation order")->required();
  ev->callback([args, &g, &rc] {
    const HabiroElement a(args->level, parse_poly(args->poly));
    const IntPoly v = ev_n(a, args->n);
    emit(g, json{{"n", args->n},
                 {"value", format_poly(v)},
                 {"pretty", pretty_poly(v)}});
    rc = 0;
  });

  auto* ez = with_level(h->add_subcommand("eval-zeta", "Value in Z[zeta]"), true);
  ez->add_option("--order", args->order, "Root order")->required();
  ez->add_option("--numer", args->numer, "Root numerator (default 1)");
  ez->callback([args, &g, &rc] {
    const HabiroElement a(args->level, parse_poly(args->poly));
    emit(g, cyclotomic_json(ev_zeta(a, RootOfUnity(args->order, args->numer))));
    rc = 0;
  });

  auto* ty = with_level(h->add_subcommand("taylor", "Taylor coefficients at zeta"),
                        true);
  ty->add_option("--order", args->order, "Root order")->required();
  ty->add_option("--numer", args->numer, "Root numerator (default 1)");
  ty->add_option("--K", args->k, "Number of coefficients")->required();
  ty->callback([args, &g, &rc] {
    const HabiroElement a(args->level, parse_poly(args->poly));
    const auto coeffs =
        taylor_zeta(a, RootOfUnity(args->order, args->numer), args->k);
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(cyclotomic_json(c));
    emit(g, json{{"order", args->order}, {"coefficients", arr}});
    rc = 0;
  });

  auto* fr = with_level(h->add_subcommand("frobenius", "Substitution q -> q^n"),
                        true);
  fr->add_option("--n", args->n, "Power")->required();
  fr->callback([args, &g, &rc] {
    const HabiroElement a(args->level, parse_poly(args->poly));
    emit(g, habiro_json(frobenius(a, args->n)));
    rc = 0;
  });

  auto* il = with_level(h->add_subcommand("invert-L",
                                          "Multiplicative inverse of q"),
                        false);
  il->callback([args, &g, &rc] {
    const HabiroElement inv = inverse_lefschetz(args->level);
    const HabiroElement q(args->level, IntPoly::monomial(1, Int(1)));
    const bool verified =
        habiro_mul(q, inv) == HabiroElement(args->level, IntPoly(Int(1)));
    json out = habiro_json(inv);
    out["identity_verified"] = verified;
    emit(g, out);
    rc = verified ? 0 : 1;
  });

  auto* pr = with_level(h->add_subcommand("project", "Project to a lower level"),
                        true);
  pr->add_option("--to", args->to, "Target level")->required();
  pr->callback([args, &g, &rc] {
    const HabiroElement a(args->level, parse_poly(args->poly));
    emit(g, habiro_json(habiro_project(a, args->to)));
    rc = 0;
  });

  for (const char* name : {"add", "mul"}) {
    auto* bin = with_level(
        h->add_subcommand(name, std::string("Ring ") + name + " at one level"),
        true);
    bin->add_option("--poly2", args->poly2, "Second operand")->required();
    const bool is_mul = std::string(name) == "mul";
    bin->callback([args, &g, &rc, is_mul] {
      const HabiroElement a(args->level, parse_poly(args->poly));
      const HabiroElement b(args->level, parse_poly(args->poly2));
      emit(g, habiro_json(is_mul ? habiro_mul(a, b) : habiro_add(a, b)));
      rc = 0;
    });
  }
}

// ---------------------------------------------------------------- class ----

struct ClassArgs {
  std::string cls;
  std::string coeffs, coeffs2;
  long k = 1;
  std::string x = "2";
};

void add_class(CLI::App& app, GlobalOpts& g, int& rc) {
  auto args = std::make_shared<ClassArgs>();
  auto* c = app.add_subcommand("class", "Grothendieck-class arithmetic");
  c->require_subcommand(1);

  auto* torus = c->add_subcommand("torus", "Expand in the torus basis T = L-1");
  torus->add_option("--class", args->cls, "Laurent polynomial in L")->required();
  torus->callback([args, &g, &rc] {
    const auto basis = to_torus_basis(GrothClass(parse_laurent(args->cls)));
    bool nonneg = true;
    for (const auto& [k, v] : basis)
      if (v < 0) nonneg = false;
    emit(g, json{{"coefficients", coeff_map_json(basis)},
                 {"nonnegative", nonneg}});
    rc = 0;
  });

  auto* ft = c->add_subcommand("from-torus", "Reassemble from torus coefficients");
  ft->add_option("--coeffs", args->coeffs, "k:c;... torus coefficients")
      ->required();
  ft->callback([args, &g, &rc] {
    const GrothClass cls = from_torus_basis(coeff_map_of(args->coeffs));
    emit(g, json{{"class", format_laurent(cls.value())},
                 {"pretty", pretty_laurent(cls.value(), "L")}});
    rc = 0;
  });

  auto* du = c->add_subcommand("dual", "Substitute L -> -L");
  du->add_option("--class", args->cls, "Laurent polynomial in L")->required();
  du->callback([args, &g, &rc] {
    const GrothClass d = dual_class(GrothClass(parse_laurent(args->cls)));
    emit(g, json{{"class", format_laurent(d.value())},
                 {"pretty", pretty_laurent(d.value(), "L")}});
    rc = 0;
  });

  auto* pu = c->add_subcommand("punctured", "Torus decomposition of A^k - 0");
  pu->add_option("--k", args->k, "Dimension")->required();
  pu->callback([args, &g, &rc] {
    emit(g, json{{"coefficients",
                  coeff_map_json(torify_punctured_affine(args->k).counts)}});
    rc = 0;
  });

  auto* prod = c->add_subcommand("product",
                                 "Convolve two torus decompositions");
  prod->add_option("--coeffs", args->coeffs, "First decomposition")->required();
  prod->add_option("--coeffs2", args->coeffs2, "Second decomposition")
      ->required();
  prod->callback([args, &g, &rc] {
    const TorusDecomposition a{coeff_map_of(args->coeffs)};
    const TorusDecomposition b{coeff_map_of(args->coeffs2)};
    emit(g, json{{"coefficients",
                  coeff_map_json(product_decomposition(a, b).counts)}});
    rc = 0;
  });

  auto* cnt = c->add_subcommand("count", "Counting polynomial value N(x)");
  cnt->add_option("--class", args->cls, "Polynomial class in L")->required();
  cnt->add_option("--x", args->x, "Evaluation point (integer)");
  cnt->callback([args, &g, &rc] {
    const GrothClass cls(parse_laurent(args->cls));
    const Int v = cls.count(parse_int(args->x));
    emit(g, json{{"x", args->x}, {"count", to_dec(v)}});
    rc = 0;
  });
}

// ----------------------------------------------------------------- tate ----

struct TateArgs {
  std::string cls;
  std::string poly, poly2;
  long n = 1;
  long order = 1, order2 = 1;
  long period = 1;
  long num = 1, den = 1;
};

void add_tate(CLI::App& app, GlobalOpts& g, int& rc) {
  auto args = std::make_shared<TateArgs>();
  auto* t = app.add_subcommand("tate", "Tate-root and orbit classes");
  t->require_subcommand(1);

  auto* root = t->add_subcommand("root", "Adjoin an n-th root of L");
  root->add_option("--class", args->cls, "Effective class in L")->required();
  root->add_option("--n", args->n, "Root order")->required();
  root->callback([args, &g, &rc] {
    try {
      emit(g, tate_json(tate_root(GrothClass(parse_laurent(args->cls)), args->n)));
      rc = 0;
    } catch (const NoF1StructureError& e) {
      emit(g, json{{"error", e.what()},
                   {"exponent", e.exponent},
                   {"coefficient", to_dec(e.coefficient)}});
      rc = 1;
    }
  });

  auto* integ = t->add_subcommand("integral", "Test membership in Z[L, 1/L]");
  integ->add_option("--order", args->order, "Root order")->required();
  integ->add_option("--poly", args->poly, "Laurent polynomial in t")->required();
  integ->callback([args, &g, &rc] {
    const TateRootClass c(args->order, parse_laurent(args->poly));
    const IntegralityResult r = is_integral(c);
    json out = {{"integral", r.integral}};
    if (r.fractional_exponent)
      out["fractional_exponent"] = *r.fractional_exponent;
    out["root_order"] = c.root_order();
    if (r.integral) out["class"] = format_laurent(to_groth(c).value());
    emit(g, out);
    rc = r.integral ? 0 : 1;
  });

  auto* red = t->add_subcommand("reduce", "Orbit reduction mod L^period = 1");
  red->add_option("--class", args->cls, "Laurent polynomial in L")->required();
  red->add_option("--period", args->period, "Period")->required();
  red->callback([args, &g, &rc] {
    const OrbitClass o =
        orbit_reduce(GrothClass(parse_laurent(args->cls)), args->period);
    emit(g, json{{"modulus", o.modulus()}, {"value", format_poly(o.value())}});
    rc = 0;
  });

  auto* rs = t->add_subcommand("rescale", "Substitute L -> L^(num/den)");
  rs->add_option("--order", args->order, "Root order")->required();
  rs->add_option("--poly", args->poly, "Laurent polynomial in t")->required();
  rs->add_option("--num", args->num, "Numerator")->required();
  rs->add_option("--den", args->den, "Denominator")->required();
  rs->callback([args, &g, &rc] {
    const TateRootClass c(args->order, parse_laurent(args->poly));
    emit(g, tate_json(rescale(c, args->num, args->den)));
    rc = 0;
  });

  auto* mu = t->add_subcommand("mul", "Product in the common refinement");
  mu->add_option("--order", args->order, "First root order")->required();
  mu->add_option("--poly", args->poly, "First value")->required();
  mu->add_option("--order2", args->order2, "Second root order")->required();
  mu->add_option("--poly2", args->poly2, "Second value")->required();
  mu->callback([args, &g, &rc] {
    const TateRootClass a(args->order, parse_laurent(args->poly));
    const TateRootClass b(args->order2, parse_laurent(args->poly2));
    emit(g, tate_json(rational_power_mul(a, b)));
    rc = 0;
  });
}

// --------------------------------------------------------------- family ----

struct FamilyArgs {
  std::string family = "gl";
  long j = 0;
  long m = 1;
  long cutoff = 0;
  long nmin = 1, nmax = 10;
  std::optional<long> cutoff_override;
  long order = 10;
  std::string route = "hyper";
  long n = 1;
  std::string cond = "f1";
  long k = 1;
  long l = 1;
  long agg = 4;
};

void add_family(CLI::App& app, GlobalOpts& g, int& rc) {
  auto args = std::make_shared<FamilyArgs>();
  auto* f = app.add_subcommand("family", "Worked example families");
  f->require_subcommand(1);

  const auto family_names = CLI::IsMember(
      {"gl", "carlitz", "sigma", "sigma-star", "kontsevich"});

  auto* term = f->add_subcommand("term", "j-th summand of the counting series");
  term->add_option("--family", args->family)->required()->check(family_names);
  term->add_option("--j", args->j, "Index")->required();
  term->callback([args, &g, &rc] {
    const IntPoly p = family_term(family_from_name(args->family), args->j);
    emit(g, json{{"term", format_poly(p)}, {"pretty", pretty_poly(p)}});
    rc = 0;
  });

  auto* cls = f->add_subcommand("class", "Layer class (gl or carlitz)");
  cls->add_option("--family", args->family)
      ->required()
      ->check(CLI::IsMember({"gl", "carlitz"}));
  cls->add_option("--m", args->m, "Layer index")->required();
  cls->callback([args, &g, &rc] {
    const GrothClass c = args->family == "gl" ? gl_class(args->m)
                                              : carlitz_class(args->m);
    emit(g, json{{"class", format_laurent(c.value())},
                 {"pretty", pretty_laurent(c.value(), "L")}});
    rc = 0;
  });

  auto* ps = f->add_subcommand("partial-sum", "Truncated counting series");
  ps->add_option("--family", args->family)->required()->check(family_names);
  ps->add_option("--cutoff", args->cutoff, "Last summand index")->required();
  ps->callback([args, &g, &rc] {
    const IntPoly p =
        family_partial_sum(family_from_name(args->family), args->cutoff);
    emit(g, json{{"partial_sum", format_poly(p)}, {"pretty", pretty_poly(p)}});
    rc = 0;
  });

  auto* sg = f->add_subcommand("signs", "Sign table against the claims");
  sg->add_option("--family", args->family)->required()->check(family_names);
  sg->add_option("--nmin", args->nmin, "First order (default 1)");
  sg->add_option("--nmax", args->nmax, "Last order")->required();
  auto* ov = sg->add_option("--cutoff", args->cutoff, "Cutoff override");
  sg->callback([args, &g, &rc, ov] {
    std::optional<long> cut;
    if (ov->count() > 0) cut = args->cutoff;
    const auto rows = sign_table(family_from_name(args->family), args->nmin,
                                 args->nmax, g.conv(), cut, g.threads);
    if (g.csv_out || !g.json_out)
      std::cout << sign_table_csv(rows);
    else
      std::cout << sign_rows_json(rows).dump(2) << "\n";
    rc = 0;
  });

  auto* se = f->add_subcommand("series", "q-series expansion");
  se->add_option("--family", args->family)
      ->required()
      ->check(CLI::IsMember({"sigma", "sigma-star"}));
  se->add_option("--order", args->order, "Truncation order")->required();
  se->add_option("--route", args->route, "hyper or product")
      ->check(CLI::IsMember({"hyper", "product"}));
  se->callback([args, &g, &rc] {
    const bool star = args->family == "sigma-star";
    const bool hyper = args->route == "hyper";
    const PowerSeriesTrunc s =
        star ? (hyper ? sigma_star_series_hypergeometric(args->order)
                      : sigma_star_series_product_form(args->order))
             : (hyper ? sigma_series_hypergeometric(args->order)
                      : sigma_series_product_form(args->order));
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_dec(c));
    emit(g, json{{"order", s.order()},
                 {"coefficients", coeffs},
                 {"pretty", pretty_poly(s.to_poly())}});
    rc = 0;
  });

  auto* ic = f->add_subcommand("ind-check", "Ind-family structure check");
  ic->add_option("--family", args->family)
      ->required()
      ->check(CLI::IsMember({"gl", "sigma"}));
  ic->add_option("--n", args->n, "Truncation order")->required();
  ic->add_option("--cond", args->cond, "f1 or fzeta")
      ->check(CLI::IsMember({"f1", "fzeta"}));
  ic->callback([args, &g, &rc] {
    const IndFamilySpec spec = ind_spec(family_from_name(args->family));
    const ConditionReport rep = args->cond == "f1"
                                    ? check_ind_f1(spec, args->n)
                                    : check_ind_fzeta(spec, args->n, g.conv());
    rc = report_and_code(g, rep);
  });

  auto* pi = f->add_subcommand("pair-identity", "Kontsevich pairing identity");
  pi->add_option("--k", args->k, "Pair index")->required();
  pi->callback([args, &g, &rc] {
    const PairIdentity id = kontsevich_pair_identity(args->k);
    emit(g, json{{"lhs", format_poly(id.lhs)},
                 {"rhs", format_poly(id.rhs)},
                 {"equal", id.equal}});
    rc = id.equal ? 0 : 1;
  });

  auto* pc = f->add_subcommand("pair-class", "Pair class vs published display");
  pc->add_option("--l", args->l, "Pair index")->required();
  pc->callback([args, &g, &rc] {
    const PairClassDiff d = sigma_star_pair_class(args->l);
    emit(g, json{{"computed", coeff_map_json(d.computed)},
                 {"display", coeff_map_json(d.display)},
                 {"diff", coeff_map_json(d.diff)}});
    rc = 0;
  });

  auto* ag = f->add_subcommand("aggregate",
                               "Constructible check of the Kontsevich truncation");
  ag->add_option("--N", args->agg, "Cutoff")->required();
  ag->callback([args, &g, &rc] {
    rc = report_and_code(g, check_constructible_f1(
                                kontsevich_aggregate_group(args->agg)));
  });
}

// --------------------------------------------------------------- oracle ----

struct OracleArgs {
  int m = 1;
  long p = 2;
  std::string matrix;
  int n = 1;
  int j = 0;
};

void add_oracle(CLI::App& app, GlobalOpts& g, int& rc) {
  auto args = std::make_shared<OracleArgs>();
  auto* o = app.add_subcommand("oracle", "Brute-force finite-field counts");
  o->require_subcommand(1);

  auto emit_count = [&g, &rc](const std::string& what, json params,
                              std::uint64_t count) {
    if (g.json_out) {
      params["oracle"] = what;
      params["count"] = count;
      std::cout << params.dump(2) << "\n";
    } else {
      std::cout << count << "\n";
    }
    rc = 0;
  };

  auto* gl = o->add_subcommand("gl", "Invertible m x m matrices over F_p");
  gl->add_option("--m", args->m)->required();
  gl->add_option("--p", args->p)->required();
  gl->callback([args, emit_count] {
    emit_count("gl", {{"m", args->m}, {"p", args->p}},
               count_gl(args->m, args->p));
  });

  auto* me = o->add_subcommand("mateq", "Solutions of X^T A X = A over F_p");
  me->add_option("--A", args->matrix, "Square matrix 'a,b;c,d'")->required();
  me->add_option("--p", args->p)->required();
  me->callback([args, emit_count] {
    emit_count("mateq", {{"A", args->matrix}, {"p", args->p}},
               count_matrix_equation(parse_matrix(args->matrix), args->p));
  });

  auto* pj = o->add_subcommand("projective", "Points of P^n over F_p");
  pj->add_option("--n", args->n)->required();
  pj->add_option("--p", args->p)->required();
  pj->callback([args, emit_count] {
    emit_count("projective", {{"n", args->n}, {"p", args->p}},
               count_projective(args->n, args->p));
  });

  auto* gr = o->add_subcommand("grass", "j-planes in F_p^n");
  gr->add_option("--n", args->n)->required();
  gr->add_option("--j", args->j)->required();
  gr->add_option("--p", args->p)->required();
  gr->callback([args, emit_count] {
    emit_count("grass", {{"n", args->n}, {"j", args->j}, {"p", args->p}},
               count_grassmannian(args->n, args->j, args->p));
  });
}

// --------------------------------------------------------------- verify ----

void add_verify(CLI::App& app, GlobalOpts& g, int& rc) {
  auto target = std::make_shared<std::string>();
  auto opt = std::make_shared<cli::VerifyOptions>();
  auto out_path = std::make_shared<std::string>();

  auto* v = app.add_subcommand("verify", "Named verification targets");
  v->add_option("target", *target, "Target name")
      ->required()
      ->check(CLI::IsMember(cli::verify_targets()));
  v->add_option("--nmax", opt->nmax, "Sign-table range (default 40)");
  v->add_option("--kmax", opt->kmax, "Pairing-identity range (default 25)");
  v->add_option("--lmax", opt->lmax, "Pair-class range (default 4)");
  v->add_option("--series-order", opt->series_order,
                "Series agreement order (default 40)");
  v->add_option("--level-max", opt->level_max,
                "Inversion-identity levels (default 10)");
  v->add_option("--out", *out_path, "Write the manifest JSON to a file");

  v->callback([target, opt, out_path, &g, &rc] {
    opt->convention = g.conv();
    opt->threads = g.threads;
    const cli::RunManifest m = cli::run_verify(*target, *opt);
    const json mj = m.to_json();
    if (!out_path->empty()) {
      std::ofstream out(*out_path);
      if (!out) throw std::invalid_argument("cannot write " + *out_path);
      out << mj.dump(2) << "\n";
    }
    if (g.json_out) {
      std::cout << mj.dump(2) << "\n";
    } else {
      for (const auto& c : m.checks) {
        std::string tag = c.status == "pass" ? "PASS"
                          : c.status == "fail" ? "FAIL"
                                               : "INFO";
        std::cout << "[" << tag << "] " << c.name << " ("
                  << static_cast<long>(c.elapsed_ms) << " ms)\n";
      }
      std::cout << "verdict: " << (m.pass ? "pass" : "fail") << "\n";
    }
    rc = m.pass ? 0 : 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fzeta: exact structure conditions, Habiro-ring truncations, and "
      "finite-field oracles for counting polynomials"};
  app.require_subcommand(1);

  GlobalOpts g;
  int rc = 0;
  app.add_flag("--json", g.json_out, "Machine-readable JSON output");
  app.add_flag("--csv", g.csv_out, "CSV output (sign tables)");
  app.add_option("--eval-point-convention", g.convention,
                 "Evaluation point for order n")
      ->check(CLI::IsMember({"one-minus-n", "minus-n"}));
  app.add_option("--threads", g.threads, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber);

  add_check(app, g, rc);
  add_habiro(app, g, rc);
  add_class(app, g, rc);
  add_tate(app, g, rc);
  add_family(app, g, rc);
  add_oracle(app, g, rc);
  add_verify(app, g, rc);

  // Let the global flags (--json, --threads, ...) appear after a subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* s : a->get_subcommands(nullptr)) {
      s->fallthrough();
      enable_fallthrough(s);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fzeta::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fzeta::cli::kExitUsage;
  }
  return rc;
}
