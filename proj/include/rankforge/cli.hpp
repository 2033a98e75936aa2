#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "database.hpp"
#include "prover.hpp"

namespace rankforge::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::int64_t p = 0, m = 0, d = 1, a = 1, nmax = 20;
  std::optional<std::int64_t> terms;
  std::string out, format = "tsv", id, file;
  bool unsafe = false, expansion = false, allow_underdetermined = false, ignore_zeros = false, verify = false;
};

namespace detail {

inline std::vector<Identity> load_identities(const Options& o) {
  if (o.id.empty() == o.file.empty()) throw UsageError("give exactly one of --id or --file");
  if (!o.id.empty()) return find_builtin(o.id);
  std::ifstream in(o.file);
  if (!in) throw UsageError("cannot read " + o.file);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(o.file + ": " + e.what());
  }
  std::vector<Identity> out;
  const nlohmann::json* list = &j;
  if (j.is_object() && j.contains("identities")) list = &j["identities"];
  try {
    if (list->is_array())
      for (const auto& e : *list) out.push_back(identity_from_json(e));
    else if (list->is_object() && list->contains("identity"))
      out.push_back(identity_from_json((*list)["identity"]));
    else
      out.push_back(identity_from_json(*list));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(o.file + ": " + e.what());
  }
  if (out.empty()) throw UsageError(o.file + " holds no identities");
  return out;
}

inline void require_format(const Options& o) {
  if (o.format != "tsv" && o.format != "json") throw UsageError("--format must be tsv or json");
}

inline std::string cert_summary(const Certificate& c) {
  std::ostringstream s;
  s << c.id << "\tp=" << c.p << "\tm=" << c.m << "\t" << to_string(c.verdict);
  if (c.report) s << "\tB=" << c.report->B.get_str() << "\tR=" << c.report->R.get_str();
  s << "\tterms=" << c.terms << "\tcompared=" << c.compared;
  return s.str();
}

inline void mismatch_diag(const Certificate& c, std::ostream& err) {
  if (!c.mismatch) return;
  err << c.id << ": first mismatch at q^" << rat_to_string(c.mismatch->exponent) << ": lhs " << c.mismatch->lhs.to_string()
      << ", rhs " << c.mismatch->rhs.to_string() << "\n";
}

inline bool cert_ok(const Certificate& c) {
  return c.verdict == Verdict::proved || (!c.valence && c.verdict == Verdict::matched_to_depth);
}

inline VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.valence = !o.expansion;
  v.terms = o.terms;
  v.unsafe = o.unsafe;
  return v;
}

inline int cmd_rank_table(const Options& o, std::ostream& out) {
  require_format(o);
  if (o.nmax < 0) throw UsageError("--nmax must be non-negative");
  const RankTable t = rank_table(o.nmax);
  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (std::int64_t n = 0; n <= o.nmax; ++n)
      for (std::int64_t m = -n; m <= n; ++m)
        if (sgn(t.at(m, n)) != 0) j.push_back({{"n", n}, {"m", m}, {"N", t.at(m, n).get_str()}});
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "n\tm\tN\n";
  for (std::int64_t n = 0; n <= o.nmax; ++n)
    for (std::int64_t m = -n; m <= n; ++m)
      if (sgn(t.at(m, n)) != 0) out << n << "\t" << m << "\t" << t.at(m, n).get_str() << "\n";
  return kOk;
}

inline int cmd_dissect(const Options& o, std::ostream& out) {
  require_format(o);
  require_prime(o.p);
  if (o.m < 0 || o.m >= o.p) throw UsageError("--m must satisfy 0 <= m < p");
  if (mod_floor(o.d, o.p) == 0) throw UsageError("--d must be prime to p");
  const std::int64_t T = o.terms.value_or(20);
  if (T < 1) throw UsageError("--terms must be positive");
  const CycSeries s = k_series(o.p, o.m, o.d, Rat(T));
  if (o.format == "json") {
    nlohmann::json j{{"p", o.p}, {"m", o.m}, {"d", o.d}, {"terms", T}, {"class", to_string(classify(o.p, o.m).kind)}};
    j["coefficients"] = nlohmann::json::array();
    for (const auto& [e, c] : s.terms())
      j["coefficients"].push_back({{"exponent", rat_to_string(make_rat(e, s.denom()))}, {"coeff", to_json(c)}});
    j["bound"] = rat_to_string(s.bound_rat());
    out << j.dump(2) << "\n";
  } else {
    s.dump(out);
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o);
  const auto ids = load_identities(o);
  for (const auto& id : ids)
    if (!id.complete()) throw UsageError(id.id + " has unknown coefficients; use solve");
  auto certs = parallel_map<Certificate>(ids.size(), [&](std::size_t i) { return verify_identity(ids[i], verify_options(o)); });
  bool ok = true;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : certs) {
    ok = ok && cert_ok(c);
    mismatch_diag(c, err);
    if (o.format == "json")
      j.push_back(to_json(c));
    else
      out << cert_summary(c) << "\n";
  }
  if (o.format == "json") out << (certs.size() == 1 ? j[0] : j).dump(2) << "\n";
  return ok ? kOk : kFailed;
}

inline int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ids = load_identities(o);
  if (ids.size() != 1) throw UsageError("solve takes a single identity; pick one with --id name:mK");
  SolveOptions so;
  so.terms = o.terms;
  so.allow_underdetermined = o.allow_underdetermined;
  so.use_zero_terms = !o.ignore_zeros;
  SolveResult res;
  try {
    res = solve_coefficients(ids[0], so);
  } catch (const SolveError& e) {
    err << ids[0].id << ": " << e.what() << "\n";
    return kFailed;
  }
  Certificate cert = verify_identity(res.identity);
  mismatch_diag(cert, err);
  nlohmann::json j;
  j["identity"] = to_json(res.identity);
  j["solve"] = {{"terms", res.terms}, {"equations", res.equations}, {"unknowns", res.unknowns}, {"rank", res.rank}};
  j["certificate"] = to_json(cert);
  out << j.dump(2) << "\n";
  return cert.verdict == Verdict::proved ? kOk : kFailed;
}

inline int cmd_symmetry(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ids = load_identities(o);
  nlohmann::json j = nlohmann::json::array();
  bool ok = true;
  for (const auto& id : ids) {
    Identity g = symmetry_generate(id, o.a);
    nlohmann::json e{{"identity", to_json(g)}};
    if (o.verify) {
      Certificate c = verify_identity(g, verify_options(o));
      mismatch_diag(c, err);
      ok = ok && cert_ok(c);
      e["certificate"] = to_json(c);
    }
    j.push_back(e);
  }
  out << (ids.size() == 1 ? j[0] : j).dump(2) << "\n";
  return ok ? kOk : kFailed;
}

inline int cmd_kp0(const Options& o, std::ostream& out) {
  require_format(o);
  const auto ids = load_identities(o);
  bool ok = true;
  nlohmann::json j = nlohmann::json::array();
  if (o.format == "tsv") out << "id\tgroup\tlabel\td\textracted\tpredicted\tpass\n";
  for (const auto& id : ids) {
    const Kp0SymmetryReport rep = kp0_coefficient_symmetry(id);
    ok = ok && rep.pass();
    for (const auto& r : rep.rows) {
      const std::string ex = r.extracted ? std::to_string(*r.extracted) : "none";
      if (o.format == "tsv")
        out << id.id << "\t" << r.group << "\t" << r.label << "\t" << r.d << "\t" << ex << "\t" << r.predicted << "\t"
            << (r.pass ? "yes" : "no") << "\n";
      else
        j.push_back({{"id", id.id},
                     {"group", r.group},
                     {"label", r.label},
                     {"d", r.d},
                     {"extracted", r.extracted ? nlohmann::json(*r.extracted) : nlohmann::json(nullptr)},
                     {"predicted", r.predicted},
                     {"pass", r.pass}});
    }
  }
  if (o.format == "json") out << j.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

// whole numbers without the "/1"
inline std::string cell(const Rat& r) { return r.get_den() == 1 ? r.get_num().get_str() : rat_to_string(r); }

inline void cusp_tsv(const CuspReport& r, std::ostream& out) {
  out << "term";
  for (const auto& c : r.cusps) out << "\t" << c.label();
  out << "\n";
  for (const auto& row : r.rows) {
    out << row.label;
    for (const auto& v : row.ord) out << "\t" << cell(v);
    out << "\n";
  }
  auto opt_row = [&](const char* name, const auto& vals) {
    out << name;
    for (const auto& v : vals) {
      out << "\t";
      if (!v)
        out << "-";
      else if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, Rat>)
        out << cell(*v);
      else
        out << v->get_str();
    }
    out << "\n";
  };
  opt_row("lambda", r.lambda);
  opt_row("lambda_adjusted", r.lambda_adj);
  opt_row("column_min", r.column_min);
  out << "j0\t" << (r.j0 ? std::to_string(*r.j0) : std::string("-")) << "\n";
  out << "B\t" << r.B.get_str() << "\n";
  out << "mu_k_over_12\t" << cell(r.mu_k_12) << "\n";
  out << "R\t" << r.R.get_str() << "\n";
  out << "depth\t" << cell(r.depth) << "\n";
}

inline int cmd_cusp_report(const Options& o, std::ostream& out) {
  require_format(o);
  const auto ids = load_identities(o);
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const CuspReport r = cusp_report(ids[i]);
    if (o.format == "json") {
      nlohmann::json e = to_json(r);
      e["id"] = ids[i].id;
      j.push_back(e);
    } else {
      if (i > 0) out << "\n";
      out << "# " << ids[i].id << "\n";
      cusp_tsv(r, out);
    }
  }
  if (o.format == "json") out << (ids.size() == 1 ? j[0] : j).dump(2) << "\n";
  return kOk;
}

inline int cmd_dyson(const Options& o, std::ostream& out) {
  if (o.p != 5 && o.p != 7) throw UsageError("dyson-check needs --p 5 or --p 7");
  if (o.nmax < 0) throw UsageError("--nmax must be non-negative");
  const DysonReport r = dyson_check(o.p, o.nmax);
  out << "p=" << r.p << "\tprogression=" << r.p << "n+" << r.r << "\tnmax=" << r.nmax << "\t";
  if (r.pass)
    out << "pass\n";
  else
    out << "fail at n=" << r.n << " k=" << r.k << "\n";
  return r.pass ? kOk : kFailed;
}

inline int cmd_list(const Options& o, std::ostream& out) {
  require_format(o);
  nlohmann::json j = nlohmann::json::array();
  if (o.format == "tsv") out << "id\tkind\tp\tm\tterms\tprovenance\n";
  for (const auto& e : builtin_database())
    for (const auto& id : e.identities) {
      if (o.format == "tsv")
        out << id.id << "\t" << e.kind << "\t" << id.p << "\t" << id.m << "\t" << id.terms.size() << "\t"
            << id.provenance << "\n";
      else
        j.push_back({{"id", id.id}, {"kind", e.kind}, {"p", id.p}, {"m", id.m}, {"terms", id.terms.size()},
                     {"provenance", id.provenance}});
    }
  if (o.format == "json") out << j.dump(2) << "\n";
  return kOk;
}

}  // namespace detail

// argv without the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyson rank dissections and eta-quotient identity certification", "rankforge"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* s) {
    s->add_option("--out", o.out, "write output to this file");
    s->add_option("--format", o.format, "tsv or json");
  };
  auto add_source = [&](CLI::App* s) {
    s->add_option("--id", o.id, "built-in identity (see list-identities)");
    s->add_option("--file", o.file, "identity JSON file");
  };
  auto add_terms = [&](CLI::App* s) { s->add_option("--terms", o.terms, "compare coefficients below q^terms"); };

  auto* rank = app.add_subcommand("rank-table", "N(m,n) for n <= nmax");
  rank->add_option("--nmax", o.nmax)->required();
  add_out(rank);

  auto* dissect = app.add_subcommand("dissect", "expansion of K_{p,m}(zeta_p^d, z)");
  dissect->add_option("--p", o.p)->required();
  dissect->add_option("--m", o.m)->required();
  dissect->add_option("--d", o.d);
  add_terms(dissect);
  add_out(dissect);

  auto* verify = app.add_subcommand("verify", "certify identities by the valence formula");
  add_source(verify);
  add_terms(verify);
  verify->add_flag("--unsafe", o.unsafe, "allow --terms below the valence requirement");
  verify->add_flag("--expansion", o.expansion, "compare expansions only, no valence bound");
  add_out(verify);

  auto* solve = app.add_subcommand("solve", "solve for identity coefficients, then certify");
  add_source(solve);
  add_terms(solve);
  solve->add_flag("--allow-underdetermined", o.allow_underdetermined, "set free unknowns to zero");
  solve->add_flag("--ignore-zeros", o.ignore_zeros, "treat known-zero terms as unknowns");
  add_out(solve);

  auto* sym = app.add_subcommand("symmetry-generate", "image of an identity under zeta -> zeta^a");
  add_source(sym);
  sym->add_option("--a", o.a)->required();
  sym->add_flag("--verify", o.verify, "certify the generated identity");
  sym->add_flag("--expansion", o.expansion, "with --verify: compare expansions only");
  add_terms(sym);
  sym->add_flag("--unsafe", o.unsafe);
  add_out(sym);

  auto* kp0 = app.add_subcommand("kp0-symmetry", "coefficient symmetry of an m = 0 identity");
  add_source(kp0);
  add_out(kp0);

  auto* cusp = app.add_subcommand("cusp-report", "orders at cusps, bounds and the valence budget");
  add_source(cusp);
  add_out(cusp);

  auto* dyson = app.add_subcommand("dyson-check", "equidistribution of ranks in 5n+4 or 7n+5");
  dyson->add_option("--p", o.p)->required();
  dyson->add_option("--nmax", o.nmax);
  add_out(dyson);

  auto* list = app.add_subcommand("list-identities", "built-in identities");
  add_out(list);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostringstream buffer;
  std::ostream& sink = o.out.empty() ? out : static_cast<std::ostream&>(buffer);
  int code = kOk;
  try {
    if (*rank)
      code = detail::cmd_rank_table(o, sink);
    else if (*dissect)
      code = detail::cmd_dissect(o, sink);
    else if (*verify)
      code = detail::cmd_verify(o, sink, err);
    else if (*solve)
      code = detail::cmd_solve(o, sink, err);
    else if (*sym)
      code = detail::cmd_symmetry(o, sink, err);
    else if (*kp0)
      code = detail::cmd_kp0(o, sink);
    else if (*cusp)
      code = detail::cmd_cusp_report(o, sink);
    else if (*dyson)
      code = detail::cmd_dyson(o, sink);
    else
      code = detail::cmd_list(o, sink);
  } catch (const InsufficientDepth& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace rankforge::cli
