#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "repring/repring.hpp"

namespace repring::cli {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

inline Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

inline Json envelope(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

inline std::string combination_to_string(const WordCombination& c) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const auto& [w, k] = *it;
    std::string word = word_to_string(w);
    Integer a = abs(k);
    if (first) {
      if (k < 0) s += "-";
    } else {
      s += k < 0 ? " - " : " + ";
    }
    if (a != 1 || word == "1") {
      s += a.get_str();
      if (word != "1") s += "*";
    }
    if (word != "1") s += word;
    first = false;
  }
  return s;
}

inline void emit(std::ostream& out, const Json& j, bool json, const std::string& text) {
  if (json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

struct Config {
  std::string group, lhs, rhs, label, relation, word, strategy = "fixed", format, only, data_dir, which = "all";
  int n = 3, m = 1, cap = 4, rmax = 12;
  bool rmax_set = false;
  std::uint64_t seed = 20240601;
};

inline int cmd_tensor(const Config& c, std::ostream& out) {
  GroupSpec g = parse_group(c.group);
  RepLabel a = parse_label(g, c.lhs), b = parse_label(g, c.rhs);
  Decomposition dec = tensor_decompose(a, b);
  Integer sum = 0;
  Json d = Json::object();
  std::string text;
  for (const auto& [lab, mult] : dec) {
    sum += mult * dimension(lab);
    d[lab.to_string()] = integer_json(mult);
    text += lab.to_string() + "\t" + mult.get_str() + "\n";
  }
  Integer prod = dimension(a) * dimension(b);
  Json j = envelope("tensor");
  j["group"] = g.to_string();
  j["lhs"] = a.to_string();
  j["rhs"] = b.to_string();
  j["decomposition"] = d;
  j["dimension_check"] = {{"product", integer_json(prod)}, {"sum", integer_json(sum)}, {"ok", prod == sum}};
  text += "dim " + dimension(a).get_str() + " x " + dimension(b).get_str() + " = " + prod.get_str() + " = " +
          sum.get_str() + (prod == sum ? " ok" : " MISMATCH") + "\n";
  emit(out, j, c.format != "text", text);
  return prod == sum ? kOk : kVerifyFailed;
}

inline int cmd_char(const Config& c, std::ostream& out) {
  GroupSpec g = parse_group(c.group);
  RepLabel a = parse_label(g, c.label);
  ClassFunction f = class_function_of(a);
  Json j = envelope("char");
  j["group"] = g.to_string();
  j["label"] = a.to_string();
  j["dimension"] = integer_json(dimension(a));
  j["variables"] = torus_variable_names(so_part(g));
  j["character"] = f.on_y.to_string();
  std::string text = f.on_y.to_string() + "\n";
  if (f.on_z) {
    j["z_slice"] = f.on_z->to_string();
    text += "z-slice: " + f.on_z->to_string() + "\n";
  }
  emit(out, j, c.format != "text", text);
  return kOk;
}

inline int cmd_coc_express(const Config& c, std::ostream& out) {
  GroupSpec g = parse_group(c.group);
  RepLabel a = parse_label(g, c.label);
  auto x = CocElement::basis(a);
  auto p = express_in_generators(x);
  bool round_trip = evaluate_generators(p, g) == x;
  Json j = envelope("coc express");
  j["group"] = g.to_string();
  j["label"] = a.to_string();
  j["generators"] = generator_names(g);
  j["expression"] = p.to_string();
  j["round_trip"] = round_trip;
  emit(out, j, c.format != "text", p.to_string() + "\n");
  return round_trip ? kOk : kVerifyFailed;
}

inline int cmd_coc_verify(const Config& c, std::ostream& out) {
  GroupSpec g = parse_group(c.group);
  std::vector<std::string> ids = c.relation.empty() ? relation_ids(g) : std::vector<std::string>{c.relation};
  if (ids.empty()) throw usage_error("no relations to verify for " + g.to_string());
  Json j = envelope("coc verify");
  j["group"] = g.to_string();
  Json rels = Json::array();
  std::string text;
  bool all = true;
  for (const auto& id : ids) {
    auto rc = verify_relation(g, id);
    all = all && rc.holds;
    rels.push_back({{"id", rc.id}, {"statement", rc.statement}, {"holds", rc.holds}});
    text += rc.id + "\t" + rc.statement + "\t" + (rc.holds ? "true" : "false") + "\n";
  }
  j["relations"] = rels;
  emit(out, j, c.format != "text", text);
  return all ? kOk : kVerifyFailed;
}

inline int cmd_coc_independence(const Config& c, std::ostream& out) {
  GroupSpec g = parse_group(c.group);
  if (c.cap < 0) throw usage_error("--cap must be nonnegative");
  auto rep = independence_check(g, c.cap, c.seed);
  Json j = envelope("coc independence");
  j["group"] = g.to_string();
  j["cap"] = c.cap;
  j["seed"] = c.seed;
  j["monomials"] = rep.monomials;
  j["rank"] = rep.rank;
  j["exact_fallback"] = rep.exact_fallback;
  j["independent"] = rep.independent;
  emit(out, j, c.format != "text",
       "monomials\t" + std::to_string(rep.monomials) + "\nrank\t" + std::to_string(rep.rank) + "\nindependent\t" +
           (rep.independent ? "true" : "false") + "\n");
  return rep.independent ? kOk : kVerifyFailed;
}

inline int cmd_frt_normalform(const Config& c, std::ostream& out) {
  if (c.strategy != "fixed" && c.strategy != "random") throw usage_error("--strategy must be fixed or random");
  GenWord w = parse_word(c.word, c.n);
  auto strategy = c.strategy == "random" ? RewriteStrategy::Random : RewriteStrategy::Fixed;
  auto nf = bn_normal_form(w, c.n, strategy, c.seed);
  Json terms = Json::array();
  for (auto it = nf.rbegin(); it != nf.rend(); ++it) {
    terms.push_back({{"word", word_to_string(it->first)}, {"coefficient", integer_json(it->second)}});
  }
  Json j = envelope("frt normalform");
  j["n"] = c.n;
  j["word"] = word_to_string(w);
  j["degree"] = word_degree(w);
  j["normal_form"] = combination_to_string(nf);
  j["terms"] = terms;
  emit(out, j, c.format != "text", combination_to_string(nf) + "\n");
  return kOk;
}

inline Json hilbert_json(const GroupSpec& g, const std::vector<HilbertRow>& rows) {
  Json j = envelope("frt hilbert");
  j["group"] = g.to_string();
  j["numerator"] = [&] {
    auto gf = hilbert_closed(g);
    return upoly_to_string(gf.numerator);
  }();
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back({{"degree", r.degree},
                   {"closed_form", integer_json(r.closed_form)},
                   {"enumeration", integer_json(r.enumeration)},
                   {"peter_weyl", integer_json(r.peter_weyl)},
                   {"ok", r.ok()}});
  }
  j["rows"] = arr;
  return j;
}

inline int cmd_frt_hilbert(const Config& c, std::ostream& out) {
  GroupSpec g = parse_group(c.group);
  if (c.rmax < 0) throw usage_error("--rmax must be nonnegative");
  auto rows = hilbert_compare(g, c.rmax);
  bool all = std::all_of(rows.begin(), rows.end(), [](const HilbertRow& r) { return r.ok(); });
  emit(out, hilbert_json(g, rows), c.format == "json", hilbert_tsv(rows));
  return all ? kOk : kVerifyFailed;
}

inline int cmd_frt_witness(const Config& c, std::ostream& out) {
  auto [a, b] = zero_divisor_witness(c.n);
  auto prod = graded_mul(a, b);
  bool ok = !a.is_zero() && !b.is_zero() && prod.is_zero();
  Json j = envelope("frt witness");
  j["group"] = make_group(Family::O, c.n).to_string();
  j["lhs"] = a.to_string();
  j["rhs"] = b.to_string();
  j["product"] = prod.to_string();
  j["ok"] = ok;
  emit(out, j, c.format != "text",
       "lhs\t" + a.to_string() + "\nrhs\t" + b.to_string() + "\nproduct\t" + prod.to_string() + "\n");
  return ok ? kOk : kVerifyFailed;
}

inline int cmd_qtrace(const Config& c, std::ostream& out) {
  NCPoly tr = qtrace_omega(c.n, c.m);
  Json j = envelope("qtrace");
  j["n"] = c.n;
  j["m"] = c.m;
  j["qtrace"] = tr.to_string();
  emit(out, j, c.format != "text", tr.to_string() + "\n");
  return kOk;
}

inline int cmd_oq3(const Config& c, std::ostream& out) {
  if (c.which != "all" && c.which != "rho2" && c.which != "dq" && c.which != "relations") {
    throw usage_error("--which must be all, rho2, dq or relations");
  }
  Json j = envelope("oq3");
  std::string text;
  if (c.which == "all" || c.which == "relations") {
    auto ext = exterior_Oq3();
    Json rules = Json::array();
    for (const auto& r : ext.rules) {
      std::string lhs = NCPoly(ext.alphabet).word_text(r.lhs);
      rules.push_back({{"lhs", lhs}, {"rhs", r.rhs.to_string()}});
      text += lhs + " -> " + r.rhs.to_string() + "\n";
    }
    j["relations"] = rules;
  }
  if (c.which == "all" || c.which == "rho2") {
    j["rho2"] = rho2_Oq3().to_string();
    text += "rho2\t" + rho2_Oq3().to_string() + "\n";
  }
  if (c.which == "all" || c.which == "dq") {
    j["D_q"] = dq_Oq3().to_string();
    text += "D_q\t" + dq_Oq3().to_string() + "\n";
  }
  emit(out, j, c.format != "text", text);
  return kOk;
}

inline int cmd_verify_paper(const Config& c, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  if (!c.group.empty()) opts.group = parse_group(c.group);
  if (c.rmax_set) {
    if (c.rmax < 0) throw usage_error("--rmax must be nonnegative");
    opts.rmax = c.rmax;
  }
  opts.seed = c.seed;
  if (!c.data_dir.empty()) opts.data_dir = c.data_dir;

  std::vector<std::string> keys;
  if (c.only.empty()) {
    for (const auto& info : criteria()) keys.push_back(info.key);
  } else {
    std::string s = c.only;
    for (std::size_t pos = 0; pos <= s.size();) {
      std::size_t comma = std::min(s.find(',', pos), s.size());
      keys.push_back(criterion_info(s.substr(pos, comma - pos)).key);
      pos = comma + 1;
    }
  }

  bool all = true;
  Json results = Json::array();
  std::string text;
  for (const auto& key : keys) {
    auto r = run_criterion(key, opts);
    all = all && r.passed();
    err << "criterion " << r.number << " (" << r.key << "): " << r.seconds << " s, limit " << r.limit << " s\n";
    for (const auto& f : r.failures) err << "  " << f << '\n';
    const std::string status = r.passed() ? "pass" : (r.ok ? "timeout" : "fail");
    text += "# criterion " + std::to_string(r.number) + "\t" + r.key + "\t" + status + "\n";
    for (const auto& line : r.report) text += line + "\n";
    results.push_back({{"criterion", r.number},
                       {"key", r.key},
                       {"title", r.title},
                       {"status", status},
                       {"failures", r.failures},
                       {"report", r.report}});
  }
  Json j = envelope("verify-paper");
  j["seed"] = c.seed;
  j["results"] = results;
  j["passed"] = all;
  text += std::string("# overall\t") + (all ? "pass" : "fail") + "\n";
  emit(out, j, c.format == "json", text);
  return all ? kOk : kVerifyFailed;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation rings, cocommutative elements and quantum traces"};
  app.name("repring");
  app.require_subcommand(1);
  Config c;

  auto* tensor = app.add_subcommand("tensor", "decompose a tensor product");
  tensor->add_option("--group", c.group, "group, e.g. SL(3), O(4)")->required();
  tensor->add_option("--lhs", c.lhs, "first label")->required();
  tensor->add_option("--rhs", c.rhs, "second label")->required();
  tensor->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* chr = app.add_subcommand("char", "formal character of an irreducible");
  chr->add_option("--group", c.group)->required();
  chr->add_option("--label", c.label)->required();
  chr->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));

  auto* coc = app.add_subcommand("coc", "the ring of cocommutative elements");
  coc->require_subcommand(1);
  auto* express = coc->add_subcommand("express", "express a trace basis element in the generators");
  express->add_option("--group", c.group)->required();
  express->add_option("--label", c.label)->required();
  express->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  auto* verify = coc->add_subcommand("verify", "check the relations among the generators");
  verify->add_option("--group", c.group)->required();
  verify->add_option("--relation", c.relation, "relation id; all when omitted");
  verify->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  auto* indep = coc->add_subcommand("independence", "algebraic independence of the generator monomials");
  indep->add_option("--group", c.group)->required();
  indep->add_option("--cap", c.cap, "degree cap");
  indep->add_option("--seed", c.seed);
  indep->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));

  auto* frt = app.add_subcommand("frt", "the graded model of the FRT bialgebra");
  frt->require_subcommand(1);
  auto* nf = frt->add_subcommand("normalform", "rewrite a monomial into B(N)");
  nf->add_option("--n", c.n, "N of O(N)")->required();
  nf->add_option("--word", c.word, "monomial such as rho2^2*D")->required();
  nf->add_option("--strategy", c.strategy, "fixed or random");
  nf->add_option("--seed", c.seed);
  nf->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  auto* hilbert = frt->add_subcommand("hilbert", "Hilbert series three ways");
  hilbert->add_option("--group", c.group)->required();
  hilbert->add_option("--rmax", c.rmax);
  hilbert->add_option("--format", c.format)->check(CLI::IsMember({"json", "tsv"}));
  auto* witness = frt->add_subcommand("witness", "zero divisor pair for O(N), N even");
  witness->add_option("--n", c.n)->required();
  witness->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));

  auto* qtrace = app.add_subcommand("qtrace", "quantum trace of the m-th fundamental corepresentation of GL_q(N)");
  qtrace->add_option("--n", c.n)->required();
  qtrace->add_option("--m", c.m)->required();
  qtrace->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));

  auto* oq3 = app.add_subcommand("oq3", "the quantum exterior algebra of O_q(3)");
  oq3->add_option("--which", c.which, "all, rho2, dq or relations");
  oq3->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));

  auto* vp = app.add_subcommand("verify-paper", "run the verification suite");
  vp->add_option("--only", c.only, "comma separated criterion keys or numbers");
  vp->add_option("--group", c.group, "restrict the per-group criteria");
  auto* rmax_opt = vp->add_option("--rmax", c.rmax, "degree cap for hilbert and rewriting");
  vp->add_option("--seed", c.seed);
  vp->add_option("--data-dir", c.data_dir);
  vp->add_option("--format", c.format)->check(CLI::IsMember({"json", "tsv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  c.rmax_set = rmax_opt->count() > 0;

  try {
    if (tensor->parsed()) return cmd_tensor(c, out);
    if (chr->parsed()) return cmd_char(c, out);
    if (express->parsed()) return cmd_coc_express(c, out);
    if (verify->parsed()) return cmd_coc_verify(c, out);
    if (indep->parsed()) return cmd_coc_independence(c, out);
    if (nf->parsed()) return cmd_frt_normalform(c, out);
    if (hilbert->parsed()) return cmd_frt_hilbert(c, out);
    if (witness->parsed()) return cmd_frt_witness(c, out);
    if (qtrace->parsed()) return cmd_qtrace(c, out);
    if (oq3->parsed()) return cmd_oq3(c, out);
    if (vp->parsed()) return cmd_verify_paper(c, out, err);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace repring::cli
