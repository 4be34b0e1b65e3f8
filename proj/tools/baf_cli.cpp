// Command line interface to the exact Lie-theoretic computations in baf_core:
// line bundle cohomology on the flag variety, cohomology classes on G/U,
// saturation of dominant-weight monoids, invariant operator polynomials and
// their twists, and the minimal orbit order table.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "baf/bwb.hpp"
#include "baf/errors.hpp"
#include "baf/opcalc.hpp"
#include "baf/rootsystem.hpp"
#include "baf/svariety.hpp"
#include "baf/weyl.hpp"

namespace {

using nlohmann::json;

json json_int(const baf::Int& n) {
  if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
  return n.get_str();
}

json json_weight(const baf::Weight& w) { return json(w); }

json json_word(const std::vector<int>& word) { return json(word); }

baf::Weight parse_weight(const std::string& text, int rank) {
  baf::Weight out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight coordinate '" + tok + "' in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(out.size()) != rank)
    throw std::invalid_argument("weight '" + text + "' has " + std::to_string(out.size()) +
                                " coordinates, expected " + std::to_string(rank));
  return out;
}

std::vector<baf::Weight> parse_generators(const std::string& text, int rank) {
  std::vector<baf::Weight> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    std::string tok = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    out.push_back(parse_weight(tok, rank));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return out;
}

std::string weight_str(const baf::Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

struct Options {
  std::string format = "table";
  std::string type;
  std::string lambda;
  std::string gens;
  int degree = -1;
  bool has_degree = false;
  bool table = false;
  std::string twist;
  std::string psi_gens;
  bool do_enumerate = false;
  std::size_t weyl_cap = 1000000;
  long long hilbert_cap = 64;
};

void emit(const Options& opt, const json& j, const std::string& table_text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table_text;
}

int cmd_bwb(const Options& opt) {
  baf::RootSystem rs = baf::RootSystem::build(opt.type);
  baf::Weight lam = parse_weight(opt.lambda, rs.rank());
  baf::BWBResult res = baf::line_bundle_cohomology(rs, lam);

  json j;
  std::string text;
  if (res.vanishes) {
    j = {{"vanishes", true}};
    text = "H^i(B, L_" + weight_str(lam) + ") = 0 for all i (shifted weight is singular)\n";
  } else {
    baf::Int dim = rs.weyl_dimension(res.mu);
    j = {{"vanishes", false},
         {"degree", res.degree},
         {"mu", json_weight(res.mu)},
         {"dim", json_int(dim)},
         {"word", json_word(res.witness.word())}};
    text = "H^" + std::to_string(res.degree) + "(B, L_" + weight_str(lam) + ") = V" +
           weight_str(res.mu) + "*   dim " + dim.get_str() + "   witness " +
           word_str(res.witness.word()) + "\n";
  }
  emit(opt, j, text);
  return 0;
}

int cmd_xcoh(const Options& opt) {
  baf::RootSystem rs = baf::RootSystem::build(opt.type);
  if (!opt.has_degree) {
    std::vector<baf::Int> coeffs = baf::poincare_coefficients(rs);
    json arr = json::array();
    std::string text = "degree multiplicities of H^*(X, O_X) for " + rs.type_string() + ":\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      arr.push_back(json_int(coeffs[i]));
      text += "  H^" + std::to_string(i) + ": |W(" + std::to_string(i) +
              ")| = " + coeffs[i].get_str() + "\n";
    }
    json j = {{"type", rs.type_string()}, {"histogram", arr}, {"weyl_order", json_int(rs.weyl_order())}};
    emit(opt, j, text);
    return 0;
  }

  baf::XCohomologyReport rep = baf::x_cohomology(rs, opt.degree, opt.weyl_cap);
  json classes = json::array();
  std::string text = "H^" + std::to_string(rep.degree) + "(X, O_X): multiplicity " +
                     std::to_string(rep.multiplicity) + "\n";
  for (const auto& cls : rep.classes) {
    classes.push_back({{"word", json_word(cls.w.word())}, {"e_weight", json_weight(cls.e_weight)}});
    text += "  w = " + word_str(cls.w.word()) + "   e-weight " + weight_str(cls.e_weight) + "\n";
  }
  json j = {{"type", rs.type_string()},
            {"degree", rep.degree},
            {"multiplicity", rep.multiplicity},
            {"classes", classes}};
  emit(opt, j, text);
  return 0;
}

int cmd_svariety(const Options& opt) {
  baf::RootSystem rs = baf::RootSystem::build(opt.type);
  std::vector<baf::Weight> gens = parse_generators(opt.gens, rs.rank());
  baf::GammaMonoid mono = baf::gamma_lattice(rs, gens);
  baf::SaturationVerdict verdict = baf::check_saturation(rs, gens, opt.hilbert_cap);

  const char* status = verdict.status == baf::SaturationStatus::Holds      ? "holds"
                       : verdict.status == baf::SaturationStatus::Fails    ? "fails"
                                                                     : "inconclusive";
  json factors = json::array();
  for (const auto& d : mono.invariant_factors) factors.push_back(json_int(d));
  json hb = json::array();
  for (const auto& h : verdict.hilbert_basis) hb.push_back(json_weight(h));

  json j = {{"type", rs.type_string()},
            {"saturated", status},
            {"lattice_rank", mono.lattice_rank},
            {"invariant_factors", factors},
            {"q_gamma", mono.q_gamma.to_string()},
            {"torus_rank", mono.q_gamma.torus_rank},
            {"hilbert_basis", hb},
            {"level_bound", verdict.level_bound}};
  if (verdict.witness) j["witness"] = json_weight(*verdict.witness);

  std::string text;
  text += "monoid saturation (all dominant lattice points lie in the monoid): ";
  text += status;
  text += "\n  (saturation is equivalent to: normal orbit closure with boundary codimension >= 2)\n";
  text += "  lattice rank: " + std::to_string(mono.lattice_rank) + "\n";
  text += "  character group of Q_Gamma: Lambda/(lattice), Q_Gamma = " + mono.q_gamma.to_string() + "\n";
  if (verdict.witness)
    text += "  witness (dominant lattice point outside the monoid): " + weight_str(*verdict.witness) + "\n";
  if (!verdict.hilbert_basis.empty()) {
    text += "  minimal generators examined:";
    for (const auto& h : verdict.hilbert_basis) text += " " + weight_str(h);
    text += "\n";
  }
  emit(opt, j, text);
  return verdict.status == baf::SaturationStatus::Inconclusive ? 4 : 0;
}

int cmd_peta(const Options& opt) {
  baf::RootSystem rs = baf::RootSystem::build(opt.type);
  baf::Weight eta = parse_weight(opt.lambda, rs.rank());
  baf::UhPolynomial p = baf::p_eta(rs, eta);
  bool psi = !opt.psi_gens.empty();
  if (!opt.twist.empty()) p = baf::fw_on_poly(rs, baf::longest_element(rs), p);
  if (psi) {
    baf::GammaMonoid mono = baf::gamma_lattice(rs, parse_generators(opt.psi_gens, rs.rank()));
    p = baf::psi_gamma(rs, p, mono);
  }
  std::string var = psi ? "y" : "h";
  std::string poly = p.to_string(var);
  json j = {{"type", rs.type_string()},
            {"eta", json_weight(eta)},
            {"poly", poly},
            {"degree", p.degree()},
            {"k", json_int(baf::k_value(rs, eta))},
            {"twisted", !opt.twist.empty()},
            {"psi", psi},
            {"variables", var}};
  emit(opt, j, poly + "\n");
  return 0;
}

json min_orbit_json(const baf::MinOrbitReport& rep) {
  return {{"type", baf::to_string(rep.component)},
          {"highest_root", json_weight(rep.highest_root)},
          {"k", json_int(rep.k)},
          {"coxeter_number", rep.coxeter_h},
          {"two_h_minus_2", rep.two_h_minus_2},
          {"surjectivity", baf::to_string(rep.surjectivity)}};
}

int cmd_minorbit(const Options& opt) {
  if (opt.table) {
    // the nine-family classification of k(highest root)
    const std::vector<std::pair<std::string, std::string>> rows = {
        {"A_l (l>=1)", "2l"},      {"B_l (l>=2)", "2(2l-1)"}, {"C_l (l>=2)", "2(2l-1)"},
        {"D_l (l>=3)", "2(2l-3)"}, {"E6", "22"},              {"E7", "34"},
        {"E8", "58"},              {"F4", "22"},              {"G2", "10"}};
    json arr = json::array();
    std::string text = "k(highest root) by family:\n";
    for (const auto& [fam, k] : rows) {
      arr.push_back({{"family", fam}, {"k", k}});
      text += "  " + fam + std::string(fam.size() < 12 ? 12 - fam.size() : 1, ' ') + k + "\n";
    }
    emit(opt, {{"table", arr}}, text);
    return 0;
  }
  auto components = baf::parse_type_spec(opt.type);
  if (components.size() != 1)
    throw std::domain_error("minorbit requires a single simple type");
  baf::MinOrbitReport rep = baf::min_orbit_report(components[0]);
  std::string text = baf::to_string(rep.component) + ": k(highest root) = " + rep.k.get_str() +
                     ", Coxeter number " + std::to_string(rep.coxeter_h) + ", 2(h-1) = " +
                     std::to_string(rep.two_h_minus_2) + ", restriction map: " +
                     baf::to_string(rep.surjectivity) + "\n";
  emit(opt, min_orbit_json(rep), text);
  return 0;
}

int cmd_kvalue(const Options& opt) {
  baf::RootSystem rs = baf::RootSystem::build(opt.type);
  baf::Weight lam = parse_weight(opt.lambda, rs.rank());
  baf::Int k = baf::k_value(rs, lam);
  emit(opt, {{"type", rs.type_string()}, {"lambda", json_weight(lam)}, {"k", json_int(k)}},
       "k" + weight_str(lam) + " = " + k.get_str() + "\n");
  return 0;
}

int cmd_weyl(const Options& opt) {
  baf::RootSystem rs = baf::RootSystem::build(opt.type);
  std::vector<baf::Int> coeffs = baf::poincare_coefficients(rs);
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(json_int(c));
  json j = {{"type", rs.type_string()},
            {"order", json_int(rs.weyl_order())},
            {"poincare", arr}};
  std::string text = "|W| = " + rs.weyl_order().get_str() + "\npoincare coefficients:";
  for (const auto& c : coeffs) text += " " + c.get_str();
  text += "\n";
  if (opt.do_enumerate) {
    auto elements = baf::enumerate_weyl(rs, opt.weyl_cap);
    json els = json::array();
    for (const auto& w : elements) {
      els.push_back({{"word", json_word(w.word())}, {"length", w.word().size()}});
      text += word_str(w.word()) + " (length " + std::to_string(w.word().size()) + ")\n";
    }
    j["elements"] = els;
  }
  emit(opt, j, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on weights, Weyl groups, line bundle cohomology and "
               "invariant differential operator data for semisimple types"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--weyl-cap", opt.weyl_cap, "cap on Weyl group enumeration");
  app.add_option("--hilbert-cap", opt.hilbert_cap, "cap on the minimal-generator level search");

  CLI::App* bwb = app.add_subcommand("bwb", "line bundle cohomology on the flag variety");
  bwb->add_option("type", opt.type, "root system, e.g. A2 or A1xA1")->required();
  bwb->add_option("lambda", opt.lambda, "weight in fundamental coordinates, e.g. 1,0")->required();

  CLI::App* xcoh = app.add_subcommand("xcoh", "cohomology classes of the structure sheaf on G/U");
  xcoh->add_option("type", opt.type)->required();
  CLI::Option* deg_opt = xcoh->add_option("--degree", opt.degree, "cohomological degree");

  CLI::App* sv = app.add_subcommand("svariety", "saturation and lattice data of a dominant monoid");
  sv->add_option("type", opt.type)->required();
  sv->add_option("--gens", opt.gens, "generators, e.g. 1,1;2,0")->required();

  CLI::App* peta = app.add_subcommand("peta", "invariant operator polynomial of a dominant weight");
  peta->add_option("type", opt.type)->required();
  peta->add_option("eta", opt.lambda, "dominant weight")->required();
  peta->add_option("--twist", opt.twist, "twist to apply (only w0 is supported)")
      ->check(CLI::IsMember({"w0"}));
  peta->add_option("--psi", opt.psi_gens, "restrict onto grading variables of these generators");

  CLI::App* minorbit = app.add_subcommand("minorbit", "minimal orbit order data for a simple type");
  minorbit->add_option("type", opt.type);
  minorbit->add_flag("--table", opt.table, "print the family table");

  CLI::App* kvalue = app.add_subcommand("kvalue", "pairing with twice the dual Weyl vector");
  kvalue->add_option("type", opt.type)->required();
  kvalue->add_option("lambda", opt.lambda)->required();

  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group order, length distribution, elements");
  weyl->add_option("type", opt.type)->required();
  weyl->add_flag("--enumerate", opt.do_enumerate, "list all elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  opt.has_degree = deg_opt->count() > 0;

  try {
    if (app.got_subcommand(bwb)) return cmd_bwb(opt);
    if (app.got_subcommand(xcoh)) return cmd_xcoh(opt);
    if (app.got_subcommand(sv)) return cmd_svariety(opt);
    if (app.got_subcommand(peta)) return cmd_peta(opt);
    if (app.got_subcommand(minorbit)) {
      if (!opt.table && opt.type.empty())
        throw std::invalid_argument("minorbit needs a type or --table");
      return cmd_minorbit(opt);
    }
    if (app.got_subcommand(kvalue)) return cmd_kvalue(opt);
    if (app.got_subcommand(weyl)) return cmd_weyl(opt);
  } catch (const baf::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
