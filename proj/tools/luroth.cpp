#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "luroth/criteria.hpp"
#include "luroth/dimension.hpp"
#include "luroth/figures.hpp"
#include "luroth/json_io.hpp"
#include "luroth/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitUsage = 2;

std::size_t max_parts_from_env() {
  if (const char* env = std::getenv("LUROTH_MAX_PARTS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw CLI::ValidationError("LUROTH_MAX_PARTS must be a positive integer");
  }
  return luroth::kDefaultMaxParts;
}

luroth::Rat parse_fraction(const std::string& s) {
  auto r = luroth::Rat::parse(s);
  if (!r) throw CLI::ValidationError("expected a fraction like 12/41, got: " + s);
  return *r;
}

// "N1..N2" for a band, or a comma list of digits.
luroth::DigitSet parse_alphabet(const std::string& s) {
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const long n1 = std::stol(s.substr(0, dots));
    const long n2 = std::stol(s.substr(dots + 2));
    return luroth::DigitSet::band(n1, n2);
  }
  std::vector<long> digits;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) digits.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return luroth::DigitSet::finite(std::move(digits));
}

int driver_exit(const luroth::DriverReport& rep) {
  return rep.decided() ? kExitOk : kExitInconclusive;
}

void emit(const nlohmann::json& j) { std::cout << luroth::pretty(j); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for digit-restricted sumsets"};
  app.require_subcommand(1);

  std::string frac, word_json, alphabet, theorem, section, json_out, out_path, kind;
  long n1a = 2, n2a = 3, n1b = 2, n2b = 3;
  std::vector<int> depths{1, 1};
  std::vector<long> pair_ks, triple_ks, ks;
  long single_k = 0;
  double tol = 1e-9;
  std::vector<long> fig_params;

  auto* cmd_expand = app.add_subcommand("expand", "digit expansion of a rational in (0,1]");
  cmd_expand->add_option("fraction", frac, "value as p/q")->required();

  auto* cmd_eval = app.add_subcommand("eval", "value of a digit word");
  cmd_eval->add_option("word", word_json, "{\"preperiod\":[...],\"period\":[...]}")->required();

  auto* cmd_thick = app.add_subcommand("thickness", "band thickness and derived quantities");
  cmd_thick->add_option("N1", n1a)->required();
  cmd_thick->add_option("N2", n2a)->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a congruence or dimension verification");
  cmd_verify->add_option("theorem", theorem,
                         "theorem1|theorem2|corollary3|theorem4|optimality|lemmas|dims")
      ->required();
  cmd_verify->add_option("--pair", pair_ks, "two digit upper bounds")->expected(2);
  cmd_verify->add_option("--triple", triple_ks, "three digit upper bounds")->expected(3);
  cmd_verify->add_option("--ks", ks, "digit lower bounds");
  cmd_verify->add_option("-k,--k", single_k, "single parameter k");

  auto* cmd_gap = app.add_subcommand("gap", "gap certificate for a sum of two band covers");
  cmd_gap->add_option("N1a", n1a)->required();
  cmd_gap->add_option("N2a", n2a)->required();
  cmd_gap->add_option("N1b", n1b)->required();
  cmd_gap->add_option("N2b", n2b)->required();
  cmd_gap->add_option("--depths", depths, "cover depths dA dB")->expected(2);

  auto* cmd_dim = app.add_subcommand("dim", "dimension of a finite-alphabet set");
  cmd_dim->add_option("alphabet", alphabet, "band N1..N2 or comma list of digits")->required();
  cmd_dim->add_option("--tol", tol, "bisection tolerance");

  auto* cmd_suite = app.add_subcommand("suite", "reproduce the whole claim catalogue");
  cmd_suite->add_option("--section", section, "restrict to one topic group");
  cmd_suite->add_option("--json", json_out, "write the report as JSON to this path");

  auto* cmd_figure = app.add_subcommand("figure", "deterministic SVG figures");
  cmd_figure->add_option("kind", kind, "scc|product_square|sum_cover")->required();
  cmd_figure->add_option("params", fig_params,
                         "scc: N1 N2 depth; product_square/sum_cover: N1a N2a da N1b N2b db");
  cmd_figure->add_option("-o,--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::size_t max_parts = max_parts_from_env();

    if (*cmd_expand) {
      const luroth::Rat x = parse_fraction(frac);
      const auto word = luroth::expand(x);
      nlohmann::json j = luroth::to_json(word);
      j["value"] = luroth::eval_word(word).str();
      emit(j);
      return kExitOk;
    }

    if (*cmd_eval) {
      const auto word = luroth::word_from_json(nlohmann::json::parse(word_json));
      nlohmann::json j = luroth::to_json(word);
      j["value"] = luroth::eval_word(word).str();
      emit(j);
      return kExitOk;
    }

    if (*cmd_thick) {
      const auto q = luroth::band_quantities(n1a, n2a);
      nlohmann::json j = luroth::to_json(q);
      j["tau_closed_form"] = luroth::thickness_closed_form(n1a, n2a).str();
      j["hull"] = luroth::to_json(luroth::band_hull(n1a, n2a));
      j["diameter"] = luroth::diameter(luroth::DigitSet::band(n1a, n2a)).str();
      j["largest_gap"] = luroth::max_gap(n1a, n2a).str();
      j["ordered"] = luroth::to_json(luroth::verify_ordered(n1a, n2a));
      emit(j);
      return kExitOk;
    }

    if (*cmd_verify) {
      if (theorem == "theorem1") {
        std::vector<long> bounds = !pair_ks.empty() ? pair_ks : triple_ks;
        if (bounds.empty()) throw CLI::ValidationError("theorem1 needs --pair or --triple");
        const auto rep = luroth::theorem1_driver(bounds);
        emit(luroth::to_json(rep));
        return driver_exit(rep);
      }
      if (theorem == "theorem2") {
        if (ks.empty()) throw CLI::ValidationError("theorem2 needs --ks");
        const auto rep = luroth::theorem2_driver(ks);
        emit(luroth::to_json(rep));
        return driver_exit(rep);
      }
      if (theorem == "corollary3" || theorem == "theorem4" || theorem == "optimality") {
        long k = single_k;
        if (k == 0 && !ks.empty()) k = ks[0];
        if (k == 0) throw CLI::ValidationError(theorem + " needs -k");
        const auto rep = theorem == "corollary3"  ? luroth::corollary3_driver(k)
                         : theorem == "theorem4" ? luroth::theorem4_driver(k)
                                                 : luroth::optimality_check(k);
        emit(luroth::to_json(rep));
        return driver_exit(rep);
      }
      if (theorem == "lemmas") {
        const auto rep = luroth::lemma_sweep(2, 20, 40);
        emit(luroth::to_json(rep));
        return rep.clean() ? kExitOk : kExitInconclusive;
      }
      if (theorem == "dims") {
        nlohmann::json j;
        const auto d3 = luroth::moran_solve(luroth::DigitSet::band(2, 3), 1e-9);
        j["dim_band_2_3"] = luroth::to_json(d3);
        bool all = std::abs(d3.value - 0.600967) < 1e-5;
        const double targets[] = {0.8209, 0.7740, 0.7500, 0.7347, 0.7239, 0.7157};
        for (long k = 3; k <= 8; ++k) {
          const auto cert = luroth::ray_bound_certificate(k, targets[k - 3], 1L << 27);
          j["ray_lower_bounds"][std::to_string(k)] = {{"target", targets[k - 3]},
                                                      {"band_top", cert.N},
                                                      {"sum_at_target", cert.sum_at_target},
                                                      {"holds", cert.holds}};
          all = all && cert.holds;
        }
        for (long k : {16L, 32L, 64L}) {
          const auto gc = luroth::good_bound_consistency(k, 1L << 20);
          j["ray_floor"][std::to_string(k)] = {{"bound", luroth::good_bound(k)},
                                               {"band_top", gc.N},
                                               {"holds", gc.holds}};
          all = all && gc.holds;
        }
        j["all_hold"] = all;
        emit(j);
        return all ? kExitOk : kExitInconclusive;
      }
      throw CLI::ValidationError("unknown verification id: " + theorem);
    }

    if (*cmd_gap) {
      const auto cert = luroth::certify_gap(luroth::DigitSet::band(n1a, n2a), depths[0],
                                            luroth::DigitSet::band(n1b, n2b), depths[1],
                                            max_parts);
      emit(luroth::to_json(cert));
      return cert.certified_noncongruence() ? kExitOk : kExitInconclusive;
    }

    if (*cmd_dim) {
      const auto ds = parse_alphabet(alphabet);
      const auto res = luroth::moran_solve(ds, tol);
      nlohmann::json j = luroth::to_json(res);
      j["alphabet"] = ds.str();
      emit(j);
      return kExitOk;
    }

    if (*cmd_suite) {
      const auto suite = luroth::run_suite(section);
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw std::runtime_error("cannot write " + json_out);
        out << luroth::pretty(luroth::to_json(suite));
      }
      std::cout << luroth::format_suite(suite);
      return suite.pass() ? kExitOk : kExitInconclusive;
    }

    if (*cmd_figure) {
      std::string svg;
      if (kind == "scc") {
        if (fig_params.size() != 3) throw CLI::ValidationError("scc expects N1 N2 depth");
        svg = luroth::svg_scc(fig_params[0], fig_params[1], static_cast<int>(fig_params[2]));
      } else if (kind == "product_square" || kind == "sum_cover") {
        if (fig_params.size() != 6)
          throw CLI::ValidationError(kind + " expects N1a N2a da N1b N2b db");
        svg = kind == "product_square"
                  ? luroth::svg_product_square(fig_params[0], fig_params[1],
                                               static_cast<int>(fig_params[2]), fig_params[3],
                                               fig_params[4], static_cast<int>(fig_params[5]))
                  : luroth::svg_sum_cover(fig_params[0], fig_params[1],
                                          static_cast<int>(fig_params[2]), fig_params[3],
                                          fig_params[4], static_cast<int>(fig_params[5]));
      } else {
        throw CLI::ValidationError("unknown figure kind: " + kind);
      }
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + out_path);
      out << svg;
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
