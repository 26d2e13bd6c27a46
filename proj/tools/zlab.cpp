// zlab: exact computations with the p-Zassenhaus filtration of free groups,
// truncated Magnus expansions, unipotent representations, Massey products,
// and the theorem-level verifiers.
//
// Exit codes: 0 success / verification pass, 1 verification failure,
//             2 usage or input error, 3 budget exhausted.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "zlab/cohomology.hpp"
#include "zlab/verify.hpp"

using nlohmann::json;
using namespace zlab;

namespace {

void emit(const std::string& path, const json& doc) {
  if (path == "-") {
    std::cout << doc.dump() << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << doc.dump(2) << "\n";
}

// Structural check of a verification report document against the shipped
// schema (docs/report.schema.json): required keys with the right JSON types.
bool report_json_valid(const json& doc) {
  return doc.is_object() && doc.contains("theorem") && doc["theorem"].is_string() &&
         doc.contains("params") && doc["params"].is_object() && doc.contains("status") &&
         doc["status"].is_string() && doc.contains("metrics") && doc["metrics"].is_object() &&
         doc.contains("witness") && doc["witness"].is_object() && doc.contains("seed") &&
         doc["seed"].is_number() && doc.contains("wall_time_ms") &&
         doc["wall_time_ms"].is_number();
}

json report_to_json(const VerificationReport& r) {
  json doc = json::parse(r.to_json_string());
  if (!report_json_valid(doc)) throw std::runtime_error("internal: report schema violation");
  return doc;
}

struct CommonOpts {
  std::string json_path;  // empty: human text only; "-": stdout

  // keep stdout machine-clean when the JSON document goes there
  std::ostream& info() const { return json_path == "-" ? std::cerr : std::cout; }
};

int run_reports(const std::vector<VerificationReport>& reports, const CommonOpts& common) {
  bool all_pass = true;
  for (const auto& r : reports) {
    common.info() << r.to_text() << "\n";
    all_pass = all_pass && r.pass;
  }
  if (!common.json_path.empty()) {
    if (reports.size() == 1) {
      emit(common.json_path, report_to_json(reports.front()));
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      emit(common.json_path, arr);
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Zassenhaus filtration / Massey product laboratory"};
  app.require_subcommand(1);

  // ---- expand ----
  std::string ex_word;
  std::uint32_t ex_mod = 2, ex_deg = 3, ex_alpha = 0;
  CommonOpts ex_common;
  auto* expand = app.add_subcommand("expand", "Magnus expansion of a word");
  expand->add_option("--word", ex_word, "group word, e.g. [a0,a1]*a0^2")->required();
  expand->add_option("--mod", ex_mod, "coefficient modulus m >= 2")->required();
  expand->add_option("--deg", ex_deg, "truncation degree bound")->required();
  expand->add_option("--alphabet", ex_alpha, "alphabet size (default: from the word)");
  expand->add_option("--json", ex_common.json_path, "write a JSON document ('-' = stdout)");

  // ---- degree ----
  std::string dg_word;
  std::uint32_t dg_p = 2, dg_cap = 12;
  CommonOpts dg_common;
  auto* degree = app.add_subcommand("degree", "Zassenhaus filtration level of a word");
  degree->add_option("--word", dg_word, "group word")->required();
  degree->add_option("--p", dg_p, "prime p")->required();
  degree->add_option("--cap", dg_cap, "detection cap (result 'cap' means >= cap)");
  degree->add_option("--json", dg_common.json_path, "write a JSON document");

  // ---- quotient ----
  std::uint32_t q_k = 2, q_p = 2, q_m = 3;
  bool q_no_table = false;
  std::string q_out = "-";
  auto* quotient = app.add_subcommand("quotient", "build the finite quotient S/S_m");
  quotient->add_option("--k", q_k, "number of free generators")->required();
  quotient->add_option("--p", q_p, "prime p")->required();
  quotient->add_option("--m", q_m, "filtration level m >= 2")->required();
  quotient->add_option("--out", q_out, "output path for the JSON table ('-' = stdout)");
  quotient->add_flag("--no-table", q_no_table, "omit the multiplication table");

  // ---- reps ----
  std::uint32_t r_k = 2, r_p = 2, r_m = 3, r_n = 2;
  unsigned r_threads = 1;
  std::string r_group;
  CommonOpts r_common;
  auto* reps = app.add_subcommand(
      "reps", "intersect kernels of all unipotent representations of S/S_m");
  auto* rk = reps->add_option("--k", r_k);
  auto* rp = reps->add_option("--p", r_p);
  auto* rm = reps->add_option("--m", r_m, "quotient level");
  reps->add_option("--n", r_n, "matrix dimension")->required();
  reps->add_option("--group", r_group, "quotient JSON file (instead of --k/--p/--m)")
      ->excludes(rk)
      ->excludes(rp)
      ->excludes(rm);
  reps->add_option("--threads", r_threads, "worker threads (0 = auto)");
  reps->add_option("--json", r_common.json_path, "write a JSON document");

  // ---- massey ----
  std::uint32_t ms_k = 2, ms_p = 2, ms_m = 0;
  std::string ms_word, ms_group;
  CommonOpts ms_common;
  auto* massey = app.add_subcommand(
      "massey", "Massey product class psi_w of generator characters on S/S_m");
  auto* mk = massey->add_option("--k", ms_k);
  auto* mp = massey->add_option("--p", ms_p);
  massey->add_option("--m", ms_m, "quotient level (default: |w|)");
  massey->add_option("--word", ms_word, "letter word, e.g. 0,1 or a0*a1")->required();
  massey->add_option("--group", ms_group, "quotient JSON file (instead of --k/--p/--m)")
      ->excludes(mk)
      ->excludes(mp);
  massey->add_option("--json", ms_common.json_path, "write a JSON document");

  // ---- pairing ----
  std::uint32_t pr_k = 2, pr_p = 2, pr_n = 2;
  std::string pr_sigma, pr_w;
  CommonOpts pr_common;
  auto* pairing = app.add_subcommand(
      "pairing", "pair an element of S_n against psi_w and compare with eps_w");
  pairing->add_option("--k", pr_k)->required();
  pairing->add_option("--p", pr_p)->required();
  pairing->add_option("--n", pr_n, "filtration level n >= 2")->required();
  pairing->add_option("--sigma", pr_sigma, "group word in S_n")->required();
  pairing->add_option("--w", pr_w, "monomial word of length n, e.g. 0,1")->required();
  pairing->add_option("--json", pr_common.json_path, "write a JSON document");

  // ---- verify ----
  std::string v_theorem;
  std::int32_t v_k = 2, v_p = 2, v_n = 2, v_m = 3, v_samples = 20;
  std::uint64_t v_seed = 1;
  unsigned v_threads = 1;
  bool v_extended = false;
  CommonOpts v_common;
  auto* verify = app.add_subcommand("verify", "run a theorem-level verifier");
  verify
      ->add_option("--theorem", v_theorem,
                   "A | B | duality | massey-cup | small-groups | filtration | standard")
      ->required();
  verify->add_option("--k", v_k);
  verify->add_option("--p", v_p);
  verify->add_option("--n", v_n);
  verify->add_option("--m", v_m);
  verify->add_option("--samples", v_samples);
  verify->add_option("--seed", v_seed);
  verify->add_option("--threads", v_threads, "worker threads (0 = auto)");
  verify->add_flag("--extended", v_extended, "run the extended matrix with 'standard'");
  verify->add_option("--json", v_common.json_path, "write a JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*expand) {
      GroupWord g = GroupWord::parse(ex_word);
      std::uint32_t k = ex_alpha ? ex_alpha : std::max<std::uint32_t>(1, g.min_alphabet());
      TruncatedSeries s = magnus(g, ex_mod, k, ex_deg);
      ex_common.info() << s.str() << "\n";
      if (!ex_common.json_path.empty()) {
        json doc{{"word", g.str()},   {"modulus", ex_mod}, {"alphabet", k},
                 {"degree_bound", ex_deg}, {"series", s.str()}};
        emit(ex_common.json_path, doc);
      }
      return 0;
    }

    if (*degree) {
      GroupWord g = GroupWord::parse(dg_word);
      std::uint32_t d = zassenhaus_degree(g, dg_p, dg_cap);
      dg_common.info() << d << "\n";
      if (!dg_common.json_path.empty()) {
        json doc{{"word", g.str()},
                 {"p", dg_p},
                 {"cap", dg_cap},
                 {"degree", d},
                 {"capped", d == dg_cap}};
        emit(dg_common.json_path, doc);
      }
      return 0;
    }

    if (*quotient) {
      Quotient Q = Quotient::build(q_k, q_p, q_m);
      emit(q_out, json::parse(Q.to_json_string(!q_no_table)));
      return 0;
    }

    if (*reps) {
      Quotient Q = Quotient::build(r_k, r_p, r_m);
      KernelIntersection ki = kernel_intersection(Q, r_n, r_threads);
      std::vector<int> image = Q.filtration_image(r_n);
      bool equal = ki.elements == image;
      r_common.info() << "quotient order " << Q.order() << ", intersection order "
                << ki.elements.size() << ", filtration image order " << image.size()
                << (equal ? " (equal)" : " (DIFFER)") << "\n";
      if (!r_common.json_path.empty()) {
        json elems = json::array();
        for (int e : ki.elements)
          elems.push_back({{"element", e}, {"witness", Q.witness(e).str()}});
        // a few enumerated representations, as generator-image lists
        json sample = json::array();
        std::uint64_t per = Unipotent::group_order(r_n, r_p);
        for (std::uint64_t t = 0; t < std::min<std::uint64_t>(4, ki.reps_used); ++t) {
          json imgs = json::array();
          std::uint64_t rank = t;
          for (std::uint32_t a = 0; a < r_k; ++a) {
            imgs.push_back(Unipotent::from_rank(r_n, r_p, rank % per).str());
            rank /= per;
          }
          sample.push_back(std::move(imgs));
        }
        json doc{{"k", r_k},
                 {"sample_representations", sample},
                 {"p", r_p},
                 {"m", r_m},
                 {"n", r_n},
                 {"quotient_order", Q.order()},
                 {"reps_total", ki.reps_total},
                 {"reps_used", ki.reps_used},
                 {"intersection", elems},
                 {"filtration_order", image.size()},
                 {"equal", equal}};
        emit(r_common.json_path, doc);
      }
      return equal ? 0 : 1;
    }

    if (*massey) {
      Word w;
      if (ms_word.find('a') != std::string::npos) {
        GroupWord g = GroupWord::parse(ms_word);
        for (const auto& s : g.syllables()) {
          if (s.exp < 0)
            throw parameter_error("massey: the letter word must be inverse-free");
          for (std::int64_t i = 0; i < s.exp; ++i)
            w.push_back(static_cast<std::uint8_t>(s.gen));
        }
      } else {
        for (char ch : ms_word)
          if (ch >= '0' && ch <= '9') w.push_back(static_cast<std::uint8_t>(ch - '0'));
      }
      if (w.size() < 2) throw parameter_error("massey: need a word of length >= 2");
      std::uint32_t m = ms_m ? ms_m : static_cast<std::uint32_t>(w.size());
      Quotient Q = Quotient::build(ms_k, ms_p, m);
      Cochain2 cls = psi_w(Q, w);
      bool coboundary = coboundary_witness(cls).has_value();
      ms_common.info() << "psi_" << word_str(w) << " on S/S_" << m << " (order " << Q.order()
                << "): " << (coboundary ? "trivial class" : "nontrivial class") << "\n";
      if (!ms_common.json_path.empty()) {
        json doc{{"word", word_str(w)}, {"k", ms_k},
                 {"p", ms_p},           {"m", m},
                 {"order", Q.order()},  {"cocycle", cls.v},
                 {"is_coboundary", coboundary}};
        emit(ms_common.json_path, doc);
      }
      return 0;
    }

    if (*pairing) {
      if (pr_n < 2) throw parameter_error("pairing: n must be >= 2");
      Word w;
      for (char ch : pr_w)
        if (ch >= '0' && ch <= '9') w.push_back(static_cast<std::uint8_t>(ch - '0'));
      if (w.size() != pr_n) throw parameter_error("pairing: |w| must equal n");
      GroupWord sigma = GroupWord::parse(pr_sigma);
      Quotient Qn = Quotient::build(pr_k, pr_p, pr_n);
      Quotient Qn1 = Quotient::build(pr_k, pr_p, pr_n + 1);
      std::uint32_t val = pairing_value(sigma, psi_w(Qn, w), Qn, Qn1);
      std::uint32_t eps = epsilon(w, sigma, pr_p, pr_k);
      pr_common.info() << "(sigma, psi_w)' = " << val << ", eps_w(sigma) = " << eps << "\n";
      if (!pr_common.json_path.empty()) {
        json doc{{"sigma", sigma.str()}, {"word", word_str(w)}, {"k", pr_k},
                 {"p", pr_p},            {"n", pr_n},           {"pairing", val},
                 {"epsilon", eps}};
        emit(pr_common.json_path, doc);
      }
      return 0;
    }

    if (*verify) {
      std::vector<VerificationReport> reports;
      if (v_theorem == "A") {
        reports.push_back(verify_theorem_A(v_k, v_p, v_n, v_threads));
      } else if (v_theorem == "B") {
        reports.push_back(verify_theorem_B(v_k, v_p, v_n));
      } else if (v_theorem == "duality") {
        reports.push_back(verify_fundamental_duality(v_k, v_p, v_n, v_samples, v_seed));
      } else if (v_theorem == "massey-cup") {
        reports.push_back(verify_massey_cup(v_k, v_p));
      } else if (v_theorem == "small-groups") {
        reports.push_back(identify_small_groups(v_p));
      } else if (v_theorem == "filtration") {
        reports.push_back(verify_filtration_agreement(v_k, v_p, v_m));
      } else if (v_theorem == "standard") {
        reports = v_extended ? verify_extended_suite(v_threads, v_seed)
                             : verify_standard_suite(v_threads, v_seed);
      } else {
        std::cerr << "unknown theorem id: " << v_theorem << "\n";
        return 2;
      }
      return run_reports(reports, v_common);
    }
  } catch (const resource_error& e) {
    std::cerr << "budget exhausted: " << e.what() << " (reached " << e.reached << ")\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const value_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
