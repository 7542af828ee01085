#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mar/antiramsey.hpp"
#include "mar/coloring.hpp"
#include "mar/errors.hpp"
#include "mar/io.hpp"
#include "mar/matroid.hpp"
#include "mar/packing.hpp"
#include "mar/subset.hpp"

namespace mar::cli {

/// Process exit codes: 0 success / found / all agree, 1 honest negative
/// answer (absent, infeasible, disagreement), 2 usage, parse or contract
/// error, 3 node budget exceeded.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

namespace detail {

struct Range {
  int lo = 0;
  int hi = -1;
};

inline int parse_exact_int(const std::string& text) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw ContractError("expected an integer, got '" + text + "'");
  }
  if (pos != text.size())
    throw ContractError("expected an integer, got '" + text + "'");
  return v;
}

inline Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_exact_int(text);
    return r;
  }
  r.lo = parse_exact_int(text.substr(0, dots));
  r.hi = parse_exact_int(text.substr(dots + 2));
  if (r.hi < r.lo)
    throw ContractError("empty range '" + text + "'");
  return r;
}

inline std::vector<ElementId> parse_id_list(const std::string& text) {
  std::vector<ElementId> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ','))
    out.push_back(parse_exact_int(part));
  return out;
}

inline void print_packing(std::ostream& out, const BasePacking& packing) {
  for (std::size_t i = 0; i < packing.bases.size(); ++i)
    out << "basis " << (i + 1) << " = " << packing.bases[i].to_string()
        << "\n";
}

inline std::string violation_text(const FlatViolation& v, const char* lhs_name) {
  return to_string(v.flat) + ": " + lhs_name + " = " +
         std::to_string(v.lhs) + " < " + std::to_string(v.rhs) +
         " = t * (r(E) - r(F))";
}

}  // namespace detail

/// Runs the command line tool against the given argument list (without the
/// program name). All regular output goes to out, errors to err.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"anti-Ramsey numbers for rainbow base packings in matroids"};
  app.require_subcommand(1);
  std::size_t budget = kDefaultNodeBudget;

  std::string spec_path;
  std::string subset_text;
  std::string coloring_path;
  std::string out_path;
  std::string method = "formula";
  std::string family_name;
  std::string n_text, k_text, d_text, t_text = "1";
  int t = 1;
  int max_rank = -1;
  int jobs = 1;

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec_path, "matroid spec file")->required();
    cmd->add_option("--budget", budget, "search/enumeration node budget");
  };

  auto* rank_cmd =
      app.add_subcommand("rank", "rank of the ground set or of a subset");
  add_spec(rank_cmd);
  rank_cmd->add_option("--subset", subset_text,
                       "comma separated element ids, e.g. 0,2,5");

  auto* flats_cmd = app.add_subcommand("flats", "enumerate flats");
  add_spec(flats_cmd);
  flats_cmd->add_option("--max-rank", max_rank, "only flats up to this rank");

  auto* ar_cmd = app.add_subcommand("ar", "anti-Ramsey number");
  add_spec(ar_cmd);
  ar_cmd->add_option("--t", t, "number of disjoint rainbow bases")->required();
  ar_cmd->add_option("--method", method, "formula, brute or both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));

  auto* extremal_cmd = app.add_subcommand(
      "extremal", "extremal coloring achieving the anti-Ramsey value");
  add_spec(extremal_cmd);
  extremal_cmd->add_option("--t", t, "number of disjoint rainbow bases")
      ->required();
  extremal_cmd->add_option("--out", out_path, "write the coloring here");

  auto* check_cmd = app.add_subcommand(
      "check", "search a coloring for t disjoint rainbow bases");
  add_spec(check_cmd);
  check_cmd->add_option("--t", t, "number of disjoint rainbow bases")
      ->required();
  check_cmd->add_option("--coloring", coloring_path, "coloring file")
      ->required();

  auto* pack_cmd = app.add_subcommand(
      "pack", "disjoint bases, or rainbow packing when a coloring is given");
  add_spec(pack_cmd);
  pack_cmd->add_option("--t", t, "number of disjoint bases")->required();
  pack_cmd->add_option("--coloring", coloring_path, "coloring file");

  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check formula, closed form and brute force on a grid");
  verify_cmd->add_option("family", family_name,
                         "graphic-Kn, bicircular-Kn, signed-Kn, uniform or "
                         "cube")
      ->required();
  verify_cmd->add_option("--n", n_text, "n range, e.g. 3..6 (cube: |T|)")
      ->required();
  verify_cmd->add_option("--k", k_text, "uniform rank range");
  verify_cmd->add_option("--d", d_text, "cube dimension range");
  verify_cmd->add_option("--t", t_text, "t range, e.g. 1..3");
  verify_cmd->add_option("--budget", budget, "search/enumeration node budget");
  verify_cmd->add_option("--jobs", jobs, "worker threads");

  try {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("mar");
    for (const std::string& a : args) full.push_back(a);
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& a : full) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (rank_cmd->parsed()) {
      Matroid m = io::parse_spec_file(spec_path);
      out << "matroid = " << m.family_tag() << "\n";
      Subset s = m.ground();
      if (!subset_text.empty()) {
        s = Subset::of(m.ground_size(), detail::parse_id_list(subset_text));
        out << "subset = " << s.to_string() << "\n";
      }
      out << "rank = " << m.rank(s) << "\n";
      return kExitSuccess;
    }

    if (flats_cmd->parsed()) {
      Matroid m = io::parse_spec_file(spec_path);
      auto flats = m.flats(max_rank, budget);
      out << "matroid = " << m.family_tag() << "\n";
      out << "flats = " << flats.size() << "\n";
      for (const Flat& f : flats) out << to_string(f) << "\n";
      return kExitSuccess;
    }

    if (ar_cmd->parsed()) {
      Matroid m = io::parse_spec_file(spec_path);
      out << "matroid = " << m.family_tag() << "\n";
      out << "t = " << t << "\n";
      std::optional<int> formula_value;
      std::optional<int> brute_value;
      if (method == "formula" || method == "both") {
        ArResult r = ar_number(m, t, budget);
        formula_value = r.value;
        out << "ar = " << r.value << "\n";
        out << "branch = " << to_string(r.branch) << "\n";
        if (r.argmax_flat)
          out << "argmax_flat = " << to_string(*r.argmax_flat) << "\n";
        if (r.degenerate_flat)
          out << "degenerate_flat = " << to_string(*r.degenerate_flat) << "\n";
      }
      if (method == "brute" || method == "both") {
        brute_value = ar_bruteforce(m, t, budget);
        out << "ar_brute = " << *brute_value << "\n";
      }
      if (method == "both") {
        bool agree = *formula_value == *brute_value;
        out << "agree = " << (agree ? "yes" : "no") << "\n";
        if (!agree) return kExitNegative;
      }
      return kExitSuccess;
    }

    if (extremal_cmd->parsed()) {
      Matroid m = io::parse_spec_file(spec_path);
      ExtremalColoring ex = extremal_coloring(m, t, budget);
      std::vector<std::string> comments = {
          "matroid = " + m.family_tag(),
          "t = " + std::to_string(t),
          "colors = " + std::to_string(ex.coloring.num_colors()),
          "branch = " + to_string(ex.branch),
          "flat = " + to_string(ex.flat_used),
          "shared_color = " + (ex.shared_color
                                   ? std::to_string(*ex.shared_color)
                                   : std::string("none")),
      };
      if (out_path.empty()) {
        io::write_coloring(out, ex.coloring, comments);
      } else {
        std::ofstream file(out_path);
        if (!file)
          throw Error("cannot open output file '" + out_path + "'");
        io::write_coloring(file, ex.coloring, comments);
        for (const std::string& c : comments) out << "# " << c << "\n";
        out << "wrote " << out_path << "\n";
      }
      return kExitSuccess;
    }

    if (check_cmd->parsed() ||
        (pack_cmd->parsed() && !coloring_path.empty())) {
      Matroid m = io::parse_spec_file(spec_path);
      Coloring c = io::read_coloring_file(coloring_path, m.ground_size());
      out << "matroid = " << m.family_tag() << "\n";
      out << "t = " << t << "\n";
      auto packing = find_rainbow_bases(m, c, t, budget);
      if (!packing) {
        out << "no packing: " << t
            << " pairwise disjoint rainbow bases do not exist under this "
               "coloring\n";
        return kExitNegative;
      }
      out << "found " << t << " pairwise disjoint rainbow bases\n";
      detail::print_packing(out, *packing);
      return kExitSuccess;
    }

    if (pack_cmd->parsed()) {
      Matroid m = io::parse_spec_file(spec_path);
      out << "matroid = " << m.family_tag() << "\n";
      out << "t = " << t << "\n";
      PackingCertificate cert = has_disjoint_bases(m, t, budget);
      if (!cert.feasible) {
        out << "infeasible: violating flat "
            << detail::violation_text(*cert.violation, "|E| - |F|") << "\n";
        return kExitNegative;
      }
      out << "feasible: " << t << " pairwise disjoint bases exist\n";
      if (cert.witness_budget_exhausted) {
        out << "witness search exceeded the node budget\n";
        return kExitBudget;
      }
      detail::print_packing(out, *cert.witness);
      return kExitSuccess;
    }

    if (verify_cmd->parsed()) {
      FamilyParams::Family family;
      if (family_name == "graphic-Kn")
        family = FamilyParams::Family::graphic_kn;
      else if (family_name == "bicircular-Kn")
        family = FamilyParams::Family::bicircular_kn;
      else if (family_name == "signed-Kn")
        family = FamilyParams::Family::signed_kn;
      else if (family_name == "uniform")
        family = FamilyParams::Family::uniform;
      else if (family_name == "cube")
        family = FamilyParams::Family::cube;
      else
        throw ContractError("unknown family '" + family_name + "'");

      detail::Range nr = detail::parse_range(n_text);
      detail::Range tr = detail::parse_range(t_text);
      detail::Range kr{0, 0}, dr{0, 0};
      if (family == FamilyParams::Family::uniform) {
        if (k_text.empty())
          throw ContractError("family 'uniform' requires --k");
        kr = detail::parse_range(k_text);
      }
      if (family == FamilyParams::Family::cube) {
        if (d_text.empty()) throw ContractError("family 'cube' requires --d");
        dr = detail::parse_range(d_text);
      }

      std::vector<FamilyParams> points;
      for (int n = nr.lo; n <= nr.hi; ++n)
        for (int k = kr.lo; k <= kr.hi; ++k)
          for (int d = dr.lo; d <= dr.hi; ++d) {
            if (family == FamilyParams::Family::uniform && k > n) continue;
            for (int tv = tr.lo; tv <= tr.hi; ++tv) {
              FamilyParams p;
              p.family = family;
              p.t = tv;
              if (family == FamilyParams::Family::cube) {
                p.tsize = n;
                p.d = d;
              } else {
                p.n = n;
                p.k = k;
              }
              points.push_back(p);
            }
          }

      auto reports = cross_verify_grid(points, budget, jobs);
      int disagreements = 0;
      for (const VerifyReport& r : reports) {
        out << r.params.to_string() << ": |E|=" << r.ground_size
            << " rank=" << r.rank << " formula=" << r.ar_formula
            << " closed=" << r.ar_closed << " brute=";
        if (r.ar_brute)
          out << *r.ar_brute;
        else
          out << "-";
        out << " agree=" << (r.agree ? "yes" : "no") << "\n";
        if (!r.agree) ++disagreements;
      }
      out << "points = " << reports.size()
          << ", disagreements = " << disagreements << "\n";
      return disagreements == 0 ? kExitSuccess : kExitNegative;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace mar::cli
